#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>

#include "CLI11.hpp"
#include "torcert/dataset.hpp"
#include "torcert/density.hpp"
#include "torcert/kernels.hpp"

using namespace torcert;

namespace {

double time_ms(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool identical) {
  std::cout << std::left << std::setw(26) << name << std::right << std::fixed
            << std::setprecision(1) << std::setw(10) << serial_ms << " ms" << std::setw(10)
            << parallel_ms << " ms" << std::setw(8) << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x   "
            << (identical ? "identical" : "DIFFERS") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial reference vs OpenMP kernels"};
  unsigned workers = 0;
  u64 sieve_x = 4000000, classify_x = 1000000, trace_x = 50000;
  app.add_option("--workers", workers, "worker threads (default: TORCERT_WORKERS or all)");
  app.add_option("--sieve-x", sieve_x, "sieve bound");
  app.add_option("--classify-x", classify_x, "splitting classification bound");
  app.add_option("--trace-x", trace_x, "trace scan bound");
  CLI11_PARSE(app, argc, argv);

  unsigned w = resolve_workers(workers);
  std::cout << "workers: " << w << "\n\n";
  std::cout << std::left << std::setw(26) << "kernel" << std::right << std::setw(13)
            << "serial" << std::setw(13) << "parallel" << std::setw(9) << "speedup"
            << "   outputs\n";

  {
    std::vector<u64> a, b;
    double ts = time_ms([&] { a = sieve_primes_serial(sieve_x); });
    double tp = time_ms([&] { b = sieve_primes_parallel(sieve_x, w); });
    row("sieve(" + std::to_string(sieve_x) + ")", ts, tp, a == b);
  }

  {
    auto primes = sieve_primes_serial(classify_x);
    auto f = NumberFieldSpec::parse("x^3 - 2");
    auto code = [&](u64 p) -> unsigned char {
      auto rd = residue_degrees(f, p);
      if (rd.ramified) return 2;
      return rd.degrees.size() == 1 ? 1 : 0;
    };
    std::vector<unsigned char> a, b;
    double ts = time_ms([&] { a = classify_primes_serial(primes, code); });
    double tp = time_ms([&] { b = classify_primes_parallel(primes, code, w); });
    row("splitting(" + std::to_string(classify_x) + ")", ts, tp, a == b);
  }

  {
    auto e = find_curve("d3-weier")->curve();
    TraceScan a, b;
    double ts = time_ms([&] { a = trace_scan_serial(e, trace_x); });
    double tp = time_ms([&] { b = trace_scan_parallel(e, trace_x, w); });
    row("trace-scan(" + std::to_string(trace_x) + ")", ts, tp,
        a.primes == b.primes && a.traces == b.traces);
  }

  return 0;
}
