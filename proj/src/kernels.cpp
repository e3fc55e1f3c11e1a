#include "torcert/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace torcert {

namespace {

constexpr u64 kSieveCeiling = 100000000;  // 1e8
constexpr u64 kSegment = 1 << 20;

void check_sieve_bound(u64 x) {
  if (x > kSieveCeiling) throw std::invalid_argument("sieve bound exceeds 1e8");
}

}  // namespace

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("TORCERT_WORKERS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return (unsigned)v;
  }
  int n = omp_get_max_threads();
  return n > 0 ? (unsigned)n : 1;
}

std::vector<u64> sieve_primes_serial(u64 x) {
  check_sieve_bound(x);
  std::vector<u64> out;
  if (x < 2) return out;
  std::vector<bool> composite(x + 1, false);
  for (u64 i = 2; i * i <= x; ++i) {
    if (composite[i]) continue;
    for (u64 j = i * i; j <= x; j += i) composite[j] = true;
  }
  for (u64 i = 2; i <= x; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

std::vector<u64> sieve_primes_parallel(u64 x, unsigned workers) {
  check_sieve_bound(x);
  if (x < 2) return {};
  u64 root = 1;
  while ((root + 1) * (root + 1) <= x) ++root;
  std::vector<u64> base = sieve_primes_serial(root);

  u64 nseg = (x - 1) / kSegment + 1;
  std::vector<std::vector<u64>> per_segment(nseg);
  unsigned w = resolve_workers(workers);

#pragma omp parallel for num_threads(w) schedule(dynamic)
  for (long long s = 0; s < (long long)nseg; ++s) {
    u64 lo = (u64)s * kSegment;
    u64 hi = std::min(x, lo + kSegment - 1);
    std::vector<bool> composite(hi - lo + 1, false);
    for (u64 p : base) {
      u64 start = std::max(p * p, (lo + p - 1) / p * p);
      for (u64 j = start; j <= hi; j += p) composite[j - lo] = true;
    }
    auto& out = per_segment[s];
    for (u64 v = std::max<u64>(lo, 2); v <= hi; ++v)
      if (!composite[v - lo]) out.push_back(v);
  }

  std::vector<u64> out;
  for (auto& seg : per_segment) out.insert(out.end(), seg.begin(), seg.end());
  return out;
}

std::vector<u64> sieve_primes(u64 x, unsigned workers) {
  return sieve_primes_parallel(x, workers);
}

std::vector<unsigned char> classify_primes_serial(
    const std::vector<u64>& primes, const std::function<unsigned char(u64)>& f) {
  std::vector<unsigned char> out(primes.size());
  for (size_t i = 0; i < primes.size(); ++i) out[i] = f(primes[i]);
  return out;
}

std::vector<unsigned char> classify_primes_parallel(
    const std::vector<u64>& primes, const std::function<unsigned char(u64)>& f,
    unsigned workers) {
  std::vector<unsigned char> out(primes.size());
  unsigned w = resolve_workers(workers);
#pragma omp parallel for num_threads(w) schedule(dynamic, 64)
  for (long long i = 0; i < (long long)primes.size(); ++i) out[i] = f(primes[i]);
  return out;
}

namespace {

TraceScan trace_scan_impl(const WeierstrassCurve& e, u64 x, unsigned workers,
                          bool parallel) {
  std::vector<u64> primes = sieve_primes_serial(x);
  // good primes >= 5 only
  std::vector<u64> good;
  for (u64 p : primes)
    if (p >= 5 && e.good_at(p)) good.push_back(p);

  TraceScan scan;
  scan.primes = std::move(good);
  scan.traces.resize(scan.primes.size());
  auto one = [&](size_t i) {
    auto rc = reduce_at(e, scan.primes[i]);
    scan.traces[i] = count_points_fp(*rc).a_p;
  };
  if (parallel) {
    unsigned w = resolve_workers(workers);
#pragma omp parallel for num_threads(w) schedule(dynamic, 16)
    for (long long i = 0; i < (long long)scan.primes.size(); ++i) one((size_t)i);
  } else {
    for (size_t i = 0; i < scan.primes.size(); ++i) one(i);
  }
  return scan;
}

}  // namespace

TraceScan trace_scan_serial(const WeierstrassCurve& e, u64 x) {
  return trace_scan_impl(e, x, 1, false);
}

TraceScan trace_scan_parallel(const WeierstrassCurve& e, u64 x, unsigned workers) {
  return trace_scan_impl(e, x, workers, true);
}

}  // namespace torcert
