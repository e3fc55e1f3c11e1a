#include "torcert/density.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "torcert/kernels.hpp"

namespace torcert {

namespace {

constexpr unsigned kCheckpoints = 200;

// codes from the per-prime classifiers
constexpr unsigned char kSkip = 0xFF;
constexpr unsigned char kEvent = 1;
constexpr unsigned char kCounted = 0;

// sequential fold: totals plus evenly spaced running-density checkpoints
void fold(DensityReport& rep, const std::vector<u64>& primes,
          const std::vector<unsigned char>& codes) {
  u64 counted = 0, events = 0;
  size_t usable = 0;
  for (unsigned char c : codes)
    if (c != kSkip) ++usable;
  size_t step = usable > kCheckpoints ? (usable + kCheckpoints - 1) / kCheckpoints : 1;
  for (size_t i = 0; i < primes.size(); ++i) {
    if (codes[i] == kSkip) {
      ++rep.ramified_skipped;
      continue;
    }
    ++counted;
    if (codes[i] == kEvent) ++events;
    if (counted % step == 0)
      rep.series.emplace_back(primes[i], (double)events / (double)counted);
  }
  rep.total_primes = counted;
  rep.events = events;
  rep.density = counted ? (double)events / (double)counted : 0.0;
  if (rep.series.empty() || rep.series.back().first != primes.back())
    if (counted) rep.series.emplace_back(primes.back(), rep.density);
}

void finish_verdict(DensityReport& rep) {
  if (rep.lower_bound_only)
    rep.verdict = rep.density >= rep.target - rep.tolerance;
  else
    rep.verdict = rep.density >= rep.target - rep.tolerance &&
                  rep.density <= rep.target + rep.tolerance;
}

void validate_quadratic_disc(i64 D) {
  if (D == 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
    throw std::invalid_argument("not a quadratic discriminant");
}

DensityReport lemma_report(i64 D, const NumberFieldSpec& f, u64 x, unsigned workers,
                           bool degree_two) {
  validate_quadratic_disc(D);
  if (x < 1000) throw std::invalid_argument("density bound must be at least 1000");
  DensityReport rep;
  rep.kind = degree_two ? "lemma22" : "lemma21";
  rep.x = x;
  rep.tolerance = 0.01;
  rep.lower_bound_only = true;
  double d = (double)f.degree;
  rep.target = degree_two ? 1.0 / d : 1.0 / (2.0 * d);
  {
    std::ostringstream os;
    os << "D=" << D << " f=" << f.display() << " X=" << x;
    rep.description = os.str();
  }

  auto primes = sieve_primes(x, workers);
  auto code_of = [&](u64 p) -> unsigned char {
    if (kronecker(D, (i64)p) == 0) return kSkip;
    auto rd = residue_degrees(f, p);
    if (rd.ramified) return kSkip;
    if (kronecker(D, (i64)p) != -1) return kCounted;
    unsigned want = degree_two ? 2 : 1;
    for (unsigned deg : rd.degrees)
      if (deg == want) return kEvent;
    return kCounted;
  };
  auto codes = classify_primes_parallel(primes, code_of, workers);
  fold(rep, primes, codes);
  finish_verdict(rep);

  if (degree_two) {
    if (!subfield_check_contained(D, f)) {
      rep.hypothesis_ok = false;
      rep.hypothesis_note = "k does not appear to lie in K: some inert prime has an odd residue degree";
    }
  } else {
    if (!subfield_check_disjoint(D, f)) {
      rep.hypothesis_ok = false;
      rep.hypothesis_note = "K and k do not look linearly disjoint: no inert prime with a degree-1 factor";
    }
  }
  return rep;
}

}  // namespace

DensityReport density_inert(i64 D, u64 x, unsigned workers) {
  validate_quadratic_disc(D);
  if (x < 1000) throw std::invalid_argument("density bound must be at least 1000");
  DensityReport rep;
  rep.kind = "inert";
  rep.x = x;
  rep.target = 0.5;
  rep.tolerance = 0.005;
  {
    std::ostringstream os;
    os << "D=" << D << " X=" << x;
    rep.description = os.str();
  }
  auto primes = sieve_primes(x, workers);
  auto code_of = [&](u64 p) -> unsigned char {
    int k = kronecker(D, (i64)p);
    if (k == 0) return kSkip;
    return k == -1 ? kEvent : kCounted;
  };
  auto codes = classify_primes_parallel(primes, code_of, workers);
  fold(rep, primes, codes);
  finish_verdict(rep);
  return rep;
}

DensityReport density_lemma21(i64 D, const NumberFieldSpec& f, u64 x, unsigned workers) {
  return lemma_report(D, f, x, workers, false);
}

DensityReport density_lemma22(i64 D, const NumberFieldSpec& f, u64 x, unsigned workers) {
  return lemma_report(D, f, x, workers, true);
}

DensityReport density_congruence(u64 m, u64 a, u64 x, unsigned workers) {
  if (m == 0) throw std::invalid_argument("modulus must be positive");
  if (m == 1) a = 0;
  else if (std::gcd(a % m, m) != 1)
    throw std::invalid_argument("residue must be coprime to the modulus");
  if (x < 1000) throw std::invalid_argument("density bound must be at least 1000");
  DensityReport rep;
  rep.kind = "congruence";
  rep.x = x;
  rep.target = 1.0 / (double)euler_phi(m);
  rep.tolerance = 0.01;
  {
    std::ostringstream os;
    os << "p = " << a << " mod " << m << " X=" << x;
    rep.description = os.str();
  }
  auto primes = sieve_primes(x, workers);
  auto code_of = [&](u64 p) -> unsigned char {
    return p % m == a % m ? kEvent : kCounted;
  };
  auto codes = classify_primes_parallel(primes, code_of, workers);
  fold(rep, primes, codes);
  finish_verdict(rep);
  return rep;
}

std::string density_csv(const DensityReport& r) {
  std::ostringstream os;
  os << "x,running_density\n";
  os.precision(6);
  os << std::fixed;
  for (const auto& [p, d] : r.series) os << p << "," << d << "\n";
  return os.str();
}

}  // namespace torcert
