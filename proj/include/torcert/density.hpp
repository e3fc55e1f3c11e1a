#pragma once

#include <string>
#include <utility>
#include <vector>

#include "torcert/splitting.hpp"

namespace torcert {

struct DensityReport {
  std::string kind;  // "inert" | "lemma21" | "lemma22" | "congruence"
  std::string description;
  u64 x = 0;
  u64 total_primes = 0;  // denominator after ramified exclusions
  u64 ramified_skipped = 0;
  u64 events = 0;
  double density = 0.0;
  double target = 0.0;
  double tolerance = 0.0;
  bool lower_bound_only = false;  // verdict tests density >= target - tol
  bool hypothesis_ok = true;
  std::string hypothesis_note;
  bool verdict = false;
  std::vector<std::pair<u64, double>> series;  // ~200 checkpoints of (p, running density)
};

// proportion of unramified primes <= x that are inert in the order of discriminant D
DensityReport density_inert(i64 D, u64 x, unsigned workers = 0);

// primes inert in k with a degree-1 prime of K above; bound 1/(2d) assuming K and k
// are linearly disjoint (spot-checked; a failed check is flagged, not fatal)
DensityReport density_lemma21(i64 D, const NumberFieldSpec& f, u64 x, unsigned workers = 0);

// primes inert in k with a degree-2 prime of K above; bound 1/d assuming k lies in K
DensityReport density_lemma22(i64 D, const NumberFieldSpec& f, u64 x, unsigned workers = 0);

// primes congruent to a mod m among all primes <= x; target 1/phi(m)
DensityReport density_congruence(u64 m, u64 a, u64 x, unsigned workers = 0);

// two columns "x,running_density", one row per checkpoint
std::string density_csv(const DensityReport& r);

}  // namespace torcert
