#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "torcert/curve.hpp"

namespace torcert {

using boost::multiprecision::cpp_rational;

struct RatPoint {
  cpp_rational x, y;
  bool infinity = false;
};

struct TorsionGroup {
  u64 order = 1;       // group order including identity
  unsigned n1 = 1, n2 = 1;  // Z/n1 x Z/n2 with n1 | n2, n1 * n2 = order
  std::vector<RatPoint> points;      // affine torsion points, original model
  std::vector<RatPoint> generators;  // empty for the trivial group
  u64 gcd_bound = 0;                 // gcd of #E(F_p) over the sample primes
  std::vector<u64> sample_primes;
};

// exact rational torsion; works through the integral model
// Y^2 = X^3 + b2 X^2 + 8 b4 X + 16 b6 (X = 4x, Y = 8y + 4 a1 x + 4 a3),
// integer-coordinate candidates from divisor bounds, orders confirmed by
// exact rational arithmetic capped by the reduction gcd
TorsionGroup torsion_over_q(const WeierstrassCurve& e);

// independent slow route: scan |X| <= bound on the integral model for
// perfect-square y^2, confirm orders by arithmetic alone (no reduction
// data); same output contract as torsion_over_q minus the gcd fields
TorsionGroup bounded_torsion_search(const WeierstrassCurve& e, u64 bound);

// element of Q(sqrt m): a + b sqrt(m)
struct QuadQ {
  cpp_rational a, b;
  bool operator==(const QuadQ&) const = default;
};

struct QuadPoint {
  QuadQ x, y;
  bool infinity = false;
};

// all points of exact order n on e over the quadratic field of the given
// fundamental discriminant, 1 <= n <= 12; assembled from rational torsion,
// the quadratic twist's rational torsion, and 2-division cubic roots in K,
// closed under the group law and completed under halving (doubling maps
// everything into the assembled span). Each point's order is confirmed
// exactly, so no wrong point can appear; the list can only be short in one
// corner: 2-power points when E[2](K) has exactly one nontrivial element.
std::vector<QuadPoint> torsion_points_quadratic(const WeierstrassCurve& e,
                                                i64 field_disc, unsigned n);

}  // namespace torcert
