#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "torcert/arith.hpp"
#include "torcert/fp.hpp"

namespace torcert {

using boost::multiprecision::cpp_int;

// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Z
struct WeierstrassCurve {
  i64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  std::optional<i64> cm_disc;

  cpp_int b2, b4, b6, b8, disc;

  static WeierstrassCurve short_form(i64 a4, i64 a6, std::optional<i64> cm = {});
  static WeierstrassCurve long_form(i64 a1, i64 a2, i64 a3, i64 a4, i64 a6,
                                    std::optional<i64> cm = {});

  bool good_at(u64 p) const { return disc % p != 0; }
};

// the completed-square model mod p: y'^2 = 4x^3 + b2 x^2 + 2 b4 x + b6,
// with y' = 2y + a1 x + a3; valid for p >= 5 and good reduction
struct ReducedCurve {
  u64 p;
  u64 c3, c2, c1, c0;  // cubic coefficients mod p (c3 = 4)
};

// nullopt on bad reduction; throws if p < 5 or p not prime
std::optional<ReducedCurve> reduce_at(const WeierstrassCurve& e, u64 p);

struct FrobeniusData {
  u64 p;
  u64 n_p;   // #E(F_p) including infinity
  i64 a_p;   // p + 1 - n_p, |a_p| <= 2 sqrt(p)
};

FrobeniusData count_points_fp(const ReducedCurve& r);

// #E(F_{p^2}) = p^2 + 1 - (a_p^2 - 2p); self-checked by enumeration for p <= 50
u64 count_points_fp2(const ReducedCurve& r);
u64 count_points_fp2_enum(const ReducedCurve& r);  // O(p^2) direct count

// sum over x in F_p of chi(c3 x^3 + c2 x^2 + c1 x + c0); #points = p + 1 + sum
i64 cubic_char_sum(u64 p, u64 c3, u64 c2, u64 c1, u64 c0);

// a_p == 0; requires good reduction at p >= 5 (throws otherwise)
bool is_supersingular_count(const WeierstrassCurve& e, u64 p);

// kronecker(D, p) != +1, p >= 5 prime not dividing the conductor of D
bool is_supersingular_deuring(i64 cm_disc, u64 p);

}  // namespace torcert
