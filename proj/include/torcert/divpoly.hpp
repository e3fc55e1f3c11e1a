#pragma once

#include <vector>

#include "torcert/curve.hpp"

namespace torcert {

// dense integer polynomial, constant term first
using ZPoly = std::vector<cpp_int>;

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b);
ZPoly zpoly_scale(const ZPoly& a, const cpp_int& c);
int zpoly_deg(const ZPoly& a);  // -1 for the zero polynomial
u64 zpoly_eval_mod(const ZPoly& a, u64 x, u64 p);

// n-division polynomial of e as a polynomial in x alone, 1 <= n <= 30.
// Odd n: psi_n itself lies in Z[x]. Even n: psi_n = (2y + a1 x + a3) u_n
// with u_n in Z[x]; returned is psi_2 * psi_n = F * u_n where
// F = 4x^3 + b2 x^2 + 2 b4 x + b6. Either way the roots are exactly the
// x-coordinates of the nontrivial n-torsion (division_polynomial(e,2) = F).
ZPoly division_polynomial(const WeierstrassCurve& e, unsigned n);

}  // namespace torcert
