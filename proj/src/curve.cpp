#include "torcert/curve.hpp"

#include <stdexcept>
#include <vector>

namespace torcert {

static WeierstrassCurve finish(WeierstrassCurve e) {
  cpp_int a1 = e.a1, a2 = e.a2, a3 = e.a3, a4 = e.a4, a6 = e.a6;
  e.b2 = a1 * a1 + 4 * a2;
  e.b4 = 2 * a4 + a1 * a3;
  e.b6 = a3 * a3 + 4 * a6;
  e.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  e.disc = -e.b2 * e.b2 * e.b8 - 8 * e.b4 * e.b4 * e.b4 - 27 * e.b6 * e.b6 +
           9 * e.b2 * e.b4 * e.b6;
  if (e.disc == 0) throw std::invalid_argument("WeierstrassCurve: singular (disc = 0)");
  return e;
}

WeierstrassCurve WeierstrassCurve::short_form(i64 a4, i64 a6, std::optional<i64> cm) {
  WeierstrassCurve e;
  e.a4 = a4;
  e.a6 = a6;
  e.cm_disc = cm;
  return finish(e);
}

WeierstrassCurve WeierstrassCurve::long_form(i64 a1, i64 a2, i64 a3, i64 a4, i64 a6,
                                             std::optional<i64> cm) {
  WeierstrassCurve e;
  e.a1 = a1; e.a2 = a2; e.a3 = a3; e.a4 = a4; e.a6 = a6;
  e.cm_disc = cm;
  return finish(e);
}

static u64 mod_u64(const cpp_int& v, u64 p) {
  cpp_int r = v % p;
  if (r < 0) r += p;
  return (u64)r;
}

std::optional<ReducedCurve> reduce_at(const WeierstrassCurve& e, u64 p) {
  if (p < 5 || !is_prime_u64(p))
    throw std::invalid_argument("reduce_at: p must be a prime >= 5");
  if (!e.good_at(p)) return std::nullopt;
  ReducedCurve r;
  r.p = p;
  r.c3 = 4 % p;
  r.c2 = mod_u64(e.b2, p);
  r.c1 = mod_u64(2 * e.b4, p);
  r.c0 = mod_u64(e.b6, p);
  return r;
}

i64 cubic_char_sum(u64 p, u64 c3, u64 c2, u64 c1, u64 c0) {
  // chi table for all residues; p is odd so (p-1)/2 squares besides 0
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (u64 x = 1; x <= (p - 1) / 2; ++x) chi[mulmod(x, x, p)] = 1;
  i64 sum = 0;
  for (u64 x = 0; x < p; ++x) {
    u64 v = mulmod(mulmod(mulmod(c3, x, p) + c2, x, p) + c1, x, p) + c0;
    if (v >= p) v -= p;
    sum += chi[v];
  }
  return sum;
}

FrobeniusData count_points_fp(const ReducedCurve& r) {
  i64 s = cubic_char_sum(r.p, r.c3, r.c2, r.c1, r.c0);
  FrobeniusData out;
  out.p = r.p;
  out.n_p = (u64)((i64)r.p + 1 + s);
  out.a_p = -s;
  if ((u128)(out.a_p * out.a_p) > 4 * (u128)r.p)
    throw std::logic_error("count_points_fp: Hasse bound violated");
  return out;
}

u64 count_points_fp2_enum(const ReducedCurve& r) {
  QuadExt k2(r.p);
  u64 n = 1;  // infinity
  for (u64 a = 0; a < r.p; ++a) {
    for (u64 b = 0; b < r.p; ++b) {
      QuadExt::Elem x{a, b};
      QuadExt::Elem v = k2.add(
          k2.mul(k2.add(k2.mul(k2.add(k2.mul(k2.embed(r.c3), x), k2.embed(r.c2)), x),
                        k2.embed(r.c1)),
                 x),
          k2.embed(r.c0));
      if (k2.is_zero(v)) n += 1;
      else if (k2.is_square(v)) n += 2;
    }
  }
  return n;
}

u64 count_points_fp2(const ReducedCurve& r) {
  FrobeniusData f = count_points_fp(r);
  i64 t2 = f.a_p * f.a_p - 2 * (i64)r.p;  // trace of Frobenius^2
  u64 n = (u64)((i64)(r.p * r.p) + 1 - t2);
  if (r.p <= 50 && n != count_points_fp2_enum(r))
    throw std::logic_error("count_points_fp2: trace identity disagrees with enumeration");
  return n;
}

bool is_supersingular_count(const WeierstrassCurve& e, u64 p) {
  auto r = reduce_at(e, p);
  if (!r) throw std::invalid_argument("is_supersingular_count: bad reduction");
  return count_points_fp(*r).a_p == 0;
}

bool is_supersingular_deuring(i64 cm_disc, u64 p) {
  if (p < 5 || !is_prime_u64(p))
    throw std::invalid_argument("is_supersingular_deuring: p must be a prime >= 5");
  if (cm_disc >= 0) throw std::invalid_argument("is_supersingular_deuring: disc must be negative");
  if (conductor_of(cm_disc) % p == 0)
    throw std::invalid_argument("is_supersingular_deuring: p divides the order's conductor");
  return kronecker(cm_disc, (i64)p) != 1;
}

}  // namespace torcert
