#include "torcert/fp.hpp"

#include <stdexcept>

namespace torcert {

PrimeField::PrimeField(u64 p_) : p(p_) {
  if (p < 3 || !is_prime_u64(p))
    throw std::invalid_argument("PrimeField: p must be an odd prime");
}

u64 PrimeField::inv(u64 a) const {
  a %= p;
  if (a == 0) throw std::domain_error("PrimeField::inv: zero");
  return powmod(a, p - 2, p);
}

bool PrimeField::is_square(u64 a) const {
  a %= p;
  if (a == 0) return true;
  return powmod(a, (p - 1) / 2, p) == 1;
}

QuadExt::QuadExt(u64 p_) : fp(p_), ns(0) {
  for (u64 c = 2; c < fp.p; ++c) {
    if (!fp.is_square(c)) { ns = c; break; }
  }
  if (ns == 0) throw std::logic_error("QuadExt: no nonresidue found");  // impossible for p >= 3
}

QuadExt::Elem QuadExt::inv(Elem x) const {
  if (is_zero(x)) throw std::domain_error("QuadExt::inv: zero");
  // x^-1 = conj(x) / norm(x)
  u64 ninv = fp.inv(norm(x));
  return {fp.mul(x.a, ninv), fp.mul(fp.neg(x.b), ninv)};
}

QuadExt::Elem QuadExt::pow(Elem x, u128 e) const {
  Elem r = one();
  while (e) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

}  // namespace torcert
