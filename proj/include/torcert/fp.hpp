#pragma once

#include "torcert/arith.hpp"

namespace torcert {

// arithmetic mod an odd prime p >= 3
struct PrimeField {
  u64 p;

  explicit PrimeField(u64 p_);

  u64 reduce(i64 v) const {
    i64 r = v % (i64)p;
    return (u64)(r < 0 ? r + (i64)p : r);
  }
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a ? p - a : 0; }
  u64 mul(u64 a, u64 b) const { return mulmod(a, b, p); }
  u64 pow(u64 a, u64 e) const { return powmod(a, e, p); }
  u64 inv(u64 a) const;  // throws on a == 0
  bool is_square(u64 a) const;  // Euler criterion; 0 counts as a square
};

// F_p[t] / (t^2 - ns), ns the least positive nonresidue mod p
struct QuadExt {
  PrimeField fp;
  u64 ns;

  explicit QuadExt(u64 p_);

  struct Elem {
    u64 a, b;  // a + b t
    bool operator==(const Elem&) const = default;
  };

  Elem make(u64 a, u64 b) const { return {a % fp.p, b % fp.p}; }
  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  Elem embed(u64 a) const { return {a % fp.p, 0}; }

  Elem add(Elem x, Elem y) const { return {fp.add(x.a, y.a), fp.add(x.b, y.b)}; }
  Elem sub(Elem x, Elem y) const { return {fp.sub(x.a, y.a), fp.sub(x.b, y.b)}; }
  Elem neg(Elem x) const { return {fp.neg(x.a), fp.neg(x.b)}; }
  Elem mul(Elem x, Elem y) const {
    // (a+bt)(c+dt) = ac + ns*bd + (ad+bc) t
    u64 ac = fp.mul(x.a, y.a), bd = fp.mul(x.b, y.b);
    u64 cross = fp.add(fp.mul(x.a, y.b), fp.mul(x.b, y.a));
    return {fp.add(ac, fp.mul(ns, bd)), cross};
  }
  u64 norm(Elem x) const { return fp.sub(fp.mul(x.a, x.a), fp.mul(ns, fp.mul(x.b, x.b))); }
  Elem conj(Elem x) const { return {x.a, fp.neg(x.b)}; }
  Elem inv(Elem x) const;  // throws on zero
  Elem pow(Elem x, u128 e) const;
  Elem frobenius(Elem x) const { return pow(x, fp.p); }
  bool is_zero(Elem x) const { return x.a == 0 && x.b == 0; }
  // x is a square in F_{p^2} iff norm(x) is a square in F_p
  bool is_square(Elem x) const { return is_zero(x) || fp.is_square(norm(x)); }
};

}  // namespace torcert
