#include <doctest.h>

#include <stdexcept>

#include "torcert/fp.hpp"

using namespace torcert;

TEST_CASE("PrimeField basics") {
  PrimeField f7(7);
  CHECK(f7.inv(3) == 5);
  CHECK(f7.mul(f7.inv(3), 3) == 1);
  CHECK(f7.reduce(-1) == 6);
  CHECK(f7.reduce(-15) == 6);
  CHECK(f7.sub(2, 5) == 4);
  CHECK_THROWS_AS(f7.inv(0), std::domain_error);
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(2), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(15), std::invalid_argument);
}

TEST_CASE("field inverse everywhere") {
  for (u64 p : {3ull, 5ull, 101ull, 65537ull}) {
    PrimeField f(p);
    for (u64 a = 1; a < std::min(p, (u64)500); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  }
}

TEST_CASE("square counts in F_p") {
  for (u64 p = 3; p <= 200; ++p) {
    if (!is_prime_u64(p)) continue;
    PrimeField f(p);
    u64 squares = 0;
    for (u64 a = 0; a < p; ++a)
      if (f.is_square(a)) ++squares;
    CHECK(squares == (p + 1) / 2);
  }
}

TEST_CASE("QuadExt construction picks a nonresidue") {
  QuadExt k5(5);
  CHECK(k5.ns == 2);
  QuadExt k7(7);
  CHECK(k7.ns == 3);
  // t^2 = ns
  auto t = k5.make(0, 1);
  CHECK(k5.mul(t, t) == k5.embed(2));
}

TEST_CASE("QuadExt pinned arithmetic") {
  QuadExt k5(5);
  auto x = k5.make(1, 1);  // 1 + t
  CHECK(k5.pow(x, 25) == x);         // Frobenius^2 = id, and x^(p^2) = x
  CHECK(k5.frobenius(x) == k5.pow(x, 5));
  auto inv = k5.inv(x);
  CHECK(k5.mul(x, inv) == k5.one());
  CHECK_THROWS_AS(k5.inv(k5.zero()), std::domain_error);
}

TEST_CASE("multiplicative group order p^2 - 1") {
  for (u64 p = 3; p <= 200; ++p) {
    if (!is_prime_u64(p)) continue;
    QuadExt k(p);
    for (u64 a = 0; a < p; ++a)
      for (u64 b = 0; b < p; ++b) {
        if (a == 0 && b == 0) continue;
        CHECK(k.pow({a, b}, (u128)(p * p - 1)) == k.one());
      }
  }
}

TEST_CASE("frobenius is a field automorphism fixing F_p") {
  for (u64 p : {3ull, 5ull, 11ull, 23ull, 47ull}) {
    QuadExt k(p);
    for (u64 a = 0; a < p; ++a) CHECK(k.frobenius(k.embed(a)) == k.embed(a));
    for (u64 a = 0; a < p; ++a)
      for (u64 b = 0; b < p; ++b) {
        QuadExt::Elem x{a, b};
        QuadExt::Elem y{(a * 3 + 1) % p, (b + a) % p};
        CHECK(k.frobenius(k.add(x, y)) == k.add(k.frobenius(x), k.frobenius(y)));
        CHECK(k.frobenius(k.mul(x, y)) == k.mul(k.frobenius(x), k.frobenius(y)));
        CHECK(k.frobenius(k.frobenius(x)) == x);
      }
  }
}

TEST_CASE("extension square counts") {
  // nonzero squares in F_{p^2} number (p^2 - 1)/2
  for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
    QuadExt k(p);
    u64 squares = 0;
    for (u64 a = 0; a < p; ++a)
      for (u64 b = 0; b < p; ++b)
        if (!(a == 0 && b == 0) && k.is_square({a, b})) ++squares;
    CHECK(squares == (p * p - 1) / 2);
    // every F_p element is a square up there
    for (u64 a = 0; a < p; ++a) CHECK(k.is_square(k.embed(a)));
  }
}
