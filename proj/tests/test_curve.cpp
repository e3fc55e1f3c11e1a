#include <doctest.h>

#include <stdexcept>

#include "torcert/curve.hpp"

using namespace torcert;

TEST_CASE("b-invariants and discriminant") {
  auto e = WeierstrassCurve::short_form(0, 1);  // y^2 = x^3 + 1
  CHECK(e.b2 == 0);
  CHECK(e.b4 == 0);
  CHECK(e.b6 == 4);
  CHECK(e.b8 == 0);
  CHECK(e.disc == -432);

  auto f = WeierstrassCurve::short_form(1, 0);  // y^2 = x^3 + x
  CHECK(f.disc == -64);

  // y^2 + xy = x^3 - x^2 - 2x - 1
  auto g = WeierstrassCurve::long_form(1, -1, 0, -2, -1);
  CHECK(g.disc == -343);

  auto h = WeierstrassCurve::long_form(0, -1, 1, -7, 10);
  CHECK(h.disc == -1331);

  CHECK_THROWS_AS(WeierstrassCurve::short_form(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(WeierstrassCurve::short_form(-3, 2), std::invalid_argument);
}

TEST_CASE("reduce_at") {
  auto e = WeierstrassCurve::short_form(0, 1);
  CHECK(reduce_at(e, 5).has_value());
  auto r = reduce_at(e, 7);
  REQUIRE(r.has_value());
  CHECK(r->p == 7);
  CHECK(r->c3 == 4);
  CHECK(r->c0 == 4);
  CHECK_THROWS_AS(reduce_at(e, 3), std::invalid_argument);   // p < 5 rejected
  CHECK_THROWS_AS(reduce_at(e, 9), std::invalid_argument);   // not prime
  auto big = WeierstrassCurve::long_form(0, -1, 1, -7, 10);   // disc -1331 = -11^3
  CHECK(!reduce_at(big, 11).has_value());
  CHECK(reduce_at(big, 13).has_value());
}

TEST_CASE("point counts over F_p") {
  auto e1 = WeierstrassCurve::short_form(0, 1);  // x^3 + 1
  auto r7 = reduce_at(e1, 7);
  auto f7 = count_points_fp(*r7);
  CHECK(f7.n_p == 12);
  CHECK(f7.a_p == -4);
  auto r5 = reduce_at(e1, 5);
  auto f5 = count_points_fp(*r5);
  CHECK(f5.n_p == 6);
  CHECK(f5.a_p == 0);

  auto e2 = WeierstrassCurve::short_form(1, 0);  // x^3 + x
  auto s7 = count_points_fp(*reduce_at(e2, 7));
  CHECK(s7.n_p == 8);
  CHECK(s7.a_p == 0);
  auto s5 = count_points_fp(*reduce_at(e2, 5));
  CHECK(s5.n_p == 4);
  CHECK(s5.a_p == 2);  // points: O, (0,0), (2,0), (3,0)
}

TEST_CASE("counts satisfy Hasse for many primes") {
  auto e = WeierstrassCurve::long_form(1, -1, 0, -2, -1);
  for (u64 p = 5; p <= 1000; ++p) {
    if (!is_prime_u64(p)) continue;
    auto r = reduce_at(e, p);
    if (!r) continue;
    auto f = count_points_fp(*r);
    CHECK((i64)(f.a_p * f.a_p) <= (i64)(4 * p));
    CHECK(f.n_p == p + 1 - f.a_p);
  }
}

TEST_CASE("naive count agrees with chi-sum count") {
  // independent O(p^2)-style recount: enumerate y too
  auto e = WeierstrassCurve::long_form(0, 4, 0, 2, 0);
  for (u64 p : {5ull, 7ull, 13ull, 31ull, 101ull}) {
    auto r = reduce_at(e, p);
    REQUIRE(r.has_value());
    u64 naive = 1;
    PrimeField f(p);
    // original model: y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
    for (u64 x = 0; x < p; ++x)
      for (u64 y = 0; y < p; ++y) {
        u64 lhs = f.mul(y, y);
        u64 rhs = f.mul(f.add(f.mul(f.add(x, 4), x), 2), x);
        if (lhs == rhs) ++naive;
      }
    CHECK(naive == count_points_fp(*r).n_p);
  }
}

TEST_CASE("F_p2 counts via trace identity and enumeration") {
  auto e = WeierstrassCurve::short_form(0, 1);
  auto r7 = reduce_at(e, 7);
  // a_7 = -4, so N = 49 + 1 - (16 - 14) = 48
  CHECK(count_points_fp2(*r7) == 48);
  auto r5 = reduce_at(e, 5);
  // supersingular: N = (p+1)^2
  CHECK(count_points_fp2(*r5) == 36);
  // the p <= 50 self-check ran in both calls above; also check one directly
  CHECK(count_points_fp2_enum(*r5) == 36);

  auto e2 = WeierstrassCurve::long_form(0, -1, 1, -7, 10);
  for (u64 p : {5ull, 7ull, 13ull, 23ull, 43ull}) {
    auto r = reduce_at(e2, p);
    REQUIRE(r.has_value());
    CHECK(count_points_fp2(*r) == count_points_fp2_enum(*r));
  }
}

TEST_CASE("supersingular by count matches Deuring on CM curves") {
  struct Row { WeierstrassCurve e; i64 d; };
  std::vector<Row> rows = {
      {WeierstrassCurve::short_form(0, 1), -3},
      {WeierstrassCurve::short_form(1, 0), -4},
      {WeierstrassCurve::long_form(1, -1, 0, -2, -1), -7},
      {WeierstrassCurve::long_form(0, 4, 0, 2, 0), -8},
      {WeierstrassCurve::long_form(0, -1, 1, -7, 10), -11},
      {WeierstrassCurve::short_form(-15, 22), -12},
      {WeierstrassCurve::short_form(-11, 14), -16},
      {WeierstrassCurve::long_form(0, 0, 1, -38, 90), -19},
      {WeierstrassCurve::long_form(0, 0, 1, -30, 63), -27},
      {WeierstrassCurve::short_form(-595, 5586), -28},
      {WeierstrassCurve::long_form(0, 0, 1, -860, 9707), -43},
      {WeierstrassCurve::long_form(0, 0, 1, -7370, 243528), -67},
      {WeierstrassCurve::long_form(0, 0, 1, -2174420, 1234136692), -163},
  };
  for (auto& row : rows) {
    u64 cond = conductor_of(row.d);
    for (u64 p = 5; p <= 500; ++p) {
      if (!is_prime_u64(p)) continue;
      if (cond % p == 0) continue;
      auto r = reduce_at(row.e, p);
      if (!r) continue;
      CHECK(is_supersingular_count(row.e, p) == is_supersingular_deuring(row.d, p));
    }
  }
}

TEST_CASE("deuring input validation") {
  CHECK_THROWS_AS(is_supersingular_deuring(-3, 4), std::invalid_argument);
  CHECK_THROWS_AS(is_supersingular_deuring(3, 7), std::invalid_argument);
  CHECK_THROWS_AS(is_supersingular_deuring(-27, 3), std::invalid_argument);  // p < 5
  CHECK_THROWS_AS(is_supersingular_deuring(-75, 5), std::invalid_argument);  // p divides conductor 5
  CHECK_NOTHROW(is_supersingular_deuring(-12, 7));
}
