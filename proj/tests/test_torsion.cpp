#include <doctest.h>

#include <stdexcept>

#include "torcert/torsion.hpp"

using namespace torcert;

namespace {

bool has_point(const TorsionGroup& t, i64 x, i64 y) {
  for (auto& p : t.points)
    if (!p.infinity && p.x == x && p.y == y) return true;
  return false;
}

}  // namespace

TEST_CASE("torsion of y^2 = x^3 + 1 is Z/6 generated by (2, 3)") {
  auto t = torsion_over_q(WeierstrassCurve::short_form(0, 1));
  CHECK(t.order == 6);
  CHECK(t.n1 == 1);
  CHECK(t.n2 == 6);
  CHECK(t.points.size() == 5);
  CHECK(has_point(t, -1, 0));
  CHECK(has_point(t, 0, 1));
  CHECK(has_point(t, 0, -1));
  CHECK(has_point(t, 2, 3));
  CHECK(has_point(t, 2, -3));
  REQUIRE(t.generators.size() == 1);
  CHECK(t.generators[0].x == 2);
  CHECK(t.generators[0].y == 3);
  CHECK(t.gcd_bound % 6 == 0);
}

TEST_CASE("torsion of y^2 = x^3 - x is full 2-torsion") {
  auto t = torsion_over_q(WeierstrassCurve::short_form(-1, 0));
  CHECK(t.order == 4);
  CHECK(t.n1 == 2);
  CHECK(t.n2 == 2);
  CHECK(has_point(t, -1, 0));
  CHECK(has_point(t, 0, 0));
  CHECK(has_point(t, 1, 0));
  CHECK(t.generators.size() == 2);
}

TEST_CASE("torsion of y^2 = x^3 + 4x is Z/4") {
  auto t = torsion_over_q(WeierstrassCurve::short_form(4, 0));
  CHECK(t.order == 4);
  CHECK(t.n1 == 1);
  CHECK(t.n2 == 4);
  CHECK(has_point(t, 2, 4));
  CHECK(has_point(t, 2, -4));
  CHECK(has_point(t, 0, 0));
}

TEST_CASE("torsion across the CM family") {
  struct Row {
    WeierstrassCurve e;
    u64 order;
    unsigned n1, n2;
  };
  std::vector<Row> rows = {
      {WeierstrassCurve::short_form(0, 1), 6, 1, 6},
      {WeierstrassCurve::short_form(1, 0), 2, 1, 2},
      {WeierstrassCurve::long_form(1, -1, 0, -2, -1), 2, 1, 2},
      {WeierstrassCurve::long_form(0, 4, 0, 2, 0), 2, 1, 2},
      {WeierstrassCurve::long_form(0, -1, 1, -7, 10), 1, 1, 1},
      {WeierstrassCurve::short_form(-15, 22), 6, 1, 6},
      {WeierstrassCurve::short_form(-11, 14), 4, 1, 4},
      {WeierstrassCurve::long_form(0, 0, 1, -38, 90), 1, 1, 1},
      {WeierstrassCurve::long_form(0, 0, 1, -30, 63), 3, 1, 3},
      {WeierstrassCurve::short_form(-595, 5586), 2, 1, 2},
      {WeierstrassCurve::long_form(0, 0, 1, -860, 9707), 1, 1, 1},
      {WeierstrassCurve::long_form(0, 0, 1, -7370, 243528), 1, 1, 1},
      {WeierstrassCurve::long_form(0, 0, 1, -2174420, 1234136692), 1, 1, 1},
  };
  for (auto& r : rows) {
    auto t = torsion_over_q(r.e);
    CHECK(t.order == r.order);
    CHECK(t.n1 == r.n1);
    CHECK(t.n2 == r.n2);
    CHECK(t.order % t.n2 == 0);
    CHECK(t.n1 * t.n2 == t.order);
    CHECK(t.gcd_bound % t.order == 0);
    CHECK(t.sample_primes.size() == 10);
  }
}

TEST_CASE("specific small-curve torsion points") {
  // y^2 + y = x^3 - x^2 - 7x + 10: trivial
  auto t11 = torsion_over_q(WeierstrassCurve::long_form(0, -1, 1, -7, 10));
  CHECK(t11.points.empty());
  CHECK(t11.generators.empty());

  // y^2 = x^3 - 15x + 22: Z/6 with (-1, +-6), (2, 0), (3, +-2)
  auto t12 = torsion_over_q(WeierstrassCurve::short_form(-15, 22));
  CHECK(has_point(t12, -1, 6));
  CHECK(has_point(t12, -1, -6));
  CHECK(has_point(t12, 2, 0));
  CHECK(has_point(t12, 3, 2));
  CHECK(has_point(t12, 3, -2));

  // y^2 = x^3 - 11x + 14: Z/4 with (1, +-2), (2, 0)
  auto t16 = torsion_over_q(WeierstrassCurve::short_form(-11, 14));
  CHECK(has_point(t16, 1, 2));
  CHECK(has_point(t16, 1, -2));
  CHECK(has_point(t16, 2, 0));

  // y^2 + y = x^3 - 30x + 63: Z/3 with (3, 0), (3, -1)
  auto t27 = torsion_over_q(WeierstrassCurve::long_form(0, 0, 1, -30, 63));
  CHECK(has_point(t27, 3, 0));
  CHECK(has_point(t27, 3, -1));

  // y^2 + xy = x^3 - x^2 - 2x - 1: Z/2 at (2, -1)
  auto t7 = torsion_over_q(WeierstrassCurve::long_form(1, -1, 0, -2, -1));
  CHECK(has_point(t7, 2, -1));
}

TEST_CASE("bounded search agrees with the divisor route") {
  for (auto& e : {WeierstrassCurve::short_form(0, 1),
                  WeierstrassCurve::short_form(-1, 0),
                  WeierstrassCurve::long_form(1, -1, 0, -2, -1),
                  WeierstrassCurve::short_form(-15, 22),
                  WeierstrassCurve::short_form(-11, 14),
                  WeierstrassCurve::long_form(0, 0, 1, -30, 63)}) {
    auto a = torsion_over_q(e);
    auto b = bounded_torsion_search(e, 400);
    CHECK(a.order == b.order);
    CHECK(a.n1 == b.n1);
    CHECK(a.n2 == b.n2);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
      CHECK(a.points[i].x == b.points[i].x);
      CHECK(a.points[i].y == b.points[i].y);
    }
  }
}

TEST_CASE("quadratic torsion: y^2 = x^3 + x over Q(i)") {
  auto e = WeierstrassCurve::short_form(1, 0);
  // full 2-torsion: x in {0, i, -i}
  auto two = torsion_points_quadratic(e, -4, 2);
  REQUIRE(two.size() == 3);
  bool seen_zero = false, seen_i = false, seen_mi = false;
  for (auto& p : two) {
    CHECK(p.y.a == 0);
    CHECK(p.y.b == 0);
    if (p.x.a == 0 && p.x.b == 0) seen_zero = true;
    if (p.x.a == 0 && p.x.b == 1) seen_i = true;
    if (p.x.a == 0 && p.x.b == -1) seen_mi = true;
  }
  CHECK(seen_zero);
  CHECK(seen_i);
  CHECK(seen_mi);
  // and nothing of exact order 4 up there
  CHECK(torsion_points_quadratic(e, -4, 4).empty());
}

TEST_CASE("quadratic torsion: y^2 = x^3 + 1 over Q(sqrt -2) has no 5-torsion") {
  auto e = WeierstrassCurve::short_form(0, 1);
  CHECK(torsion_points_quadratic(e, -8, 5).empty());
  // the rational Z/6 survives base change
  CHECK(torsion_points_quadratic(e, -8, 6).size() == 2);
  CHECK(torsion_points_quadratic(e, -8, 1).size() == 1);  // just O
}

TEST_CASE("quadratic torsion finds points outside the rational-plus-twist span") {
  // y^2 = x^3 - x over Q(i) has Z/2 x Z/4; the order-4 points (+-i, +-(1 -+ i))
  // are halves of (0, 0) and lie in neither E(Q) nor the twist's image
  auto e = WeierstrassCurve::short_form(-1, 0);
  auto four = torsion_points_quadratic(e, -4, 4);
  CHECK(four.size() == 4);
  for (auto& p : four) {
    CHECK(p.x.a == 0);
    CHECK(abs(p.x.b) == 1);
  }
  for (auto& p : four) {
    // confirm on the curve: y^2 = x^3 - x over Q(i)
    cpp_rational m(-1);
    cpp_rational xa = p.x.a, xb = p.x.b, ya = p.y.a, yb = p.y.b;
    cpp_rational lhs_a = ya * ya + m * yb * yb;
    cpp_rational lhs_b = 2 * ya * yb;
    // x^3 = (a+bi)^3 = a^3 + 3a^2 bi - 3ab^2 - b^3 i
    cpp_rational x3_a = xa * xa * xa + 3 * m * xa * xb * xb;
    cpp_rational x3_b = 3 * xa * xa * xb + m * xb * xb * xb;
    CHECK(lhs_a == x3_a - xa);
    CHECK(lhs_b == x3_b - xb);
  }
  CHECK(!four.empty());
}

TEST_CASE("quadratic torsion input validation") {
  auto e = WeierstrassCurve::short_form(0, 1);
  CHECK_THROWS_AS(torsion_points_quadratic(e, -4, 0), std::invalid_argument);
  CHECK_THROWS_AS(torsion_points_quadratic(e, -4, 13), std::invalid_argument);
  CHECK_THROWS_AS(torsion_points_quadratic(e, -12, 2), std::invalid_argument);  // not fundamental
  CHECK_THROWS_AS(torsion_points_quadratic(e, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(torsion_points_quadratic(e, 1, 2), std::invalid_argument);
}

TEST_CASE("every reported point satisfies its curve equation") {
  for (auto& e : {WeierstrassCurve::short_form(0, 1),
                  WeierstrassCurve::long_form(1, -1, 0, -2, -1),
                  WeierstrassCurve::long_form(0, 0, 1, -30, 63)}) {
    auto t = torsion_over_q(e);
    for (auto& p : t.points) {
      REQUIRE(!p.infinity);
      cpp_rational lhs = p.y * p.y + e.a1 * p.x * p.y + e.a3 * p.y;
      cpp_rational rhs = p.x * p.x * p.x + e.a2 * p.x * p.x + e.a4 * p.x + e.a6;
      CHECK(lhs == rhs);
    }
  }
}
