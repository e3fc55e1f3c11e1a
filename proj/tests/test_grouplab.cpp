#include "doctest.h"

#include <stdexcept>

#include "torcert/grouplab.hpp"

using namespace torcert;

TEST_CASE("named group construction") {
  CHECK(GroupTable::named("S3").n == 6);
  CHECK(GroupTable::named("D4").n == 8);
  CHECK(GroupTable::named("A4").n == 12);
  CHECK(GroupTable::named("S4").n == 24);
  CHECK(GroupTable::named("C2xC4").n == 8);
  CHECK(GroupTable::named("C2xC2xC2xC2").n == 16);
  CHECK(GroupTable::named("C1").n == 1);

  auto c6 = GroupTable::named("C6");
  CHECK(c6.order_of(1) == 6);
  CHECK(c6.inv(1) == 5);

  CHECK_THROWS_AS(GroupTable::named("C25"), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::named("S5"), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::named("D13"), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::named("E6"), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::named("C3xC3xC3"), std::invalid_argument);
}

TEST_CASE("quaternion group has a unique involution") {
  auto q8 = GroupTable::named("Q8");
  REQUIRE(q8.n == 8);
  unsigned involutions = 0;
  for (unsigned a = 0; a < 8; ++a)
    if (q8.order_of(a) == 2) ++involutions;
  CHECK(involutions == 1);
  // and six elements of order 4
  unsigned fours = 0;
  for (unsigned a = 0; a < 8; ++a)
    if (q8.order_of(a) == 4) ++fours;
  CHECK(fours == 6);
}

TEST_CASE("groups from permutation generators") {
  auto s3 = GroupTable::from_generators({{1, 0, 2}, {1, 2, 0}});
  CHECK(s3.n == 6);
  CHECK(s3.labels[s3.id] == "e");

  auto c4 = GroupTable::from_generators({{1, 2, 3, 0}});
  CHECK(c4.n == 4);
  CHECK(c4.order_of(1) == 4);

  auto klein = GroupTable::from_generators({{1, 0, 2, 3}, {0, 1, 3, 2}});
  CHECK(klein.n == 4);
  for (unsigned a = 0; a < 4; ++a) CHECK(klein.op(a, a) == klein.id);

  CHECK_THROWS_AS(GroupTable::from_generators({{1, 1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable::from_generators({{1, 2, 3, 4, 5, 6, 7, 8, 0}}),
                  std::invalid_argument);
  // disjoint 5-cycle and 3-cycle generate C15 within the cap
  CHECK(GroupTable::from_generators({{1, 2, 3, 4, 0, 5, 6, 7},
                                     {0, 1, 2, 3, 4, 6, 7, 5}}).n == 15);
  CHECK(GroupTable::from_generators({{1, 2, 3, 4, 5, 6, 0, 7}}).n == 7);
  // disjoint 5-cycle and 3-cycle with an extra transposition blow past 24
  CHECK_THROWS_AS(GroupTable::from_generators({{1, 2, 3, 4, 0, 5, 6, 7},
                                               {0, 1, 2, 3, 4, 6, 5, 7},
                                               {0, 1, 2, 3, 4, 5, 7, 6}}),
                  std::invalid_argument);
}

TEST_CASE("subgroup enumeration") {
  CHECK(enumerate_subgroups(GroupTable::named("S3")).size() == 6);
  CHECK(enumerate_subgroups(GroupTable::named("C4")).size() == 3);
  CHECK(enumerate_subgroups(GroupTable::named("C1")).size() == 1);
  CHECK(enumerate_subgroups(GroupTable::named("Q8")).size() == 6);
  CHECK(enumerate_subgroups(GroupTable::named("D4")).size() == 10);
  CHECK(enumerate_subgroups(GroupTable::named("S4")).size() == 30);
  CHECK(enumerate_subgroups(GroupTable::named("C2xC2xC2")).size() == 16);

  auto s3 = GroupTable::named("S3");
  for (Subgroup s : enumerate_subgroups(s3)) {
    CHECK(is_subgroup(s3, s));
    CHECK(6 % subgroup_size(s) == 0);
  }
}

TEST_CASE("coset counts on S3") {
  // elements sorted by image list: 0:e 1:(1 2) 2:(0 1) 3:(0 1 2) 4:(0 2 1) 5:(0 2)
  auto s3 = GroupTable::from_generators({{1, 0, 2}, {1, 2, 0}});
  Subgroup a3 = (1u << 0) | (1u << 3) | (1u << 4);
  REQUIRE(is_subgroup(s3, a3));
  CHECK(lemma23_count(s3, a3, a3, 1) == 3);
  CHECK(lemma23_count(s3, a3, 1u << 0, 1) == 3);  // H = {e}: still all transpositions
  CHECK(hch_exact_count(s3, a3, 1) == 3);
  CHECK(hch_exact_count(s3, 1u << 0, 1) == 1);

  CHECK_THROWS_AS(lemma23_count(s3, a3, a3, 3), std::invalid_argument);  // c inside N
  CHECK_THROWS_AS(lemma23_count(s3, a3 | 2u, a3, 1), std::invalid_argument);
  CHECK_THROWS_AS(hch_exact_count(s3, a3, 3), std::invalid_argument);  // not an involution
}

TEST_CASE("coset counts on D4") {
  // rotations occupy indices 0..3, reflections 4..7
  auto d4 = GroupTable::named("D4");
  Subgroup rotations = 0xF;
  REQUIRE(is_subgroup(d4, rotations));
  CHECK(lemma23_count(d4, rotations, rotations, 4) == 4);
  Subgroup center = (1u << 0) | (1u << 2);  // {e, r^2}
  REQUIRE(is_subgroup(d4, center));
  CHECK(hch_exact_count(d4, center, 4) == 2);
}

TEST_CASE("exhaustive sweep passes on the whole catalog") {
  for (const auto& name : group_catalog(16)) {
    auto g = GroupTable::named(name);
    auto rep = lemma23_exhaustive(g);
    CHECK(rep.all_pass);
    for (const auto& e : rep.entries) {
      if (e.vacuous) continue;
      CHECK(e.outside_count >= e.h_size);
      CHECK(e.hch_count == e.h_size);
      CHECK(e.outside_count >= e.hch_count);  // HcH sits inside the coset Nc
    }
  }
}

TEST_CASE("exhaustive sweep on S4 and odd-order vacuous cases") {
  auto rep = lemma23_exhaustive(GroupTable::named("S4"));
  CHECK(rep.all_pass);
  CHECK(rep.tested > 0);
  CHECK(rep.skipped_vacuous == 0);  // transpositions sit outside A4

  // odd order: no index-2 subgroup at all, report is trivially clean
  auto c9 = lemma23_exhaustive(GroupTable::named("C9"));
  CHECK(c9.entries.empty());
  CHECK(c9.all_pass);

  // C4: N = C2 contains every involution, so every (N, H) row is vacuous
  auto c4 = lemma23_exhaustive(GroupTable::named("C4"));
  CHECK(c4.tested == 0);
  CHECK(c4.skipped_vacuous == 2);
  CHECK(c4.all_pass);
}

TEST_CASE("diagonalizable matrix counts") {
  CHECK(gl2_diag_formula(2) == 1);
  CHECK(gl2_diag_formula(3) == 14);
  CHECK(gl2_diag_formula(5) == 184);
  CHECK(gl2_diag_formula(7) == 846);

  for (u64 q : {2ull, 3ull, 5ull, 7ull}) CHECK(gl2_diag_brute(q) == gl2_diag_formula(q));

  CHECK(gl2_order(2) == 6);
  CHECK(gl2_order(3) == 48);
  CHECK(gl2_order(5) == 480);
  CHECK(gl2_order(7) == 2016);

  CHECK_THROWS_AS(gl2_diag_brute(11), std::invalid_argument);
  CHECK_THROWS_AS(gl2_diag_brute(4), std::invalid_argument);

  // density climbs toward 1/2; at q = 5 it is still 184/480 = 0.383
  for (u64 q : {7ull, 11ull, 13ull, 101ull, 1009ull}) {
    double ratio = (double)gl2_diag_formula(q) / (double)gl2_order(q);
    CHECK(ratio > 0.4);
    CHECK(ratio < 0.5);
  }
  // largest prime where the formula's product still fits in 64 bits
  double far = (double)gl2_diag_formula(46337) / (double)gl2_order(46337);
  CHECK(far > 0.4999);
}
