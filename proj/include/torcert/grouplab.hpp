#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torcert/arith.hpp"

namespace torcert {

// finite group as a validated multiplication table, order capped at 24
struct GroupTable {
  unsigned n = 0;
  std::vector<unsigned> mul;  // row-major, mul[a*n + b]
  unsigned id = 0;
  std::vector<std::string> labels;
  std::string name;

  unsigned op(unsigned a, unsigned b) const { return mul[a * n + b]; }
  unsigned inv(unsigned a) const;
  unsigned order_of(unsigned a) const;

  // "C6", "D4", "S4", "A4", "Q8", and direct products like "C2xC4"
  static GroupTable named(const std::string& name);
  // permutations on up to 8 points, all of the same degree, given as image lists
  static GroupTable from_generators(const std::vector<std::vector<unsigned>>& gens);
};

// element subset as a bitmask; bit i set means element i belongs
using Subgroup = u32;

unsigned subgroup_size(Subgroup s);
bool subgroup_contains(Subgroup s, unsigned e);
bool is_subgroup(const GroupTable& g, Subgroup s);

// every subgroup, ascending by mask value
std::vector<Subgroup> enumerate_subgroups(const GroupTable& g);

// x outside N with x^2 in H; requires [G:N] = 2, H <= N, c an involution outside N
unsigned lemma23_count(const GroupTable& g, Subgroup N, Subgroup H, unsigned c);

// elements of the double coset HcH whose square lies in H; contract: equals |H|
unsigned hch_exact_count(const GroupTable& g, Subgroup H, unsigned c);

struct Lemma23Entry {
  Subgroup n_mask = 0;
  Subgroup h_mask = 0;
  int c = -1;  // -1 marks a vacuous row (no involution outside N)
  unsigned h_size = 0;
  unsigned outside_count = 0;
  unsigned hch_count = 0;
  bool vacuous = false;
  bool pass = false;
};

struct Lemma23Report {
  std::string group_name;
  unsigned group_order = 0;
  std::vector<Lemma23Entry> entries;  // ordered by (N, H, c)
  unsigned tested = 0;
  unsigned passed = 0;
  unsigned skipped_vacuous = 0;
  bool all_pass = true;  // vacuous rows are not failures
};

Lemma23Report lemma23_exhaustive(const GroupTable& g);

// named groups of order <= bound used by the exhaustive sweeps
std::vector<std::string> group_catalog(unsigned max_order);

// invertible 2x2 matrices over F_q diagonalizable over F_q
u64 gl2_order(u64 q);
u64 gl2_diag_formula(u64 q);
u64 gl2_diag_brute(u64 q);  // direct matrix enumeration, prime q <= 7 only

}  // namespace torcert
