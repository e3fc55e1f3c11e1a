#pragma once

#include <string>
#include <vector>

#include "torcert/curve.hpp"

namespace torcert {

// monic integer polynomial defining the field K = Q[x]/(f)
struct NumberFieldSpec {
  std::vector<i64> coeffs;  // constant first, leading 1 last
  unsigned degree = 0;
  cpp_int poly_disc;
  // small-prime irreducibility screen; evidence above degree 3, where
  // reducibility is only rejected when a rational root exists
  bool irreducible_mod_some_prime = false;

  static NumberFieldSpec from_coeffs(std::vector<i64> c);
  // accepts "x^3 - 2", "x", "x^2+1", or a bracket list "[-2,0,0,1]"
  static NumberFieldSpec parse(const std::string& text);

  std::string display() const;  // "x^3 - 2" style
};

enum class QuadSplit { split, inert, ramified };

// behavior of p in the quadratic order of discriminant D via kronecker(D, p)
QuadSplit quadratic_split(i64 D, u64 p);

struct ResidueDegrees {
  bool ramified = false;          // p divides disc(f); degrees then empty
  std::vector<unsigned> degrees;  // sorted multiset, sums to deg f
};

// factorization type of f mod p by distinct-degree factorization
ResidueDegrees residue_degrees(const NumberFieldSpec& f, u64 p);

// require p unramified in f (throw otherwise)
bool has_degree_one_prime(const NumberFieldSpec& f, u64 p);
bool has_degree_two_prime(const NumberFieldSpec& f, u64 p);

// consistency spot-checks against inert primes p <= bound of the quadratic
// order D: "disjoint" expects some inert p with a degree-1 factor of f,
// "contained" expects all residue degrees even at every inert p
bool subfield_check_disjoint(i64 D, const NumberFieldSpec& f, u64 bound = 1000);
bool subfield_check_contained(i64 D, const NumberFieldSpec& f, u64 bound = 1000);

}  // namespace torcert
