#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "torcert/splitting.hpp"
#include "torcert/torsion.hpp"

namespace torcert {

enum class CertCase { case1, case2, case2_excluded };

std::string cert_case_name(CertCase c);

// count = group order over the residue field (p+1 over F_p, N over F_p^2);
// factor = the quantity entering the gcd (p+1, the matched p-+1, or N itself)
struct PrimeContribution {
  u64 p = 0;
  u64 count = 0;
  u64 factor = 0;
};

struct PhiCheck {
  std::string on = "none";  // "torsion" | "gcd_bound" | "none"
  u64 value = 0;
  u64 phi = 0;
  unsigned limit = 0;  // 2d
  bool asserted = false;
  bool satisfied = true;
};

struct TorsionCertificate {
  std::string label;
  std::vector<i64> a_invariants;  // a1, a2, a3, a4, a6
  i64 cm_disc = 0;
  std::string field;
  unsigned degree = 1;
  CertCase cert_case = CertCase::case1;
  bool used_ramified = false;
  u64 prime_bound = 0;
  std::vector<PrimeContribution> contributions;  // ascending p
  bool no_information = true;
  u64 gcd_bound = 0;  // meaningful only when !no_information
  PhiCheck phi;
  unsigned silverberg = 0;  // delta * mu * d
  std::vector<u64> silverberg_orders;
  std::optional<TorsionGroup> torsion_q;  // filled when the field is Q
  std::vector<std::string> notes;
};

// point count over F_p^2 fell outside the allowed set for the chosen case
struct DichotomyError : std::runtime_error {
  u64 p;
  u64 n;
  DichotomyError(u64 p_, u64 n_, const std::string& what_) : std::runtime_error(what_), p(p_), n(n_) {}
};

// inert primes with a degree-1 factor in K; gcd of p+1 bounds the torsion order
TorsionCertificate certify_case1(const WeierstrassCurve& e, i64 D, const NumberFieldSpec& f,
                                 u64 x, bool use_ramified = false, unsigned workers = 0);

// inert primes with a degree-2 factor in K; counts must be (p-1)^2 or (p+1)^2 and
// the matched p-+1 gcd bounds the squarefree-radical-adjusted order M'
TorsionCertificate certify_case2(const WeierstrassCurve& e, i64 D, const NumberFieldSpec& f,
                                 u64 x, unsigned workers = 0);

// orders inside Q(i) or Q(omega): counts may also be p^2+1 or p^2+-p+1; the gcd of
// the counts themselves is still a bound, but no phi inequality is claimed
TorsionCertificate certify_case2_excluded(const WeierstrassCurve& e, i64 D,
                                          const NumberFieldSpec& f, u64 x,
                                          unsigned workers = 0);

unsigned mu_of(i64 D);  // roots of unity in the order: 6, 4, or 2

struct SilverbergBound {
  unsigned mu = 0;
  bool contained = false;  // halves the bound
  unsigned bound = 0;
  std::vector<u64> orders;
};
SilverbergBound silverberg_bound(unsigned mu, bool contained, unsigned d);

struct TheoremVerdict {
  bool phi_ok = true;
  bool divides_ok = true;
  bool structure_ok = true;
  bool slack = false;  // bound strictly exceeds the known torsion order
  std::vector<std::string> notes;
  bool pass() const { return phi_ok && divides_ok && structure_ok; }
};

// known_order: torsion order over K when the caller has one (for the Q case the
// certificate's own torsion is used)
TheoremVerdict theorem_check(const TorsionCertificate& c,
                             std::optional<u64> known_order = std::nullopt);

// stable key order, version "cert-v1"
std::string certificate_to_json(const TorsionCertificate& c);

}  // namespace torcert
