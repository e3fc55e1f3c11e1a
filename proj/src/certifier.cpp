#include "torcert/certifier.hpp"

#include <numeric>
#include <sstream>

#include "json.hpp"
#include "torcert/kernels.hpp"

namespace torcert {

namespace {

constexpr u64 kCase1Ceiling = 1000000;  // splitting work only
constexpr u64 kCase2Ceiling = 100000;   // O(p) counting per prime

void validate_cm(i64 D) {
  if (D >= 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
    throw std::invalid_argument("cm_disc must be negative and 0 or 1 mod 4");
}

// p >= 5, good reduction, prime to the conductor, inert (or ramified when allowed)
// in k, unramified in f with a factor of the wanted degree
std::vector<u64> qualifying_primes(const WeierstrassCurve& e, i64 D,
                                   const NumberFieldSpec& f, u64 x, unsigned want,
                                   bool allow_ramified_k, unsigned workers) {
  u64 cond = conductor_of(D);
  auto primes = sieve_primes_serial(x);
  auto code = [&](u64 p) -> unsigned char {
    if (p < 5 || !e.good_at(p) || cond % p == 0) return 0;
    int k = kronecker(D, (i64)p);
    if (!(k == -1 || (allow_ramified_k && k == 0))) return 0;
    auto rd = residue_degrees(f, p);
    if (rd.ramified) return 0;
    for (unsigned d : rd.degrees)
      if (d == want) return 1;
    return 0;
  };
  auto codes = classify_primes_parallel(primes, code, workers);
  std::vector<u64> out;
  for (size_t i = 0; i < primes.size(); ++i)
    if (codes[i]) out.push_back(primes[i]);
  return out;
}

void start_cert(TorsionCertificate& cert, const WeierstrassCurve& e, i64 D,
                const NumberFieldSpec& f, u64 x) {
  cert.a_invariants = {e.a1, e.a2, e.a3, e.a4, e.a6};
  cert.cm_disc = D;
  cert.field = f.display();
  cert.degree = f.degree;
  cert.prime_bound = x;
  if (!f.irreducible_mod_some_prime)
    cert.notes.push_back("field polynomial irreducibility not established by the mod-p screen");
}

void fold_gcd(TorsionCertificate& cert) {
  u64 g = 0;
  for (const auto& c : cert.contributions) g = std::gcd(g, c.factor);
  cert.no_information = cert.contributions.empty();
  cert.gcd_bound = g;
}

void fill_phi(TorsionCertificate& cert, bool assert_on_gcd) {
  cert.phi.limit = 2 * cert.degree;
  if (cert.torsion_q) {
    cert.phi.on = "torsion";
    cert.phi.value = cert.torsion_q->order;
    cert.phi.phi = euler_phi(cert.phi.value);
    cert.phi.asserted = true;
    cert.phi.satisfied = cert.phi.phi <= cert.phi.limit;
    return;
  }
  if (cert.no_information) {
    cert.phi.on = "none";
    cert.phi.asserted = false;
    cert.phi.satisfied = true;
    return;
  }
  cert.phi.on = "gcd_bound";
  cert.phi.value = cert.gcd_bound;
  cert.phi.phi = euler_phi(cert.gcd_bound);
  cert.phi.asserted = assert_on_gcd;
  cert.phi.satisfied = cert.phi.phi <= cert.phi.limit;
}

void fill_silverberg(TorsionCertificate& cert, bool contained) {
  auto sb = silverberg_bound(mu_of(cert.cm_disc), contained, cert.degree);
  cert.silverberg = sb.bound;
  cert.silverberg_orders = sb.orders;
}

// cheap supersingularity audit at small primes; a failure means the supplied
// cm_disc does not belong to this curve
void audit_small_primes(const TorsionCertificate& cert, const WeierstrassCurve& e) {
  for (const auto& c : cert.contributions) {
    if (c.p > 1000) break;
    auto rc = reduce_at(e, c.p);
    if (count_points_fp(*rc).a_p != 0)
      throw std::logic_error("curve is ordinary at p=" + std::to_string(c.p) +
                             " though the discriminant claims supersingular");
  }
}

struct Fp2Counts {
  std::vector<u64> n;  // |E(F_p^2)| aligned with the prime list
};

Fp2Counts count_fp2_all(const WeierstrassCurve& e, const std::vector<u64>& primes,
                        unsigned workers) {
  Fp2Counts out;
  out.n.resize(primes.size());
  unsigned w = resolve_workers(workers);
#pragma omp parallel for num_threads(w) schedule(dynamic, 4)
  for (long long i = 0; i < (long long)primes.size(); ++i) {
    auto rc = reduce_at(e, primes[i]);
    out.n[i] = count_points_fp2(*rc);
  }
  return out;
}

}  // namespace

std::string cert_case_name(CertCase c) {
  switch (c) {
    case CertCase::case1: return "case1";
    case CertCase::case2: return "case2";
    default: return "case2_excluded";
  }
}

unsigned mu_of(i64 D) {
  validate_cm(D);
  if (D == -3) return 6;
  if (D == -4) return 4;
  return 2;
}

SilverbergBound silverberg_bound(unsigned mu, bool contained, unsigned d) {
  if (mu != 2 && mu != 4 && mu != 6)
    throw std::invalid_argument("mu must be 2, 4, or 6");
  if (d < 1) throw std::invalid_argument("degree must be positive");
  SilverbergBound out;
  out.mu = mu;
  out.contained = contained;
  out.bound = contained ? mu * d / 2 : mu * d;
  out.orders = admissible_orders(out.bound);
  return out;
}

TorsionCertificate certify_case1(const WeierstrassCurve& e, i64 D, const NumberFieldSpec& f,
                                 u64 x, bool use_ramified, unsigned workers) {
  validate_cm(D);
  if (x > kCase1Ceiling) throw std::invalid_argument("prime bound exceeds 1e6");
  if (f.degree >= 2 && !subfield_check_disjoint(D, f))
    throw std::domain_error("subfield spot-check contradicts K disjoint from k");

  TorsionCertificate cert;
  cert.cert_case = CertCase::case1;
  cert.used_ramified = use_ramified;
  start_cert(cert, e, D, f, x);

  for (u64 p : qualifying_primes(e, D, f, x, 1, use_ramified, workers))
    cert.contributions.push_back({p, p + 1, p + 1});
  fold_gcd(cert);
  audit_small_primes(cert, e);

  if (f.degree == 1) cert.torsion_q = torsion_over_q(e);
  fill_phi(cert, false);
  fill_silverberg(cert, false);
  cert.notes.push_back("supersingular orders over the degree-1 residue field equal p+1");
  cert.notes.push_back("gcd certifies divisibility of the torsion order, not its value");
  return cert;
}

TorsionCertificate certify_case2(const WeierstrassCurve& e, i64 D, const NumberFieldSpec& f,
                                 u64 x, unsigned workers) {
  validate_cm(D);
  if (x > kCase2Ceiling) throw std::invalid_argument("prime bound exceeds 1e5");
  i64 fund = fundamental_discriminant(D);
  if (fund == -3 || fund == -4)
    throw std::invalid_argument("field of this discriminant needs the excluded-field path");
  if (!subfield_check_contained(D, f))
    throw std::domain_error("subfield spot-check contradicts k contained in K");

  TorsionCertificate cert;
  cert.cert_case = CertCase::case2;
  start_cert(cert, e, D, f, x);

  auto primes = qualifying_primes(e, D, f, x, 2, false, workers);
  auto counts = count_fp2_all(e, primes, workers);
  for (size_t i = 0; i < primes.size(); ++i) {
    u64 p = primes[i], n = counts.n[i];
    u64 factor;
    if (n == (p + 1) * (p + 1)) factor = p + 1;
    else if (n == (p - 1) * (p - 1)) factor = p - 1;
    else
      throw DichotomyError(p, n,
                           "count over F_p^2 at p=" + std::to_string(p) + " is " +
                               std::to_string(n) +
                               ", not (p-1)^2 or (p+1)^2; wrong cm_disc or an excluded field");
    cert.contributions.push_back({p, n, factor});
  }
  fold_gcd(cert);
  fill_phi(cert, true);
  fill_silverberg(cert, true);
  cert.notes.push_back("gcd of the matched p+1 or p-1 factors bounds the smallest integer whose square the full order divides");
  return cert;
}

TorsionCertificate certify_case2_excluded(const WeierstrassCurve& e, i64 D,
                                          const NumberFieldSpec& f, u64 x,
                                          unsigned workers) {
  validate_cm(D);
  if (x > kCase2Ceiling) throw std::invalid_argument("prime bound exceeds 1e5");
  i64 fund = fundamental_discriminant(D);
  if (fund != -3 && fund != -4)
    throw std::invalid_argument("excluded-field path requires discriminant -3 or -4");
  if (!subfield_check_contained(D, f))
    throw std::domain_error("subfield spot-check contradicts k contained in K");

  TorsionCertificate cert;
  cert.cert_case = CertCase::case2_excluded;
  start_cert(cert, e, D, f, x);

  auto primes = qualifying_primes(e, D, f, x, 2, false, workers);
  auto counts = count_fp2_all(e, primes, workers);
  for (size_t i = 0; i < primes.size(); ++i) {
    u64 p = primes[i], n = counts.n[i];
    u64 p2 = p * p;
    bool allowed = n == (p + 1) * (p + 1) || n == (p - 1) * (p - 1) || n == p2 + 1 ||
                   n == p2 + p + 1 || n == p2 - p + 1;
    if (!allowed)
      throw DichotomyError(p, n,
                           "count over F_p^2 at p=" + std::to_string(p) + " is " +
                               std::to_string(n) + ", outside the supersingular set");
    cert.contributions.push_back({p, n, n});
  }
  fold_gcd(cert);
  fill_phi(cert, false);
  fill_silverberg(cert, true);
  cert.notes.push_back("roots of unity in the field force extra automorphisms; gcd of full orders only, no phi claim");
  return cert;
}

TheoremVerdict theorem_check(const TorsionCertificate& c, std::optional<u64> known_order) {
  TheoremVerdict v;
  u64 m = known_order ? *known_order : (c.torsion_q ? c.torsion_q->order : 0);
  unsigned limit = 2 * c.degree;

  if (c.no_information)
    v.notes.push_back("no qualifying primes below the bound; nothing to check against");

  switch (c.cert_case) {
    case CertCase::case1:
      if (m) {
        v.phi_ok = euler_phi(m) <= limit;
        v.divides_ok = c.no_information || c.gcd_bound % m == 0;
        if (!c.no_information && c.gcd_bound != m) {
          v.slack = true;
          v.notes.push_back("gcd bound " + std::to_string(c.gcd_bound) +
                            " exceeds the torsion order " + std::to_string(m));
        }
        if (c.torsion_q && !known_order) {
          v.structure_ok = c.torsion_q->n1 == 1 || c.torsion_q->n1 == 2;
          if (!v.structure_ok)
            v.notes.push_back("torsion is not of the shape Z/N or Z/N x Z/2");
        }
      } else {
        v.notes.push_back("torsion over K not computed; divisibility side only");
        v.phi_ok = !c.phi.asserted || c.phi.satisfied;
      }
      break;
    case CertCase::case2:
      if (c.phi.asserted && !c.phi.satisfied) {
        v.phi_ok = false;
        v.notes.push_back("phi(gcd_bound) exceeds 2d");
      }
      if (m) {
        u64 mp = m_prime(m).m_prime;
        if (euler_phi(mp) > limit) v.phi_ok = false;
        v.divides_ok = c.no_information || c.gcd_bound % mp == 0;
      }
      break;
    case CertCase::case2_excluded:
      v.notes.push_back("excluded field: order gcd only, phi inequality not claimed");
      if (m) v.divides_ok = c.no_information || c.gcd_bound % m == 0;
      break;
  }
  return v;
}

std::string certificate_to_json(const TorsionCertificate& c) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["version"] = "cert-v1";
  j["label"] = c.label;
  j["a_invariants"] = c.a_invariants;
  j["cm_disc"] = c.cm_disc;
  j["field"] = c.field;
  j["degree"] = c.degree;
  j["case"] = cert_case_name(c.cert_case);
  j["use_ramified"] = c.used_ramified;
  j["prime_bound"] = c.prime_bound;
  ordered_json contribs = ordered_json::array();
  for (const auto& pc : c.contributions) {
    ordered_json row;
    row["p"] = pc.p;
    row["count"] = pc.count;
    row["factor"] = pc.factor;
    contribs.push_back(row);
  }
  j["contributions"] = contribs;
  j["no_information"] = c.no_information;
  if (c.no_information) j["gcd_bound"] = nullptr;
  else j["gcd_bound"] = c.gcd_bound;
  ordered_json phi;
  phi["on"] = c.phi.on;
  if (c.phi.on == "none") {
    phi["value"] = nullptr;
    phi["phi"] = nullptr;
  } else {
    phi["value"] = c.phi.value;
    phi["phi"] = c.phi.phi;
  }
  phi["limit"] = c.phi.limit;
  phi["asserted"] = c.phi.asserted;
  phi["satisfied"] = c.phi.satisfied;
  j["phi"] = phi;
  ordered_json sb;
  sb["bound"] = c.silverberg;
  sb["admissible_orders"] = c.silverberg_orders;
  j["silverberg"] = sb;
  if (c.torsion_q) {
    ordered_json t;
    t["order"] = c.torsion_q->order;
    t["n1"] = c.torsion_q->n1;
    t["n2"] = c.torsion_q->n2;
    ordered_json gens = ordered_json::array();
    for (const auto& g : c.torsion_q->generators) {
      std::ostringstream gx, gy;
      gx << g.x;
      gy << g.y;
      gens.push_back({gx.str(), gy.str()});
    }
    t["generators"] = gens;
    j["torsion_q"] = t;
  } else {
    j["torsion_q"] = nullptr;
  }
  j["notes"] = c.notes;
  return j.dump(2) + "\n";
}

}  // namespace torcert
