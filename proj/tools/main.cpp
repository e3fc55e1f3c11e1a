#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "torcert/certifier.hpp"
#include "torcert/dataset.hpp"
#include "torcert/density.hpp"
#include "torcert/grouplab.hpp"
#include "torcert/kernels.hpp"

using namespace torcert;

namespace {

// exit codes: 0 pass or no-information, 1 usage, 2 verdict failure
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerdict = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot write " + out_path);
  out << text;
  std::cout << "wrote " << out_path << "\n";
}

std::string a_inv_str(const std::vector<i64>& a) {
  std::ostringstream s;
  s << "[";
  for (size_t i = 0; i < a.size(); ++i) s << (i ? ", " : "") << a[i];
  s << "]";
  return s.str();
}

struct CurveArgs {
  std::string label;
  std::string curves_path;
  i64 a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
  i64 cm_disc = 0;
  bool have_disc = false;

  void add_to(CLI::App* cmd, bool with_disc) {
    cmd->add_option("--label", label, "curve label from the bundled table");
    cmd->add_option("--curves", curves_path, "JSONL file replacing the bundled table");
    cmd->add_option("--a1", a1, "a1 coefficient");
    cmd->add_option("--a2", a2, "a2 coefficient");
    cmd->add_option("--a3", a3, "a3 coefficient");
    cmd->add_option("--a4", a4, "a4 coefficient");
    cmd->add_option("--a6", a6, "a6 coefficient");
    if (with_disc)
      disc_opt = cmd->add_option("--cm-disc", cm_disc,
                                 "discriminant of the multiplication order");
  }

  std::pair<WeierstrassCurve, std::string> resolve() {
    have_disc = disc_opt && disc_opt->count() > 0;
    if (!label.empty()) {
      std::optional<CurveRecord> rec;
      if (!curves_path.empty()) {
        for (const auto& r : load_curves(curves_path))
          if (r.label == label) rec = r;
      } else {
        rec = find_curve(label);
      }
      if (!rec) throw std::invalid_argument("unknown curve label " + label);
      if (have_disc && cm_disc != rec->cm_disc)
        throw std::invalid_argument("--cm-disc disagrees with the table entry");
      cm_disc = rec->cm_disc;
      have_disc = true;
      return {rec->curve(), rec->label};
    }
    return {WeierstrassCurve::long_form(a1, a2, a3, a4, a6), ""};
  }

 private:
  CLI::Option* disc_opt = nullptr;
};

CertCase pick_case(i64 D, const NumberFieldSpec& f) {
  if (f.degree == 1) return CertCase::case1;
  i64 fund = fundamental_discriminant(D);
  if (subfield_check_contained(D, f))
    return (fund == -3 || fund == -4) ? CertCase::case2_excluded : CertCase::case2;
  if (subfield_check_disjoint(D, f)) return CertCase::case1;
  throw std::invalid_argument(
      "splitting evidence decides neither containment nor disjointness; pass --case");
}

std::string torsion_structure(const TorsionGroup& t) {
  if (t.order == 1) return "trivial";
  if (t.n1 == 1) return "Z/" + std::to_string(t.n2);
  return "Z/" + std::to_string(t.n1) + " x Z/" + std::to_string(t.n2);
}

std::string join_primes(const std::vector<PrimeContribution>& cs, size_t cap) {
  std::ostringstream s;
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i >= cap) {
      s << " ...";
      break;
    }
    s << (i ? " " : "") << cs[i].p;
  }
  return s.str();
}

std::string certificate_table(const TorsionCertificate& c, const TheoremVerdict& v) {
  std::ostringstream s;
  if (!c.label.empty()) s << "label         " << c.label << "\n";
  s << "a_invariants  " << a_inv_str(c.a_invariants) << "\n";
  s << "cm_disc       " << c.cm_disc << " (fundamental " << fundamental_discriminant(c.cm_disc)
    << ", conductor " << conductor_of(c.cm_disc) << ")\n";
  s << "field         " << c.field << " (degree " << c.degree << ")\n";
  s << "case          " << cert_case_name(c.cert_case) << "\n";
  if (c.used_ramified) s << "ramified      included\n";
  s << "prime_bound   " << c.prime_bound << "\n";
  s << "primes_used   " << c.contributions.size();
  if (!c.contributions.empty()) s << ": " << join_primes(c.contributions, 20);
  s << "\n";
  if (c.no_information) {
    s << "gcd_bound     none (no qualifying primes)\n";
  } else {
    s << "gcd_bound     " << c.gcd_bound << "\n";
  }
  if (c.phi.on != "none") {
    s << "phi           phi(" << c.phi.value << ") = " << c.phi.phi << (c.phi.satisfied ? " <= " : " > ")
      << c.phi.limit << " on " << c.phi.on << (c.phi.asserted ? " (asserted)" : " (informational)")
      << "\n";
  }
  s << "order_cap     " << c.silverberg << " from CM automorphisms; admissible orders:";
  for (u64 n : c.silverberg_orders) s << " " << n;
  s << "\n";
  if (c.torsion_q) {
    s << "torsion_Q     " << torsion_structure(*c.torsion_q) << " (order " << c.torsion_q->order
      << ")\n";
  }
  for (const auto& n : c.notes) s << "note          " << n << "\n";
  for (const auto& n : v.notes) s << "note          " << n << "\n";
  s << "verdict       " << (v.pass() ? "PASS" : "FAIL") << "\n";
  return s.str();
}

std::string certificate_csv(const TorsionCertificate& c) {
  std::ostringstream s;
  s << "p,count,factor\n";
  for (const auto& pc : c.contributions)
    s << pc.p << "," << pc.count << "," << pc.factor << "\n";
  return s.str();
}

int run_certify(CurveArgs& ca, const std::string& field, u64 max_p,
                const std::string& case_name, bool use_ramified, unsigned workers,
                const std::string& format, const std::string& out) {
  auto [e, label] = ca.resolve();
  if (!ca.have_disc) throw std::invalid_argument("certify needs --cm-disc or --label");
  auto f = NumberFieldSpec::parse(field);

  CertCase cc;
  if (case_name == "auto") cc = pick_case(ca.cm_disc, f);
  else if (case_name == "case1") cc = CertCase::case1;
  else if (case_name == "case2") cc = CertCase::case2;
  else cc = CertCase::case2_excluded;

  TorsionCertificate cert;
  switch (cc) {
    case CertCase::case1:
      cert = certify_case1(e, ca.cm_disc, f, max_p, use_ramified, workers);
      break;
    case CertCase::case2:
      cert = certify_case2(e, ca.cm_disc, f, max_p, workers);
      break;
    case CertCase::case2_excluded:
      cert = certify_case2_excluded(e, ca.cm_disc, f, max_p, workers);
      break;
  }
  cert.label = label;

  auto v = theorem_check(cert);
  if (format == "json") emit(certificate_to_json(cert), out);
  else if (format == "csv") emit(certificate_csv(cert), out);
  else emit(certificate_table(cert, v), out);
  return v.pass() ? kExitOk : kExitVerdict;
}

int run_torsion(CurveArgs& ca, u64 search_bound, const std::string& format,
                const std::string& out) {
  auto [e, label] = ca.resolve();
  auto t = torsion_over_q(e);

  bool oracle_ok = true;
  if (search_bound > 0) {
    auto s = bounded_torsion_search(e, search_bound);
    oracle_ok = s.order == t.order && s.n1 == t.n1 && s.n2 == t.n2;
  }

  if (format == "json") {
    nlohmann::ordered_json j;
    j["label"] = label;
    j["order"] = t.order;
    j["n1"] = t.n1;
    j["n2"] = t.n2;
    j["structure"] = torsion_structure(t);
    auto pts = nlohmann::ordered_json::array();
    for (const auto& p : t.points) {
      std::ostringstream px, py;
      px << p.x;
      py << p.y;
      pts.push_back({px.str(), py.str()});
    }
    j["points"] = pts;
    if (search_bound > 0) j["search_agrees"] = oracle_ok;
    emit(j.dump(2) + "\n", out);
  } else {
    std::ostringstream s;
    if (!label.empty()) s << "label      " << label << "\n";
    s << "curve      " << a_inv_str({e.a1, e.a2, e.a3, e.a4, e.a6}) << "\n";
    s << "torsion    " << torsion_structure(t) << " (order " << t.order << ")\n";
    for (const auto& g : t.generators)
      s << "generator  (" << g.x << ", " << g.y << ")\n";
    if (search_bound > 0)
      s << "search     " << (oracle_ok ? "agrees" : "DISAGREES") << " (bound " << search_bound
        << ")\n";
    emit(s.str(), out);
  }
  return oracle_ok ? kExitOk : kExitVerdict;
}

int run_supersingular(CurveArgs& ca, u64 max_p, unsigned workers, const std::string& format,
                      const std::string& out) {
  if (max_p > 200000) throw std::invalid_argument("--max-p capped at 2e5 here");
  auto [e, label] = ca.resolve();
  auto scan = trace_scan_parallel(e, max_p, workers);
  u64 cond = ca.have_disc ? conductor_of(ca.cm_disc) : 1;

  u64 ss = 0, mismatches = 0, checked = 0;
  std::vector<u64> ss_primes;
  for (size_t i = 0; i < scan.primes.size(); ++i) {
    u64 p = scan.primes[i];
    bool zero = scan.traces[i] == 0;
    if (zero) {
      ++ss;
      ss_primes.push_back(p);
    }
    if (ca.have_disc && cond % p != 0) {
      ++checked;
      if (zero != is_supersingular_deuring(ca.cm_disc, p)) ++mismatches;
    }
  }

  if (format == "csv") {
    std::ostringstream s;
    s << "p,a_p,supersingular\n";
    for (size_t i = 0; i < scan.primes.size(); ++i)
      s << scan.primes[i] << "," << scan.traces[i] << "," << (scan.traces[i] == 0 ? 1 : 0)
        << "\n";
    emit(s.str(), out);
  } else {
    std::ostringstream s;
    if (!label.empty()) s << "label          " << label << "\n";
    s << "curve          " << a_inv_str({e.a1, e.a2, e.a3, e.a4, e.a6}) << "\n";
    s << "max_p          " << max_p << "\n";
    s << "good primes    " << scan.primes.size() << "\n";
    s << "supersingular  " << ss << ":";
    for (size_t i = 0; i < ss_primes.size() && i < 25; ++i) s << " " << ss_primes[i];
    if (ss_primes.size() > 25) s << " ...";
    s << "\n";
    if (ca.have_disc)
      s << "splitting check  " << checked << " primes, " << mismatches << " mismatches\n";
    emit(s.str(), out);
  }
  return mismatches == 0 ? kExitOk : kExitVerdict;
}

int run_lemma23(std::vector<std::string>& groups, unsigned max_order,
                const std::string& format, const std::string& out) {
  if (groups.empty()) groups = group_catalog(max_order);
  std::ostringstream s;
  bool csv = format == "csv";
  if (csv) s << "group,order,tested,vacuous,all_pass\n";
  unsigned total_tested = 0, failures = 0;
  for (const auto& name : groups) {
    auto g = GroupTable::named(name);
    auto rep = lemma23_exhaustive(g);
    total_tested += rep.tested;
    if (!rep.all_pass) ++failures;
    if (csv) {
      s << rep.group_name << "," << rep.group_order << "," << rep.tested << ","
        << rep.skipped_vacuous << "," << (rep.all_pass ? 1 : 0) << "\n";
    } else {
      s << std::left << std::setw(14) << rep.group_name << " order " << std::setw(3)
        << rep.group_order << " tested " << std::setw(5) << rep.tested << " vacuous "
        << std::setw(4) << rep.skipped_vacuous << (rep.all_pass ? " OK" : " FAIL") << "\n";
    }
  }
  if (!csv)
    s << groups.size() << " groups, " << total_tested << " triples tested, " << failures
      << " failures\n";
  emit(s.str(), out);
  return failures == 0 ? kExitOk : kExitVerdict;
}

int run_gl2(u64 q, u64 max_q, const std::string& format, const std::string& out) {
  // formula product overflows past this prime
  constexpr u64 kMaxQ = 46337;
  std::vector<u64> qs;
  if (q > 0) {
    qs.push_back(q);
  } else {
    for (u64 v : sieve_primes_serial(max_q)) qs.push_back(v);
  }
  std::ostringstream s;
  bool csv = format == "csv";
  if (csv) s << "q,group_order,diagonalizable,ratio,brute_agrees\n";
  u64 mismatches = 0;
  for (u64 v : qs) {
    if (!is_prime_u64(v) || v > kMaxQ)
      throw std::invalid_argument("q must be a prime <= " + std::to_string(kMaxQ));
    u64 order = gl2_order(v);
    u64 diag = gl2_diag_formula(v);
    double ratio = double(diag) / double(order);
    int agrees = -1;
    if (v <= 7) {
      agrees = gl2_diag_brute(v) == diag ? 1 : 0;
      if (!agrees) ++mismatches;
    }
    if (csv) {
      s << v << "," << order << "," << diag << "," << std::fixed << std::setprecision(6)
        << ratio << "," << (agrees < 0 ? "" : std::to_string(agrees)) << "\n";
    } else {
      s << "q=" << std::left << std::setw(7) << v << " |GL2|=" << std::setw(12) << order
        << " diagonalizable=" << std::setw(12) << diag << " ratio=" << std::fixed
        << std::setprecision(6) << ratio;
      if (agrees >= 0) s << (agrees ? "  brute agrees" : "  BRUTE DISAGREES");
      s << "\n";
    }
  }
  emit(s.str(), out);
  return mismatches == 0 ? kExitOk : kExitVerdict;
}

int run_density(const std::string& kind, i64 D, const std::string& field, u64 modulus,
                u64 residue, u64 max_p, unsigned workers, const std::string& format,
                const std::string& out) {
  DensityReport rep;
  if (kind == "inert") {
    rep = density_inert(D, max_p, workers);
  } else if (kind == "lemma21") {
    rep = density_lemma21(D, NumberFieldSpec::parse(field), max_p, workers);
  } else if (kind == "lemma22") {
    rep = density_lemma22(D, NumberFieldSpec::parse(field), max_p, workers);
  } else {
    rep = density_congruence(modulus, residue, max_p, workers);
  }

  if (format == "csv") {
    emit(density_csv(rep), out);
  } else {
    std::ostringstream s;
    s << "kind        " << rep.kind << "\n";
    s << "scope       " << rep.description << "\n";
    s << "primes      " << rep.total_primes << " counted, " << rep.ramified_skipped
      << " ramified skipped\n";
    s << "events      " << rep.events << "\n";
    s << std::fixed << std::setprecision(6);
    s << "density     " << rep.density << "\n";
    s << "target      " << rep.target << (rep.lower_bound_only ? " (lower bound)" : "")
      << " tolerance " << rep.tolerance << "\n";
    if (!rep.hypothesis_ok) s << "hypothesis  SUSPECT: " << rep.hypothesis_note << "\n";
    s << "verdict     " << (rep.verdict ? "PASS" : "FAIL") << "\n";
    emit(s.str(), out);
  }
  return rep.verdict ? kExitOk : kExitVerdict;
}

int run_list_curves(const std::string& curves_path, const std::string& format,
                    const std::string& out) {
  auto table = curves_path.empty() ? builtin_curves() : load_curves(curves_path);
  if (format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : table) {
      nlohmann::ordered_json j;
      j["label"] = r.label;
      j["a_invariants"] = r.a;
      j["cm_disc"] = r.cm_disc;
      arr.push_back(j);
    }
    emit(arr.dump(2) + "\n", out);
  } else {
    std::ostringstream s;
    for (const auto& r : table) {
      s << std::left << std::setw(12) << r.label << " "
        << a_inv_str({r.a[0], r.a[1], r.a[2], r.a[3], r.a[4]}) << "  cm_disc " << r.cm_disc
        << " (fundamental " << fundamental_discriminant(r.cm_disc) << ", conductor "
        << conductor_of(r.cm_disc) << ")\n";
    }
    emit(s.str(), out);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"torsion divisibility certificates for CM elliptic curves"};
  app.require_subcommand(1);

  std::string format = "table", out, field = "x", case_name = "auto", kind;
  unsigned workers = 0, max_order = 16;
  u64 max_p = 1000, search_bound = 0, q = 0, max_q = 7, modulus = 0, residue = 0;
  bool use_ramified = false;
  std::vector<std::string> groups;
  CurveArgs ca_cert, ca_tor, ca_ss;
  std::string curves_path;

  auto* cert = app.add_subcommand("certify", "certify a divisor of the torsion order");
  ca_cert.add_to(cert, true);
  cert->add_option("--field", field, "number field given as a monic integer polynomial in x");
  cert->add_option("--max-p", max_p, "use primes up to this bound");
  cert->add_option("--case", case_name, "certificate route")
      ->check(CLI::IsMember({"auto", "case1", "case2", "case2-excluded"}));
  cert->add_flag("--use-ramified", use_ramified, "also use primes ramified in the CM field");
  cert->add_option("--workers", workers, "worker threads (default: TORCERT_WORKERS or all)");
  cert->add_option("--format", format, "table, json, or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  cert->add_option("--out", out, "write the report to this file");

  auto* tor = app.add_subcommand("torsion", "exact rational torsion subgroup");
  ca_tor.add_to(tor, false);
  tor->add_option("--search-bound", search_bound,
                  "cross-check against the direct point search up to this height");
  tor->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  tor->add_option("--out", out, "write the report to this file");

  auto* ss = app.add_subcommand("supersingular", "trace scan with the splitting cross-check");
  ca_ss.add_to(ss, true);
  ss->add_option("--max-p", max_p, "scan good primes up to this bound");
  ss->add_option("--workers", workers, "worker threads");
  ss->add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  ss->add_option("--out", out, "write the report to this file");

  auto* l23 = app.add_subcommand("lemma23", "square counts in index-2 cosets, exhaustively");
  l23->add_option("--group", groups, "named group, repeatable (C6, D4, S4, Q8, C2xC4, ...)");
  bool exhaustive = true;
  l23->add_flag("--exhaustive", exhaustive, "sweep all (N, H, c) triples (always on)");
  l23->add_option("--max-order", max_order, "sweep the catalog up to this order (cap 24)");
  l23->add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  l23->add_option("--out", out, "write the report to this file");

  auto* gl2 = app.add_subcommand("gl2", "diagonalizable fraction of GL2 over F_q");
  gl2->add_option("--q", q, "single prime field size");
  gl2->add_option("--max-q", max_q, "sweep primes up to this bound");
  gl2->add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  gl2->add_option("--out", out, "write the report to this file");

  auto* den = app.add_subcommand("density", "prime density measurements");
  den->add_option("--kind", kind, "inert, lemma21, lemma22, or congruence")
      ->required()
      ->check(CLI::IsMember({"inert", "lemma21", "lemma22", "congruence"}));
  den->add_option("--cm-disc", ca_cert.cm_disc, "discriminant for inert/lemma kinds");
  den->add_option("--field", field, "number field for the lemma kinds");
  den->add_option("--modulus", modulus, "modulus for the congruence kind");
  den->add_option("--residue", residue, "residue class for the congruence kind");
  den->add_option("--max-p", max_p, "count primes up to this bound");
  den->add_option("--workers", workers, "worker threads");
  den->add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  den->add_option("--out", out, "write the report to this file");

  auto* lc = app.add_subcommand("list-curves", "show the curve table");
  lc->add_option("--curves", curves_path, "JSONL file replacing the bundled table");
  lc->add_option("--format", format, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
  lc->add_option("--out", out, "write the report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (cert->parsed())
      return run_certify(ca_cert, field, max_p, case_name, use_ramified, workers, format, out);
    if (tor->parsed()) return run_torsion(ca_tor, search_bound, format, out);
    if (ss->parsed()) return run_supersingular(ca_ss, max_p, workers, format, out);
    if (l23->parsed()) return run_lemma23(groups, max_order, format, out);
    if (gl2->parsed()) return run_gl2(q, max_q, format, out);
    if (den->parsed())
      return run_density(kind, ca_cert.cm_disc, field, modulus, residue, max_p, workers,
                         format, out);
    if (lc->parsed()) return run_list_curves(curves_path, format, out);
  } catch (const DichotomyError& e) {
    std::cerr << "verdict failure: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const std::domain_error& e) {
    std::cerr << "verdict failure: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    // a broken internal invariant, e.g. the small-prime audit
    std::cerr << "verdict failure: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
