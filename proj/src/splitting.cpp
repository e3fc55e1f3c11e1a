#include "torcert/splitting.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace torcert {

namespace {

// resultant of monic f and g over Z by fraction-free Gaussian elimination
// on the Sylvester matrix
cpp_int sylvester_resultant(const std::vector<cpp_int>& f, const std::vector<cpp_int>& g) {
  int n = (int)f.size() - 1, m = (int)g.size() - 1;
  if (n <= 0 || m < 0) return 1;
  int size = n + m;
  std::vector<std::vector<cpp_int>> a(size, std::vector<cpp_int>(size, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) a[i][i + j] = f[n - j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) a[m + i][i + j] = g[m - j];

  // Bareiss
  cpp_int prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < size; ++i)
        if (a[i][k] != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[size - 1][size - 1];
}

using FpPoly = std::vector<u64>;  // dense, constant first, normalized

void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, u64 p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  // reduce by the monic mod
  size_t d = mod.size() - 1;
  for (size_t i = r.size(); i-- > d;) {
    u64 c = r[i];
    if (!c) continue;
    r[i] = 0;
    for (size_t j = 0; j < d; ++j)
      r[i - d + j] = (r[i - d + j] + mulmod(c, p - mod[j] % p, p)) % p;
  }
  r.resize(d);
  fp_trim(r);
  return r;
}

FpPoly fp_mod(FpPoly a, const FpPoly& b, u64 p) {
  // a mod b, b monic-normalized below
  FpPoly m = b;
  fp_trim(m);
  u64 lead_inv = powmod(m.back(), p - 2, p);
  for (auto& c : m) c = mulmod(c, lead_inv, p);
  fp_trim(a);
  while (a.size() >= m.size()) {
    u64 c = a.back();
    size_t shift = a.size() - m.size();
    if (c) {
      for (size_t j = 0; j < m.size(); ++j)
        a[shift + j] = (a[shift + j] + mulmod(c, p - m[j] % p, p)) % p;
    }
    a.pop_back();
    fp_trim(a);
    if (a.size() < m.size()) break;
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, u64 p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, inv, p);
  }
  return a;
}

FpPoly fp_quotient(const FpPoly& a, const FpPoly& b, u64 p) {
  // exact division, b monic
  FpPoly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (r.size() >= b.size() && !r.empty()) {
    u64 c = r.back();
    size_t shift = r.size() - b.size();
    q[shift] = c;
    for (size_t j = 0; j < b.size(); ++j)
      r[shift + j] = (r[shift + j] + mulmod(c, p - b[j] % p, p)) % p;
    fp_trim(r);
    if (r.size() <= shift) break;
  }
  return q;
}

}  // namespace

NumberFieldSpec NumberFieldSpec::from_coeffs(std::vector<i64> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  if (c.size() < 2)
    throw std::invalid_argument("NumberFieldSpec: polynomial must have degree >= 1");
  if (c.back() != 1)
    throw std::invalid_argument("NumberFieldSpec: polynomial must be monic");
  NumberFieldSpec out;
  out.coeffs = std::move(c);
  out.degree = (unsigned)out.coeffs.size() - 1;

  // degree 2 and 3: a rational root is the only way to be reducible
  if (out.degree == 2 || out.degree == 3) {
    auto eval_at = [&](cpp_int x) {
      cpp_int v = 0;
      for (size_t i = out.coeffs.size(); i-- > 0;) v = v * x + out.coeffs[i];
      return v;
    };
    if (out.coeffs[0] == 0)
      throw std::invalid_argument("NumberFieldSpec: polynomial is reducible (root 0)");
    u64 c0 = out.coeffs[0] < 0 ? (u64)(-out.coeffs[0]) : (u64)out.coeffs[0];
    for (u64 r : divisors(factorize(c0))) {
      if (eval_at(cpp_int(r)) == 0 || eval_at(-cpp_int(r)) == 0)
        throw std::invalid_argument("NumberFieldSpec: polynomial is reducible over Q");
    }
  }

  std::vector<cpp_int> f(out.coeffs.begin(), out.coeffs.end());
  if (out.degree == 1) {
    out.poly_disc = 1;
  } else {
    std::vector<cpp_int> df;
    for (size_t i = 1; i < f.size(); ++i) df.push_back(f[i] * (cpp_int)i);
    cpp_int res = sylvester_resultant(f, df);
    int d = (int)out.degree;
    int sgn = (d * (d - 1) / 2) % 2 ? -1 : 1;
    out.poly_disc = sgn * res;
  }

  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                31ull, 37ull, 41ull, 43ull, 47ull}) {
    if (out.poly_disc % p == 0) continue;
    ResidueDegrees rd = residue_degrees(out, p);
    if (rd.degrees.size() == 1 && rd.degrees[0] == out.degree) {
      out.irreducible_mod_some_prime = true;
      break;
    }
  }
  return out;
}

NumberFieldSpec NumberFieldSpec::parse(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace((unsigned char)ch)) s += ch;
  if (s.empty()) throw std::invalid_argument("NumberFieldSpec: empty input");

  if (s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("NumberFieldSpec: unclosed bracket list");
    std::vector<i64> c;
    std::string body = s.substr(1, s.size() - 2);
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok.empty()) throw std::invalid_argument("NumberFieldSpec: empty list entry");
      c.push_back(std::stoll(tok));
    }
    return from_coeffs(std::move(c));
  }

  // term grammar: [+-] coeff | [+-] [coeff*]x[^exp]
  std::vector<i64> c;
  auto bump = [&](size_t deg, i64 v) {
    if (c.size() <= deg) c.resize(deg + 1, 0);
    c[deg] += v;
  };
  size_t i = 0;
  while (i < s.size()) {
    i64 sign = 1;
    if (s[i] == '+') ++i;
    else if (s[i] == '-') { sign = -1; ++i; }
    if (i >= s.size()) throw std::invalid_argument("NumberFieldSpec: dangling sign");
    i64 coef = 1;
    bool saw_digits = false;
    if (std::isdigit((unsigned char)s[i])) {
      size_t j = i;
      while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
      coef = std::stoll(s.substr(i, j - i));
      saw_digits = true;
      i = j;
      if (i < s.size() && s[i] == '*') ++i;
    }
    size_t deg = 0;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t j = i;
        while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
        if (j == i) throw std::invalid_argument("NumberFieldSpec: missing exponent");
        deg = (size_t)std::stoull(s.substr(i, j - i));
        i = j;
      }
    } else if (!saw_digits) {
      throw std::invalid_argument("NumberFieldSpec: expected term");
    }
    bump(deg, sign * coef);
  }
  return from_coeffs(std::move(c));
}

std::string NumberFieldSpec::display() const {
  std::string out;
  for (size_t d = coeffs.size(); d-- > 0;) {
    i64 c = coeffs[d];
    if (c == 0) continue;
    if (!out.empty()) out += c > 0 ? " + " : " - ";
    else if (c < 0) out += "-";
    i64 a = c < 0 ? -c : c;
    if (d == 0 || a != 1) out += std::to_string(a);
    if (d >= 1) out += "x";
    if (d >= 2) out += "^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

QuadSplit quadratic_split(i64 D, u64 p) {
  if (p < 2 || !is_prime_u64(p)) throw std::invalid_argument("quadratic_split: p must be prime");
  if (D == 0 || (((D % 4) + 4) % 4 != 0 && ((D % 4) + 4) % 4 != 1))
    throw std::invalid_argument("quadratic_split: D must be a discriminant");
  int k = kronecker(D, (i64)p);
  if (k == 1) return QuadSplit::split;
  if (k == -1) return QuadSplit::inert;
  return QuadSplit::ramified;
}

ResidueDegrees residue_degrees(const NumberFieldSpec& f, u64 p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("residue_degrees: p must be prime");
  ResidueDegrees out;
  if (f.poly_disc % p == 0) {
    out.ramified = true;
    return out;
  }
  FpPoly fbar;
  for (i64 c : f.coeffs) {
    i64 r = c % (i64)p;
    fbar.push_back((u64)(r < 0 ? r + (i64)p : r));
  }
  fp_trim(fbar);  // leading coeff 1, never drops for monic f

  // distinct-degree: gcd(x^{p^i} - x, remaining) collects degree-i factors
  FpPoly remaining = fbar;
  FpPoly xp{0, 1};  // x^{p^i} mod fbar, advanced by p-th power each round
  unsigned i = 0;
  while (remaining.size() > 1) {
    ++i;
    if (2 * i > (remaining.size() - 1)) {
      // what is left is a single irreducible factor
      out.degrees.push_back((unsigned)(remaining.size() - 1));
      break;
    }
    // advance x^{p^i} mod fbar
    FpPoly next{1};
    FpPoly base = xp;
    u64 e = p;
    while (e) {
      if (e & 1) next = fp_mulmod(next, base, fbar, p);
      base = fp_mulmod(base, base, fbar, p);
      e >>= 1;
    }
    xp = next;
    FpPoly probe = xp;
    // probe - x
    if (probe.size() < 2) probe.resize(2, 0);
    probe[1] = (probe[1] + p - 1) % p;
    fp_trim(probe);
    FpPoly g = fp_gcd(probe, remaining, p);
    if (g.size() > 1) {
      unsigned found = (unsigned)(g.size() - 1) / i;
      for (unsigned k = 0; k < found; ++k) out.degrees.push_back(i);
      remaining = fp_quotient(remaining, g, p);
      fp_trim(remaining);
    }
  }
  std::sort(out.degrees.begin(), out.degrees.end());

  unsigned total = 0;
  for (unsigned d : out.degrees) total += d;
  if (total != f.degree)
    throw std::logic_error("residue_degrees: factor degrees do not sum to deg f");
  return out;
}

namespace {

bool has_degree(const NumberFieldSpec& f, u64 p, unsigned d, const char* who) {
  ResidueDegrees rd = residue_degrees(f, p);
  if (rd.ramified) throw std::invalid_argument(std::string(who) + ": p ramifies in f");
  return std::find(rd.degrees.begin(), rd.degrees.end(), d) != rd.degrees.end();
}

}  // namespace

bool has_degree_one_prime(const NumberFieldSpec& f, u64 p) {
  return has_degree(f, p, 1, "has_degree_one_prime");
}

bool has_degree_two_prime(const NumberFieldSpec& f, u64 p) {
  return has_degree(f, p, 2, "has_degree_two_prime");
}

bool subfield_check_disjoint(i64 D, const NumberFieldSpec& f, u64 bound) {
  for (u64 p = 3; p <= bound; ++p) {
    if (!is_prime_u64(p)) continue;
    if (f.poly_disc % p == 0) continue;
    if (kronecker(D, (i64)p) != -1) continue;
    if (has_degree_one_prime(f, p)) return true;
  }
  return false;
}

bool subfield_check_contained(i64 D, const NumberFieldSpec& f, u64 bound) {
  if (f.degree % 2 != 0) return false;
  for (u64 p = 3; p <= bound; ++p) {
    if (!is_prime_u64(p)) continue;
    if (f.poly_disc % p == 0) continue;
    if (kronecker(D, (i64)p) != -1) continue;
    // inert p: residue fields of K all contain F_{p^2}, so degrees are even
    for (unsigned d : residue_degrees(f, p).degrees)
      if (d % 2 != 0) return false;
  }
  return true;
}

}  // namespace torcert
