#include "torcert/grouplab.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace torcert {

namespace {

constexpr unsigned kMaxOrder = 24;
constexpr unsigned kMaxDegree = 8;

void validate_table(const GroupTable& g) {
  unsigned n = g.n;
  if (n == 0 || n > kMaxOrder) throw std::invalid_argument("group order out of range");
  if (g.mul.size() != (size_t)n * n || g.labels.size() != n)
    throw std::invalid_argument("group table shape mismatch");
  for (unsigned v : g.mul)
    if (v >= n) throw std::invalid_argument("group table entry out of range");
  for (unsigned a = 0; a < n; ++a)
    if (g.op(g.id, a) != a || g.op(a, g.id) != a)
      throw std::invalid_argument("group identity fails");
  for (unsigned a = 0; a < n; ++a) {
    bool has_inv = false;
    for (unsigned b = 0; b < n; ++b)
      if (g.op(a, b) == g.id && g.op(b, a) == g.id) has_inv = true;
    if (!has_inv) throw std::invalid_argument("group inverse missing");
  }
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b)
      for (unsigned c = 0; c < n; ++c)
        if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
          throw std::invalid_argument("group associativity fails");
}

GroupTable cyclic(unsigned m) {
  GroupTable g;
  g.n = m;
  g.id = 0;
  g.mul.resize((size_t)m * m);
  for (unsigned a = 0; a < m; ++a)
    for (unsigned b = 0; b < m; ++b) g.mul[a * m + b] = (a + b) % m;
  for (unsigned a = 0; a < m; ++a)
    g.labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
  return g;
}

GroupTable dihedral(unsigned m) {
  // 2m elements r^i s^eps with s r = r^-1 s
  unsigned n = 2 * m;
  GroupTable g;
  g.n = n;
  g.id = 0;
  g.mul.resize((size_t)n * n);
  auto idx = [m](unsigned i, unsigned eps) { return eps * m + i; };
  for (unsigned i = 0; i < m; ++i)
    for (unsigned e1 = 0; e1 < 2; ++e1)
      for (unsigned j = 0; j < m; ++j)
        for (unsigned e2 = 0; e2 < 2; ++e2) {
          unsigned k = e1 ? (i + m - j % m) % m : (i + j) % m;
          g.mul[idx(i, e1) * n + idx(j, e2)] = idx(k, (e1 + e2) % 2);
        }
  g.labels.resize(n);
  for (unsigned i = 0; i < m; ++i) {
    g.labels[idx(i, 0)] = i == 0 ? "e" : i == 1 ? "r" : "r^" + std::to_string(i);
    g.labels[idx(i, 1)] = i == 0 ? "s" : "r^" + std::to_string(i) + "*s";
  }
  return g;
}

GroupTable quaternion8() {
  // (-1)^s * e_b with e = (1, i, j, k); element index = b ? 2b + s : s
  GroupTable g;
  g.n = 8;
  g.id = 0;
  g.labels = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  static const int basis_sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const unsigned basis_idx[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  auto decode = [](unsigned e, unsigned& s, unsigned& b) {
    if (e < 2) { s = e; b = 0; }
    else { b = e / 2; s = e % 2; }
  };
  auto encode = [](unsigned s, unsigned b) { return b ? 2 * b + s : s; };
  g.mul.resize(64);
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) {
      unsigned sx, bx, sy, by;
      decode(x, sx, bx);
      decode(y, sy, by);
      unsigned s = (sx + sy + (basis_sign[bx][by] < 0 ? 1 : 0)) % 2;
      g.mul[x * 8 + y] = encode(s, basis_idx[bx][by]);
    }
  return g;
}

std::string cycle_label(const std::vector<unsigned>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (unsigned s = 0; s < perm.size(); ++s) {
    if (seen[s] || perm[s] == s) continue;
    out += "(";
    unsigned x = s;
    while (!seen[x]) {
      seen[x] = true;
      out += std::to_string(x);
      x = perm[x];
      if (x != s) out += " ";
    }
    out.back() = ')';
  }
  return out.empty() ? "e" : out;
}

GroupTable from_perm_set(std::vector<std::vector<unsigned>> elems) {
  std::sort(elems.begin(), elems.end());
  unsigned n = (unsigned)elems.size();
  if (n == 0 || n > kMaxOrder) throw std::invalid_argument("group order out of range");
  GroupTable g;
  g.n = n;
  g.mul.resize((size_t)n * n);
  std::map<std::vector<unsigned>, unsigned> index;
  for (unsigned i = 0; i < n; ++i) index[elems[i]] = i;
  unsigned deg = (unsigned)elems[0].size();
  std::vector<unsigned> prod(deg);
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = 0; b < n; ++b) {
      for (unsigned t = 0; t < deg; ++t) prod[t] = elems[a][elems[b][t]];
      auto it = index.find(prod);
      if (it == index.end()) throw std::invalid_argument("permutation set not closed");
      g.mul[a * n + b] = it->second;
    }
  std::vector<unsigned> ident(deg);
  for (unsigned t = 0; t < deg; ++t) ident[t] = t;
  g.id = index.at(ident);
  for (auto& e : elems) g.labels.push_back(cycle_label(e));
  return g;
}

GroupTable symmetric(unsigned m, bool even_only) {
  if (m < 1 || m > 4) throw std::invalid_argument("symmetric/alternating degree must be 1..4");
  std::vector<unsigned> base(m);
  for (unsigned i = 0; i < m; ++i) base[i] = i;
  std::vector<std::vector<unsigned>> elems;
  do {
    if (even_only) {
      unsigned inversions = 0;
      for (unsigned i = 0; i < m; ++i)
        for (unsigned j = i + 1; j < m; ++j)
          if (base[i] > base[j]) ++inversions;
      if (inversions % 2) continue;
    }
    elems.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return from_perm_set(std::move(elems));
}

GroupTable product(const GroupTable& a, const GroupTable& b) {
  unsigned n = a.n * b.n;
  if (n > kMaxOrder) throw std::invalid_argument("product order exceeds 24");
  GroupTable g;
  g.n = n;
  g.id = a.id * b.n + b.id;
  g.mul.resize((size_t)n * n);
  for (unsigned x1 = 0; x1 < a.n; ++x1)
    for (unsigned x2 = 0; x2 < b.n; ++x2)
      for (unsigned y1 = 0; y1 < a.n; ++y1)
        for (unsigned y2 = 0; y2 < b.n; ++y2)
          g.mul[(x1 * b.n + x2) * n + (y1 * b.n + y2)] =
              a.op(x1, y1) * b.n + b.op(x2, y2);
  for (unsigned x1 = 0; x1 < a.n; ++x1)
    for (unsigned x2 = 0; x2 < b.n; ++x2)
      g.labels.push_back("(" + a.labels[x1] + "," + b.labels[x2] + ")");
  return g;
}

GroupTable named_factor(const std::string& s) {
  if (s == "Q8") return quaternion8();
  if (s.size() < 2) throw std::invalid_argument("unknown group name: " + s);
  char fam = s[0];
  unsigned m;
  try {
    size_t used = 0;
    m = (unsigned)std::stoul(s.substr(1), &used);
    if (used + 1 != s.size()) throw std::invalid_argument("");
  } catch (...) {
    throw std::invalid_argument("unknown group name: " + s);
  }
  switch (fam) {
    case 'C': if (m >= 1 && m <= kMaxOrder) return cyclic(m); break;
    case 'D': if (m >= 1 && 2 * m <= kMaxOrder) return dihedral(m); break;
    case 'S': return symmetric(m, false);
    case 'A': return symmetric(m, true);
    default: break;
  }
  throw std::invalid_argument("unknown group name: " + s);
}

unsigned hch_count_core(const GroupTable& g, Subgroup H, unsigned c) {
  Subgroup coset = 0;
  for (unsigned h1 = 0; h1 < g.n; ++h1) {
    if (!subgroup_contains(H, h1)) continue;
    for (unsigned h2 = 0; h2 < g.n; ++h2)
      if (subgroup_contains(H, h2)) coset |= 1u << g.op(g.op(h1, c), h2);
  }
  unsigned count = 0;
  for (unsigned x = 0; x < g.n; ++x)
    if (subgroup_contains(coset, x) && subgroup_contains(H, g.op(x, x))) ++count;
  return count;
}

Subgroup closure_of(const GroupTable& g, Subgroup seed) {
  Subgroup s = seed | (1u << g.id);
  for (;;) {
    Subgroup grown = s;
    for (unsigned a = 0; a < g.n; ++a) {
      if (!(s >> a & 1)) continue;
      for (unsigned b = 0; b < g.n; ++b)
        if (s >> b & 1) grown |= 1u << g.op(a, b);
    }
    if (grown == s) return s;
    s = grown;
  }
}

}  // namespace

unsigned GroupTable::inv(unsigned a) const {
  for (unsigned b = 0; b < n; ++b)
    if (op(a, b) == id) return b;
  throw std::logic_error("element has no inverse");
}

unsigned GroupTable::order_of(unsigned a) const {
  unsigned x = a, k = 1;
  while (x != id) {
    x = op(x, a);
    ++k;
  }
  return k;
}

GroupTable GroupTable::named(const std::string& name) {
  std::string s;
  for (char ch : name)
    if (!std::isspace((unsigned char)ch)) s += ch;
  std::vector<std::string> parts;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == 'x') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  if (parts.empty() || parts[0].empty())
    throw std::invalid_argument("empty group name");
  GroupTable g = named_factor(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) g = product(g, named_factor(parts[i]));
  g.name = s;
  validate_table(g);
  return g;
}

GroupTable GroupTable::from_generators(const std::vector<std::vector<unsigned>>& gens) {
  if (gens.empty()) throw std::invalid_argument("no generators given");
  size_t deg = gens[0].size();
  if (deg < 1 || deg > kMaxDegree)
    throw std::invalid_argument("permutation degree must be 1..8");
  for (const auto& p : gens) {
    if (p.size() != deg) throw std::invalid_argument("generators must share one degree");
    std::vector<bool> hit(deg, false);
    for (unsigned v : p) {
      if (v >= deg || hit[v]) throw std::invalid_argument("not a permutation");
      hit[v] = true;
    }
  }
  std::vector<unsigned> ident(deg);
  for (unsigned t = 0; t < deg; ++t) ident[t] = t;
  std::set<std::vector<unsigned>> seen{ident};
  std::vector<std::vector<unsigned>> queue{ident};
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (const auto& p : gens) {
      std::vector<unsigned> nxt(deg);
      for (unsigned t = 0; t < deg; ++t) nxt[t] = cur[p[t]];
      if (seen.insert(nxt).second) {
        if (seen.size() > kMaxOrder)
          throw std::invalid_argument("generated group exceeds order 24");
        queue.push_back(nxt);
      }
    }
  }
  GroupTable g = from_perm_set({seen.begin(), seen.end()});
  g.name = "perm";
  validate_table(g);
  return g;
}

unsigned subgroup_size(Subgroup s) { return (unsigned)std::popcount(s); }

bool subgroup_contains(Subgroup s, unsigned e) { return (s >> e) & 1; }

bool is_subgroup(const GroupTable& g, Subgroup s) {
  if (!subgroup_contains(s, g.id)) return false;
  for (unsigned a = 0; a < g.n; ++a) {
    if (!subgroup_contains(s, a)) continue;
    for (unsigned b = 0; b < g.n; ++b)
      if (subgroup_contains(s, b) && !subgroup_contains(s, g.op(a, b))) return false;
  }
  return true;
}

std::vector<Subgroup> enumerate_subgroups(const GroupTable& g) {
  std::set<Subgroup> found;
  std::vector<Subgroup> queue;
  Subgroup trivial = 1u << g.id;
  found.insert(trivial);
  queue.push_back(trivial);
  while (!queue.empty()) {
    Subgroup s = queue.back();
    queue.pop_back();
    for (unsigned e = 0; e < g.n; ++e) {
      if (subgroup_contains(s, e)) continue;
      Subgroup grown = closure_of(g, s | (1u << e));
      if (g.n % subgroup_size(grown) == 0 && found.insert(grown).second)
        queue.push_back(grown);
    }
  }
  return {found.begin(), found.end()};
}

unsigned lemma23_count(const GroupTable& g, Subgroup N, Subgroup H, unsigned c) {
  if (!is_subgroup(g, N) || 2 * subgroup_size(N) != g.n)
    throw std::invalid_argument("N must be a subgroup of index 2");
  if (!is_subgroup(g, H) || (H & ~N) != 0)
    throw std::invalid_argument("H must be a subgroup of N");
  if (c >= g.n || subgroup_contains(N, c) || g.op(c, c) != g.id || c == g.id)
    throw std::invalid_argument("c must be an involution outside N");
  unsigned count = 0;
  for (unsigned x = 0; x < g.n; ++x)
    if (!subgroup_contains(N, x) && subgroup_contains(H, g.op(x, x))) ++count;
  return count;
}

unsigned hch_exact_count(const GroupTable& g, Subgroup H, unsigned c) {
  if (!is_subgroup(g, H)) throw std::invalid_argument("H must be a subgroup");
  if (c >= g.n || g.op(c, c) != g.id || c == g.id)
    throw std::invalid_argument("c must be an involution");
  bool separated = false;
  for (Subgroup N : enumerate_subgroups(g))
    if (2 * subgroup_size(N) == g.n && (H & ~N) == 0 && !subgroup_contains(N, c))
      separated = true;
  if (!separated)
    throw std::invalid_argument("no index-2 subgroup contains H and excludes c");
  return hch_count_core(g, H, c);
}

Lemma23Report lemma23_exhaustive(const GroupTable& g) {
  Lemma23Report rep;
  rep.group_name = g.name;
  rep.group_order = g.n;
  auto subgroups = enumerate_subgroups(g);
  for (Subgroup N : subgroups) {
    if (2 * subgroup_size(N) != g.n) continue;
    std::vector<unsigned> cs;
    for (unsigned c = 0; c < g.n; ++c)
      if (!subgroup_contains(N, c) && g.op(c, c) == g.id) cs.push_back(c);
    for (Subgroup H : subgroups) {
      if ((H & ~N) != 0) continue;
      if (cs.empty()) {
        Lemma23Entry e;
        e.n_mask = N;
        e.h_mask = H;
        e.h_size = subgroup_size(H);
        e.vacuous = true;
        rep.entries.push_back(e);
        ++rep.skipped_vacuous;
        continue;
      }
      for (unsigned c : cs) {
        Lemma23Entry e;
        e.n_mask = N;
        e.h_mask = H;
        e.c = (int)c;
        e.h_size = subgroup_size(H);
        e.outside_count = lemma23_count(g, N, H, c);
        e.hch_count = hch_count_core(g, H, c);
        e.pass = e.outside_count >= e.h_size && e.hch_count == e.h_size;
        rep.entries.push_back(e);
        ++rep.tested;
        if (e.pass) ++rep.passed;
        else rep.all_pass = false;
      }
    }
  }
  return rep;
}

std::vector<std::string> group_catalog(unsigned max_order) {
  static const std::vector<std::pair<std::string, unsigned>> all = {
      {"C1", 1},  {"C2", 2},  {"C3", 3},  {"C4", 4},  {"C5", 5},  {"C6", 6},
      {"C7", 7},  {"C8", 8},  {"C9", 9},  {"C10", 10}, {"C11", 11}, {"C12", 12},
      {"C13", 13}, {"C14", 14}, {"C15", 15}, {"C16", 16},
      {"C2xC2", 4}, {"C2xC4", 8}, {"C2xC6", 12}, {"C2xC8", 16},
      {"C2xC2xC2", 8}, {"C2xC2xC4", 16}, {"C2xC2xC2xC2", 16},
      {"C3xC3", 9}, {"C4xC4", 16}, {"C2xC12", 24}, {"C3xC6", 18},
      {"D2", 4},  {"D3", 6},  {"D4", 8},  {"D5", 10}, {"D6", 12}, {"D7", 14},
      {"D8", 16}, {"D9", 18}, {"D10", 20}, {"D12", 24},
      {"S3", 6},  {"S4", 24}, {"A4", 12},
      {"Q8", 8},  {"C2xQ8", 16}, {"C2xD4", 16}, {"C3xD4", 24}, {"C2xA4", 24},
      {"C3xS3", 18}, {"C2xD5", 20}, {"C3xQ8", 24},
  };
  std::vector<std::string> out;
  for (const auto& [name, order] : all)
    if (order <= max_order) out.push_back(name);
  return out;
}

u64 gl2_order(u64 q) { return (q * q - 1) * (q * q - q); }

u64 gl2_diag_formula(u64 q) {
  if (q < 2) throw std::invalid_argument("gl2_diag_formula: q must be at least 2");
  return (q - 2) * (q - 1) * q * (q + 1) / 2 + (q - 1);
}

u64 gl2_diag_brute(u64 q) {
  if (!is_prime_u64(q) || q > 7)
    throw std::invalid_argument("gl2_diag_brute: q must be a prime <= 7");
  u64 count = 0;
  for (u64 a = 0; a < q; ++a)
    for (u64 b = 0; b < q; ++b)
      for (u64 c = 0; c < q; ++c)
        for (u64 d = 0; d < q; ++d) {
          u64 det = (a * d % q + q - b * c % q) % q;
          if (det == 0) continue;
          // eigenvalues by scanning roots of x^2 - (a+d)x + det
          u64 tr = (a + d) % q;
          std::vector<u64> roots;
          for (u64 x = 0; x < q; ++x)
            if ((x * x % q + det) % q == tr * x % q) roots.push_back(x);
          if (roots.size() == 2) ++count;  // distinct eigenvalues in F_q
          else if (roots.size() == 1 && b == 0 && c == 0 && a == d) ++count;  // scalar
        }
  return count;
}

}  // namespace torcert
