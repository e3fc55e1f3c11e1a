#include "torcert/torsion.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>

namespace torcert {

namespace {

// y^2 = x^3 + A2 x^2 + A4 x + A6, integral
struct IntModel {
  cpp_int A2, A4, A6;
  cpp_int cubic_disc() const {
    const cpp_int &a = A2, &b = A4, &c = A6;
    return 18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b -
           27 * c * c;
  }
  cpp_int g(const cpp_int& x) const { return ((x + A2) * x + A4) * x + A6; }
};

template <class K>
struct Pt {
  K x, y;
  bool inf = false;
};

// group law on y^2 = x^3 + A2 x^2 + A4 x + A6 over any field type K
template <class K>
struct ModelOps {
  K A2, A4, A6;

  bool on_curve(const Pt<K>& p) const {
    if (p.inf) return true;
    return p.y * p.y == ((p.x + A2) * p.x + A4) * p.x + A6;
  }
  Pt<K> neg(const Pt<K>& p) const {
    if (p.inf) return p;
    return {p.x, -p.y, false};
  }
  Pt<K> add(const Pt<K>& p, const Pt<K>& q) const {
    if (p.inf) return q;
    if (q.inf) return p;
    if (p.x == q.x && p.y + q.y == K{}) return {K{}, K{}, true};
    K lam;
    if (p.x == q.x) {
      K three{}, two{};
      three = three + 1; three = three + 1; three = three + 1;
      two = two + 1; two = two + 1;
      lam = (three * p.x * p.x + two * A2 * p.x + A4) / (two * p.y);
    } else {
      lam = (q.y - p.y) / (q.x - p.x);
    }
    K x3 = lam * lam - A2 - p.x - q.x;
    K y3 = lam * (p.x - x3) - p.y;
    return {x3, y3, false};
  }
};

struct IntTorsion {
  std::vector<Pt<cpp_rational>> points;  // affine, integer-valued
  u64 order = 1;
  unsigned n1 = 1, n2 = 1;
  std::vector<size_t> generator_idx;
  u64 gcd_bound = 0;
  std::vector<u64> sample_primes;
};

u64 mod_u64(const cpp_int& v, u64 p) {
  cpp_int r = v % p;
  if (r < 0) r += p;
  return (u64)r;
}

// all integer roots of the monic cubic g(x) - target, exact bisection on
// the (at most three) monotone pieces
std::vector<cpp_int> integer_cubic_roots(const IntModel& m, const cpp_int& target) {
  auto val = [&](const cpp_int& x) { return m.g(x) - target; };
  // Cauchy bound on root size
  cpp_int B = 2;
  for (const cpp_int* c : {&m.A2, &m.A4}) {
    cpp_int a = abs(*c);
    if (a + 1 > B) B = a + 1;
  }
  cpp_int a6 = abs(m.A6 - target) + 1;
  if (a6 > B) B = a6;

  // critical points of g: 3x^2 + 2 A2 x + A4 = 0
  std::vector<cpp_int> knots{-B};
  cpp_int d = m.A2 * m.A2 - 3 * m.A4;
  if (d > 0) {
    cpp_int s = sqrt(d);  // floor sqrt
    cpp_int g1 = (-m.A2 - s) / 3, g2 = (-m.A2 + s) / 3, nb = -B;
    for (const cpp_int& root_guess : {g1, g2}) {
      for (cpp_int x = root_guess - 2; x <= root_guess + 2; ++x) {
        cpp_int clamped = std::min(std::max(x, nb), B);
        knots.push_back(clamped);
      }
    }
  }
  knots.push_back(B);
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  std::vector<cpp_int> roots;
  auto push = [&](const cpp_int& x) {
    if (val(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end())
      roots.push_back(x);
  };
  for (auto& k : knots) push(k);
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    cpp_int lo = knots[i], hi = knots[i + 1];
    cpp_int flo = val(lo), fhi = val(hi);
    if (flo == 0 || fhi == 0) continue;
    if ((flo < 0) == (fhi < 0)) continue;
    // g monotone here up to the +-2 slack around the critical points;
    // bisection still lands on any integer root inside
    while (hi - lo > 1) {
      cpp_int mid = (lo + hi) / 2;
      cpp_int fm = val(mid);
      if (fm == 0) { push(mid); break; }
      if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; }
      else hi = mid;
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// first `count` primes p >= 5 of good reduction and the gcd of the counts
void reduction_gcd(const IntModel& m, unsigned count, u64& gcd_out,
                   std::vector<u64>& primes_out) {
  cpp_int dc = m.cubic_disc();
  gcd_out = 0;
  for (u64 p = 5; primes_out.size() < count; ++p) {
    if (!is_prime_u64(p)) continue;
    if (dc % p == 0) continue;
    i64 s = cubic_char_sum(p, 1, mod_u64(m.A2, p), mod_u64(m.A4, p), mod_u64(m.A6, p));
    u64 n_p = (u64)((i64)p + 1 + s);
    gcd_out = std::gcd(gcd_out, n_p);
    primes_out.push_back(p);
  }
}

// order of p in the group if it divides cap, else 0; multiples of a
// finite-order point keep integer coordinates, so a denominator proves
// infinite order early
unsigned confirmed_order(const ModelOps<cpp_rational>& ops, const Pt<cpp_rational>& p,
                         unsigned cap) {
  Pt<cpp_rational> acc = p;
  for (unsigned k = 1; k <= cap; ++k) {
    if (acc.inf) return k;
    if (denominator(acc.x) != 1 || denominator(acc.y) != 1) return 0;
    acc = ops.add(acc, p);
  }
  return 0;
}

bool pt_less(const Pt<cpp_rational>& a, const Pt<cpp_rational>& b) {
  if (a.inf != b.inf) return b.inf;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

void fill_structure(IntTorsion& t, const ModelOps<cpp_rational>& ops) {
  t.order = t.points.size() + 1;
  if (t.points.empty()) { t.n1 = t.n2 = 1; return; }

  std::vector<unsigned> orders(t.points.size());
  for (size_t i = 0; i < t.points.size(); ++i) {
    orders[i] = confirmed_order(ops, t.points[i], (unsigned)t.order);
    if (orders[i] == 0) throw std::logic_error("torsion: non-torsion point in group");
  }
  unsigned n2 = *std::max_element(orders.begin(), orders.end());
  if (t.order % n2) throw std::logic_error("torsion: max order does not divide group order");
  unsigned n1 = (unsigned)(t.order / n2);
  if (n2 % n1) throw std::logic_error("torsion: group not of rank <= 2 shape");
  t.n1 = n1;
  t.n2 = n2;

  // generator of maximal order, deterministic pick: smallest (x, |y|, sign)
  auto nicer = [&](size_t i, size_t j) {
    const auto &a = t.points[i], &b = t.points[j];
    if (a.x != b.x) return a.x < b.x;
    cpp_rational ay = abs(a.y), by = abs(b.y);
    if (ay != by) return ay < by;
    return a.y > b.y;
  };
  size_t best = t.points.size();
  for (size_t i = 0; i < t.points.size(); ++i)
    if (orders[i] == n2 && (best == t.points.size() || nicer(i, best))) best = i;
  t.generator_idx.push_back(best);

  if (n1 > 1) {
    // span of the first generator
    std::vector<Pt<cpp_rational>> span;
    Pt<cpp_rational> acc = t.points[best];
    while (!acc.inf) {
      span.push_back(acc);
      acc = ops.add(acc, t.points[best]);
    }
    auto in_span = [&](const Pt<cpp_rational>& p) {
      for (auto& s : span)
        if (!pt_less(s, p) && !pt_less(p, s)) return true;
      return false;
    };
    size_t second = t.points.size();
    for (size_t i = 0; i < t.points.size(); ++i) {
      if (orders[i] != n1 || in_span(t.points[i])) continue;
      // a Q + b P for a < n1, b < n2 must hit the whole group
      std::vector<Pt<cpp_rational>> combos;
      Pt<cpp_rational> aq{cpp_rational(0), cpp_rational(0), true};
      for (unsigned a = 0; a < n1; ++a) {
        Pt<cpp_rational> cur = aq;
        for (unsigned b = 0; b < n2; ++b) {
          bool dup = false;
          for (auto& c : combos)
            if (c.inf == cur.inf && (cur.inf || (c.x == cur.x && c.y == cur.y))) dup = true;
          if (!dup) combos.push_back(cur);
          cur = ops.add(cur, t.points[best]);
        }
        aq = ops.add(aq, t.points[i]);
      }
      if (combos.size() == t.order && (second == t.points.size() || nicer(i, second)))
        second = i;
    }
    if (second == t.points.size())
      throw std::logic_error("torsion: no independent second generator");
    t.generator_idx.push_back(second);
  }
}

// Lutz-Nagell style search on the integral model; y ranges over 0 and all
// positive divisors of |disc| (a superset of every classical candidate set)
IntTorsion torsion_of_int_model(const IntModel& m, u64 order_cap,
                                bool with_reduction) {
  IntTorsion t;
  ModelOps<cpp_rational> ops{cpp_rational(m.A2), cpp_rational(m.A4), cpp_rational(m.A6)};

  cpp_int dc = m.cubic_disc();
  if (dc == 0) throw std::invalid_argument("torsion: singular model");

  u64 cap = order_cap;
  if (with_reduction) {
    reduction_gcd(m, 10, t.gcd_bound, t.sample_primes);
    cap = t.gcd_bound;
  }

  cpp_int model_disc = 16 * abs(dc);
  if (model_disc > cpp_int("18446744073709551615"))
    throw std::invalid_argument("torsion: discriminant too large to factor (>= 2^64)");
  auto divs = divisors(factorize((u64)model_disc));

  std::vector<cpp_int> ys{0};
  for (u64 d : divs) ys.push_back(d);

  std::vector<Pt<cpp_rational>> found;
  auto seen = [&](const Pt<cpp_rational>& p) {
    for (auto& q : found)
      if (!pt_less(q, p) && !pt_less(p, q)) return true;
    return false;
  };
  for (auto& y : ys) {
    for (auto& x : integer_cubic_roots(m, y * y)) {
      for (int sign : {1, -1}) {
        if (y == 0 && sign < 0) continue;
        Pt<cpp_rational> p{cpp_rational(x), cpp_rational(sign * y), false};
        if (seen(p)) continue;
        if (confirmed_order(ops, p, (unsigned)cap) > 0) found.push_back(p);
      }
    }
  }
  std::sort(found.begin(), found.end(), pt_less);
  t.points = found;
  fill_structure(t, ops);
  return t;
}

IntModel int_model_of(const WeierstrassCurve& e) {
  return {e.b2, 8 * e.b4, 16 * e.b6};
}

// the integral model is X = 4x, Y = 8y + 4 a1 x + 4 a3
RatPoint to_original(const WeierstrassCurve& e, const Pt<cpp_rational>& p) {
  if (p.inf) return {0, 0, true};
  cpp_rational x = p.x / 4;
  cpp_rational y = (p.y - 4 * e.a1 * x - 4 * e.a3) / 8;
  return {x, y, false};
}

TorsionGroup package(const WeierstrassCurve& e, const IntTorsion& t) {
  TorsionGroup out;
  out.order = t.order;
  out.n1 = t.n1;
  out.n2 = t.n2;
  out.gcd_bound = t.gcd_bound;
  out.sample_primes = t.sample_primes;
  for (auto& p : t.points) out.points.push_back(to_original(e, p));
  for (size_t i : t.generator_idx) out.generators.push_back(to_original(e, t.points[i]));
  return out;
}

}  // namespace

TorsionGroup torsion_over_q(const WeierstrassCurve& e) {
  return package(e, torsion_of_int_model(int_model_of(e), 0, true));
}

TorsionGroup bounded_torsion_search(const WeierstrassCurve& e, u64 bound) {
  IntModel m = int_model_of(e);
  ModelOps<cpp_rational> ops{cpp_rational(m.A2), cpp_rational(m.A4), cpp_rational(m.A6)};
  IntTorsion t;

  std::vector<Pt<cpp_rational>> found;
  for (cpp_int x = -(cpp_int)bound; x <= (cpp_int)bound; ++x) {
    cpp_int rhs = m.g(x);
    if (rhs < 0) continue;
    cpp_int y = sqrt(rhs);
    if (y * y != rhs) continue;
    for (int sign : {1, -1}) {
      if (y == 0 && sign < 0) continue;
      Pt<cpp_rational> p{cpp_rational(x), cpp_rational(sign * y), false};
      // no reduction data here: a generous fixed cap, with the integrality
      // early-out inside confirmed_order pruning every infinite-order point
      if (confirmed_order(ops, p, 100) > 0) found.push_back(p);
    }
  }
  std::sort(found.begin(), found.end(), pt_less);
  t.points = found;
  fill_structure(t, ops);
  return package(e, t);
}

// ---- quadratic field layer ----

namespace {

struct QuadCtx {
  cpp_int m;  // squarefree, != 0, 1
};

QuadQ qq_add(const QuadQ& x, const QuadQ& y) { return {x.a + y.a, x.b + y.b}; }
QuadQ qq_sub(const QuadQ& x, const QuadQ& y) { return {x.a - y.a, x.b - y.b}; }

// field element wrapper carrying m so ModelOps<K> can stay generic
struct KElem {
  cpp_rational a, b;
  const QuadCtx* ctx = nullptr;

  KElem() = default;
  KElem(const cpp_rational& a_, const cpp_rational& b_, const QuadCtx* c) : a(a_), b(b_), ctx(c) {}

  friend bool operator==(const KElem& x, const KElem& y) { return x.a == y.a && x.b == y.b; }
  friend KElem operator+(const KElem& x, const KElem& y) {
    return {x.a + y.a, x.b + y.b, x.ctx ? x.ctx : y.ctx};
  }
  friend KElem operator-(const KElem& x, const KElem& y) {
    return {x.a - y.a, x.b - y.b, x.ctx ? x.ctx : y.ctx};
  }
  KElem operator-() const { return {-a, -b, ctx}; }
  friend KElem operator+(const KElem& x, int c) { return {x.a + c, x.b, x.ctx}; }
  friend KElem operator*(const KElem& x, const KElem& y) {
    const QuadCtx* c = x.ctx ? x.ctx : y.ctx;
    cpp_rational mm = c ? cpp_rational(c->m) : cpp_rational(0);
    return {x.a * y.a + mm * x.b * y.b, x.a * y.b + x.b * y.a, c};
  }
  friend KElem operator/(const KElem& x, const KElem& y) {
    const QuadCtx* c = x.ctx ? x.ctx : y.ctx;
    cpp_rational mm = c ? cpp_rational(c->m) : cpp_rational(0);
    cpp_rational n = y.a * y.a - mm * y.b * y.b;
    if (n == 0) throw std::domain_error("QuadQ: division by zero");
    return {(x.a * y.a - mm * x.b * y.b) / n, (x.b * y.a - x.a * y.b) / n, c};
  }
};

bool kpt_less(const Pt<KElem>& p, const Pt<KElem>& q) {
  if (p.inf != q.inf) return q.inf;
  auto key = [](const Pt<KElem>& t) {
    return std::array<cpp_rational, 4>{t.x.a, t.x.b, t.y.a, t.y.b};
  };
  return key(p) < key(q);
}

bool rational_square(const cpp_rational& x, cpp_rational* root) {
  if (x < 0) return false;
  cpp_int n = numerator(x), d = denominator(x);
  cpp_int rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  if (root) *root = cpp_rational(rn, rd);
  return true;
}

// square root of z in Q(sqrt m), if one exists
bool sqrt_in_k(const KElem& z, KElem* out) {
  const QuadCtx* c = z.ctx;
  cpp_rational m = c ? cpp_rational(c->m) : cpp_rational(0);
  if (z.a == 0 && z.b == 0) {
    *out = KElem(0, 0, c);
    return true;
  }
  cpp_rational r;
  if (z.b == 0) {
    if (rational_square(z.a, &r)) { *out = KElem(r, 0, c); return true; }
    if (rational_square(z.a / m, &r)) { *out = KElem(0, r, c); return true; }
    return false;
  }
  // (u + v sqrt m)^2 = z needs u^2 + m v^2 = z.a, 2uv = z.b
  cpp_rational t;
  if (!rational_square(z.a * z.a - m * z.b * z.b, &t)) return false;
  for (int sign : {1, -1}) {
    cpp_rational u2 = (z.a + sign * t) / 2;
    cpp_rational u;
    if (u2 == 0 || !rational_square(u2, &u)) continue;
    cpp_rational v = z.b / (2 * u);
    KElem cand(u, v, c);
    if (cand * cand == z) { *out = cand; return true; }
  }
  return false;
}

}  // namespace

std::vector<QuadPoint> torsion_points_quadratic(const WeierstrassCurve& e,
                                                i64 field_disc, unsigned n) {
  if (n < 1 || n > 12)
    throw std::invalid_argument("torsion_points_quadratic: n must be in [1, 12]");
  if (field_disc == 0 || field_disc == 1 ||
      fundamental_discriminant(field_disc) != field_disc)
    throw std::invalid_argument(
        "torsion_points_quadratic: field_disc must be a fundamental discriminant");

  i64 m_i = (field_disc % 4 == 0) ? field_disc / 4 : field_disc;
  QuadCtx ctx{cpp_int(m_i)};
  IntModel base = int_model_of(e);
  ModelOps<KElem> kops{KElem(cpp_rational(base.A2), 0, &ctx),
                       KElem(cpp_rational(base.A4), 0, &ctx),
                       KElem(cpp_rational(base.A6), 0, &ctx)};

  std::vector<Pt<KElem>> gens;
  auto add_gen = [&](const Pt<KElem>& p) {
    if (!kops.on_curve(p)) throw std::logic_error("torsion_points_quadratic: point off curve");
    gens.push_back(p);
  };

  // rational torsion
  IntTorsion rat = torsion_of_int_model(base, 0, true);
  for (auto& p : rat.points)
    add_gen({KElem(p.x, 0, &ctx), KElem(p.y, 0, &ctx), false});

  // twist torsion, mapped through (x, y) -> (x/m, y sqrt(m)/m^2)
  IntModel twist{base.A2 * m_i, base.A4 * m_i * m_i, base.A6 * m_i * m_i * m_i};
  IntTorsion tw = torsion_of_int_model(twist, 0, true);
  for (auto& p : tw.points) {
    KElem x(p.x / m_i, 0, &ctx);
    KElem y(0, p.y / (m_i * (cpp_rational)m_i), &ctx);
    add_gen({x, y, false});
  }

  // 2-torsion with x in K: integer root r splits off a quadratic factor
  for (auto& r : integer_cubic_roots(base, 0)) {
    cpp_rational beta = cpp_rational(base.A2 + r);
    cpp_rational gamma = cpp_rational(base.A4 + r * (base.A2 + r));
    cpp_rational delta = beta * beta - 4 * gamma;
    if (delta == 0) continue;
    cpp_rational q = delta / m_i;  // root in K iff delta = m s^2
    cpp_int num = numerator(q), den = denominator(q);
    if (num > 0) {
      cpp_int rn = sqrt(num), rd = sqrt(den);
      if (rn * rn == num && rd * rd == den) {
        cpp_rational s(rn, rd);
        add_gen({KElem(-beta / 2, s / 2, &ctx), KElem(0, 0, &ctx), false});
        add_gen({KElem(-beta / 2, -s / 2, &ctx), KElem(0, 0, &ctx), false});
      }
    }
  }

  // close under the group law
  std::vector<Pt<KElem>> group{{KElem(0, 0, &ctx), KElem(0, 0, &ctx), true}};
  auto contains = [&](const Pt<KElem>& p) {
    for (auto& q : group)
      if (!kpt_less(q, p) && !kpt_less(p, q)) return true;
    return false;
  };
  auto close = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      size_t sz = group.size();
      for (size_t i = 0; i < sz && !grew; ++i)
        for (size_t j = i; j < sz && !grew; ++j) {
          Pt<KElem> s = kops.add(group[i], group[j]);
          if (!contains(s)) {
            group.push_back(s);
            grew = true;
          }
        }
      if (group.size() > 100)
        throw std::logic_error("torsion_points_quadratic: closure did not stabilize");
    }
  };
  for (auto& g : gens)
    if (!contains(g)) group.push_back(g);
  close();

  // any K-point outside the span of the rational and twist parts is killed
  // into the span by 2, so completing under halving closes the gap; the
  // sqrt construction needs all of E[2] inside K
  for (int round = 0; round < 4; ++round) {
    std::vector<KElem> e2x;
    for (auto& p : group)
      if (!p.inf && p.y == KElem(0, 0, &ctx)) e2x.push_back(p.x);
    if (e2x.size() != 3) break;
    size_t before = group.size();
    std::vector<Pt<KElem>> snapshot = group;
    for (auto& q : snapshot) {
      if (q.inf) continue;
      // square roots s_i of x0 - e_i; each sign pattern with
      // s1 s2 s3 = y0 yields a half with x = x0 + s1s2 + s1s3 + s2s3
      KElem s[3];
      bool ok = true;
      for (int i = 0; i < 3 && ok; ++i)
        ok = sqrt_in_k(q.x - e2x[i], &s[i]);
      if (!ok) continue;
      for (int mask = 0; mask < 8; ++mask) {
        KElem t[3];
        for (int i = 0; i < 3; ++i)
          t[i] = (mask >> i) & 1 ? -s[i] : s[i];
        if (!(t[0] * t[1] * t[2] == q.y)) continue;
        KElem xr = q.x + t[0] * t[1] + t[0] * t[2] + t[1] * t[2];
        KElem rhs = ((xr + kops.A2) * xr + kops.A4) * xr + kops.A6;
        KElem yr;
        if (!sqrt_in_k(rhs, &yr)) continue;
        for (auto& yc : {yr, -yr}) {
          Pt<KElem> r{xr, yc, false};
          Pt<KElem> dbl = kops.add(r, r);
          if (dbl.inf || !(dbl.x == q.x && dbl.y == q.y)) continue;
          if (!contains(r)) group.push_back(r);
        }
      }
    }
    if (group.size() == before) break;
    close();
  }

  // exact order n elements, mapped back to the original model
  std::vector<Pt<KElem>> hits;
  for (auto& p : group) {
    Pt<KElem> acc = p;
    unsigned ord = 1;
    while (!acc.inf) {
      acc = kops.add(acc, p);
      ++ord;
      if (ord > group.size()) throw std::logic_error("torsion_points_quadratic: bad order");
    }
    if (ord == n) hits.push_back(p);
  }
  std::sort(hits.begin(), hits.end(), kpt_less);

  std::vector<QuadPoint> out;
  for (auto& p : hits) {
    if (p.inf) {
      out.push_back({{0, 0}, {0, 0}, true});
      continue;
    }
    KElem x{p.x.a / 4, p.x.b / 4, &ctx};
    cpp_rational a1q(e.a1), a3q(e.a3);
    KElem y{(p.y.a - 4 * a1q * x.a - 4 * a3q) / 8, (p.y.b - 4 * a1q * x.b) / 8, &ctx};
    out.push_back({{x.a, x.b}, {y.a, y.b}, false});
  }
  return out;
}

}  // namespace torcert
