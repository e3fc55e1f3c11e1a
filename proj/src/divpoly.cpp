#include "torcert/divpoly.hpp"

#include <stdexcept>

namespace torcert {

static void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zpoly_deg(const ZPoly& a) { return (int)a.size() - 1; }

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

ZPoly zpoly_scale(const ZPoly& a, const cpp_int& c) {
  if (c == 0) return {};
  ZPoly r = a;
  for (auto& v : r) v *= c;
  return r;
}

u64 zpoly_eval_mod(const ZPoly& a, u64 x, u64 p) {
  u64 r = 0;
  for (size_t i = a.size(); i-- > 0;) {
    cpp_int c = a[i] % p;
    if (c < 0) c += p;
    r = (mulmod(r, x, p) + (u64)c) % p;
  }
  return r;
}

// psi_n = u_n for odd n, psi_n = psi_2 u_n for even n; the table below
// carries the u_n with F = psi_2^2 woven in by parity
ZPoly division_polynomial(const WeierstrassCurve& e, unsigned n) {
  if (n < 1 || n > 30)
    throw std::invalid_argument("division_polynomial: n must be in [1, 30]");

  const ZPoly F{e.b6, 2 * e.b4, e.b2, 4};
  const ZPoly F2 = zpoly_mul(F, F);

  std::vector<ZPoly> u(n + 3);
  auto have = [&](unsigned k) { return k < u.size(); };
  u[0] = {};
  u[1] = {1};
  if (have(2)) u[2] = {1};
  if (have(3))
    u[3] = {e.b8, 3 * e.b6, 3 * e.b4, e.b2, 3};
  if (have(4))
    u[4] = {e.b4 * e.b8 - e.b6 * e.b6, e.b2 * e.b8 - e.b4 * e.b6, 10 * e.b8,
            10 * e.b6, 5 * e.b4, e.b2, 2};

  for (unsigned k = 5; k <= n; ++k) {
    unsigned m = k / 2;
    if (k % 2 == 1) {
      // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3
      ZPoly t1 = zpoly_mul(u[m + 2], zpoly_mul(u[m], zpoly_mul(u[m], u[m])));
      ZPoly t2 = zpoly_mul(u[m - 1], zpoly_mul(u[m + 1], zpoly_mul(u[m + 1], u[m + 1])));
      if (m % 2 == 0) t1 = zpoly_mul(F2, t1);
      else t2 = zpoly_mul(F2, t2);
      u[k] = zpoly_sub(t1, t2);
    } else {
      // psi_{2m} = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / psi_2;
      // the psi_2 factors cancel identically in the u-representation
      ZPoly t1 = zpoly_mul(u[m + 2], zpoly_mul(u[m - 1], u[m - 1]));
      ZPoly t2 = zpoly_mul(u[m - 2], zpoly_mul(u[m + 1], u[m + 1]));
      u[k] = zpoly_mul(u[m], zpoly_sub(t1, t2));
    }
  }

  if (n % 2 == 1) return u[n];
  return zpoly_mul(F, u[n]);
}

}  // namespace torcert
