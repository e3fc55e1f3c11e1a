#include "torcert/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace torcert {

u64 mulmod(u64 a, u64 b, u64 m) { return (u128)a * b % m; }

u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  // this witness set is proven complete below 2^64
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  Factorization out;
  auto strip = [&](u64 p) {
    if (n % p) return;
    unsigned e = 0;
    while (n % p == 0) { n /= p; ++e; }
    out.push_back({p, e});
  };
  strip(2);
  strip(3);
  // wheel over 6k+-1; fine for the < 2^63 inputs this tool sees
  for (u64 f = 5; f <= n / f; f += 6) {
    strip(f);
    strip(f + 2);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

u64 unfactor(const Factorization& f) {
  u64 n = 1;
  for (auto& pp : f)
    for (unsigned i = 0; i < pp.exp; ++i) n *= pp.prime;
  return n;
}

std::vector<u64> divisors(const Factorization& f) {
  std::vector<u64> ds{1};
  for (auto& pp : f) {
    size_t base = ds.size();
    u64 q = 1;
    for (unsigned i = 0; i < pp.exp; ++i) {
      q *= pp.prime;
      for (size_t j = 0; j < base; ++j) ds.push_back(ds[j] * q);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) throw std::invalid_argument("kronecker: n must be nonzero");
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  int v = 0;
  while (n % 2 == 0) { n /= 2; ++v; }
  if (v) {
    if (a % 2 == 0) return 0;
    if (v % 2 == 1) {
      int am8 = (int)(a % 8);
      if (am8 < 0) am8 += 8;
      if (am8 == 3 || am8 == 5) result = -result;
    }
  }
  // Jacobi on the odd part
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

u64 euler_phi(const Factorization& f) {
  u64 r = 1;
  for (auto& pp : f) {
    r *= pp.prime - 1;
    for (unsigned i = 1; i < pp.exp; ++i) r *= pp.prime;
  }
  return r;
}

u64 euler_phi(u64 n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
  return euler_phi(factorize(n));
}

MPrimeValue m_prime(u64 m) {
  if (m == 0) throw std::invalid_argument("m_prime: m must be >= 1");
  MPrimeValue out{m, 1, {}};
  for (auto& pp : factorize(m)) {
    unsigned half = (pp.exp + 1) / 2;
    for (unsigned i = 0; i < half; ++i) out.m_prime *= pp.prime;
    if (pp.exp % 2) out.odd_exponent_primes.push_back(pp.prime);
  }
  return out;
}

std::vector<u64> admissible_orders(u64 bound) {
  if (bound == 0) throw std::invalid_argument("admissible_orders: bound must be >= 1");
  std::vector<u64> out;
  u64 cutoff = 2 * bound * bound + 2;  // phi(N) > bound beyond here
  for (u64 n = 1; n <= cutoff; ++n)
    if (euler_phi(n) <= bound) out.push_back(n);
  return out;
}

i64 fundamental_discriminant(i64 d) {
  if (d == 0) throw std::invalid_argument("fundamental_discriminant: d must be nonzero");
  i64 r = d % 4;
  if (r < 0) r += 4;
  if (r == 2 || r == 3)
    throw std::invalid_argument("fundamental_discriminant: d must be 0 or 1 mod 4");
  u64 ad = (u64)(d < 0 ? -d : d);
  u64 core = 1;
  for (auto& pp : factorize(ad))
    if (pp.exp % 2) core *= pp.prime;
  i64 signed_core = d < 0 ? -(i64)core : (i64)core;
  i64 cr = signed_core % 4;
  if (cr < 0) cr += 4;
  return cr == 1 ? signed_core : 4 * signed_core;
}

u64 conductor_of(i64 d) {
  i64 d0 = fundamental_discriminant(d);
  i64 q = d / d0;  // exact, a perfect square
  u64 root = 0;
  if (!is_perfect_square_u64((u64)q, &root))
    throw std::logic_error("conductor_of: d/d0 not a square");
  return root;
}

bool is_perfect_square_u64(u64 n, u64* root) {
  u64 r = (u64)std::sqrt((double)n);
  while (r > 0 && (u128)r * r > n) --r;
  while ((u128)(r + 1) * (r + 1) <= n) ++r;
  if (root) *root = r;
  return r * r == n;
}

}  // namespace torcert
