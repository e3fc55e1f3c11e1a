#pragma once

#include <cstdint>
#include <vector>

namespace torcert {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);

// deterministic Miller-Rabin, valid for all n < 2^64
bool is_prime_u64(u64 n);

struct PrimePower {
  u64 prime;
  unsigned exp;
  bool operator==(const PrimePower&) const = default;
};
using Factorization = std::vector<PrimePower>;

// primes strictly increasing; factorize(1) == {}; throws on n == 0
Factorization factorize(u64 n);
u64 unfactor(const Factorization& f);
std::vector<u64> divisors(const Factorization& f);  // sorted ascending

// Kronecker symbol (a|n), full extension: n may be negative or even; n != 0
int kronecker(i64 a, i64 n);

u64 euler_phi(u64 n);
u64 euler_phi(const Factorization& f);

// m' = smallest positive integer with m | m'^2; delta_flags marks the
// odd-exponent primes (the l_i picking up the +1 in the exponent ceiling)
struct MPrimeValue {
  u64 m;
  u64 m_prime;
  std::vector<u64> odd_exponent_primes;
};
MPrimeValue m_prime(u64 m);

// all N >= 1 with phi(N) <= bound, ascending; complete because
// phi(N) >= sqrt(N/2) makes N <= 2*bound^2 a hard cutoff
std::vector<u64> admissible_orders(u64 bound);

// write a discriminant d (d ≡ 0,1 mod 4, d != 0) as f^2 * d0, d0 fundamental
i64 fundamental_discriminant(i64 d);
u64 conductor_of(i64 d);

bool is_perfect_square_u64(u64 n, u64* root = nullptr);

}  // namespace torcert
