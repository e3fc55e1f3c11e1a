#pragma once

#include <functional>
#include <vector>

#include "torcert/curve.hpp"

namespace torcert {

// worker count: explicit value, else TORCERT_WORKERS, else the OpenMP default
unsigned resolve_workers(unsigned requested);

// primes <= x ascending; ceiling 1e8
std::vector<u64> sieve_primes_serial(u64 x);
// segmented; byte-identical to the serial version for any worker count
std::vector<u64> sieve_primes_parallel(u64 x, unsigned workers = 0);
std::vector<u64> sieve_primes(u64 x, unsigned workers = 0);

// per-prime pure classification, slot-indexed so merge order cannot matter
std::vector<unsigned char> classify_primes_serial(
    const std::vector<u64>& primes, const std::function<unsigned char(u64)>& f);
std::vector<unsigned char> classify_primes_parallel(
    const std::vector<u64>& primes, const std::function<unsigned char(u64)>& f,
    unsigned workers = 0);

// traces of Frobenius at every good prime in [5, x]
struct TraceScan {
  std::vector<u64> primes;
  std::vector<i64> traces;  // aligned with primes
};
TraceScan trace_scan_serial(const WeierstrassCurve& e, u64 x);
TraceScan trace_scan_parallel(const WeierstrassCurve& e, u64 x, unsigned workers = 0);

}  // namespace torcert
