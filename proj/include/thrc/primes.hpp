#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thrc/rng.hpp"

namespace thrc {

// All primes <= bound, by Eratosthenes sieve.
inline std::vector<uint64_t> primes_up_to(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (uint64_t p = 2; p <= bound; ++p) {
    if (composite[p]) continue;
    out.push_back(p);
    for (uint64_t q = p * p; q <= bound; q += p) composite[q] = true;
  }
  return out;
}

// Extends the sieve until it holds at least `count` primes; returns them.
inline std::vector<uint64_t> first_primes(uint64_t count) {
  uint64_t bound = 64;
  for (;;) {
    auto ps = primes_up_to(bound);
    if (ps.size() >= count) {
      ps.resize(count);
      return ps;
    }
    bound *= 2;
  }
}

namespace detail {

inline uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin for 64-bit integers (fixed base set, proven
// complete below 3.3 * 10^24).
inline bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    uint64_t x = detail::powmod_u64(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Uniform random prime in [lo, hi]: rejection sampling over the uniform
// integers of the interval, which conditions to the uniform distribution
// over its primes. Falls back to a scan when the interval is too sparse.
inline uint64_t random_prime_in(Xoshiro256& rng, uint64_t lo, uint64_t hi) {
  if (lo < 2) lo = 2;
  if (hi < lo) throw std::invalid_argument("empty prime range");
  for (int attempt = 0; attempt < 4096; ++attempt) {
    uint64_t candidate = rng.range(lo, hi);
    if (is_prime_u64(candidate)) return candidate;
  }
  for (uint64_t v = lo; v <= hi; ++v) {
    if (is_prime_u64(v)) return v;
  }
  throw std::invalid_argument("no prime in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

// All primes in [lo, hi]; used by adversarial tests that enumerate every
// possible draw.
inline std::vector<uint64_t> primes_in(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> out;
  for (uint64_t v = lo < 2 ? 2 : lo; v <= hi; ++v) {
    if (is_prime_u64(v)) out.push_back(v);
  }
  return out;
}

// Smallest R such that [2, R] contains at least `count` primes, together
// with those primes.
inline std::pair<uint64_t, std::vector<uint64_t>> prime_prefix(uint64_t count) {
  auto ps = first_primes(count);
  uint64_t r = ps.empty() ? 2 : ps.back();
  return {r, std::move(ps)};
}

}  // namespace thrc
