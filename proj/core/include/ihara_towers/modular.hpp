#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "ihara_towers/bigint.hpp"

namespace ihara_towers::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 add(u64 a, u64 b, u64 q) {
  u64 s = a + b;
  return (s >= q || s < a) ? s - q : s;
}
inline u64 sub(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + (q - b); }
inline u64 mul(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }

inline u64 pow(u64 base, u64 exp, u64 q) {
  u64 r = 1 % q;
  base %= q;
  while (exp) {
    if (exp & 1U) r = mul(r, base, q);
    base = mul(base, base, q);
    exp >>= 1U;
  }
  return r;
}

/// Inverse modulo a prime q; throws std::domain_error on 0.
inline u64 inv(u64 a, u64 q) {
  if (a % q == 0) throw std::domain_error("inverse of zero modulo a prime");
  return pow(a, q - 2, q);
}

/// x mod q in [0, q).
inline u64 reduce(const BigInt& x, u64 q) {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), q);
  return r.get_ui();
}

/// The first `count` primes above 2^61, ascending.
std::vector<u64> large_primes(std::size_t count);

/// Incremental Chinese remaindering into the symmetric range (-M/2, M/2].
class CrtAccumulator {
 public:
  void add(u64 residue, u64 prime);
  BigInt symmetric_value() const;
  const BigInt& modulus() const noexcept { return modulus_; }

 private:
  BigInt value_ = 0;
  BigInt modulus_ = 1;
};

}  // namespace ihara_towers::modular
