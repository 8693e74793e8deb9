#include "ihara_towers/modular.hpp"

#include <mutex>

namespace ihara_towers::modular {

std::vector<u64> large_primes(std::size_t count) {
  static std::mutex mu;
  static std::vector<u64> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (cache.size() < count) {
    BigInt p = cache.empty() ? BigInt(1) << 61 : BigInt(std::to_string(cache.back()));
    while (cache.size() < count) {
      mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
      cache.push_back(std::stoull(p.get_str()));
    }
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(count)};
}

void CrtAccumulator::add(u64 residue, u64 prime) {
  const u64 current = reduce(value_, prime);
  const u64 m_mod = reduce(modulus_, prime);
  const u64 t = mul(sub(residue % prime, current, prime), inv(m_mod, prime), prime);
  BigInt step;
  mpz_mul_ui(step.get_mpz_t(), modulus_.get_mpz_t(), t);
  value_ += step;
  mpz_mul_ui(modulus_.get_mpz_t(), modulus_.get_mpz_t(), prime);
}

BigInt CrtAccumulator::symmetric_value() const {
  BigInt half = modulus_ / 2;
  if (value_ > half) return value_ - modulus_;
  return value_;
}

}  // namespace ihara_towers::modular
