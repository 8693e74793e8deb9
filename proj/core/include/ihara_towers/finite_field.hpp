#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "ihara_towers/bigint.hpp"
#include "ihara_towers/poly.hpp"

namespace ihara_towers {

/// Dense polynomial over F_p (p prime, p < 2^62), coefficients in [0, p).
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint64_t p) : p_(p) {}
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly reduce(const IntPoly& f, std::uint64_t p);
  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
  static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c % p}); }

  std::uint64_t prime() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const;
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;
  std::uint64_t operator()(std::uint64_t x) const;
  /// Integer polynomial with the canonical representatives as coefficients.
  IntPoly lift() const;

  FpPoly operator-() const;
  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  FpPoly scaled(std::uint64_t c) const;
  friend bool operator==(const FpPoly&, const FpPoly&) = default;
  /// Degree first, then coefficients from the top.
  friend bool operator<(const FpPoly& a, const FpPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

/// Throws std::domain_error on a zero divisor.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& f, const FpPoly& g);
FpPoly operator%(const FpPoly& f, const FpPoly& g);
/// Monic gcd.
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly mul_mod(const FpPoly& a, const FpPoly& b, const FpPoly& m);
FpPoly pow_mod(const FpPoly& base, const BigInt& exponent, const FpPoly& m);
/// Inverse of a modulo m; throws std::domain_error if not invertible.
FpPoly inverse_mod(const FpPoly& a, const FpPoly& m);

/// Rabin's irreducibility test.
bool is_irreducible(const FpPoly& g);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned multiplicity = 0;
  friend bool operator==(const FpFactor&, const FpFactor&) = default;
};

inline constexpr std::uint64_t kDefaultFactorSeed = 20240229ULL;

/// Square-free, distinct-degree and equal-degree (Cantor-Zassenhaus) splitting.
/// Factors are returned sorted; the input must be nonzero mod p. Seeded so
/// results are reproducible.
std::vector<FpFactor> factor_mod_p(const FpPoly& f, std::uint64_t seed = kDefaultFactorSeed);
std::vector<FpFactor> factor_mod_p(const IntPoly& f, std::uint64_t p, std::uint64_t seed = kDefaultFactorSeed);

/// F_p[t]/(g) for a monic irreducible g.
class Fq {
 public:
  /// Throws std::invalid_argument unless g is irreducible of degree >= 1.
  explicit Fq(FpPoly modulus);

  std::uint64_t characteristic() const noexcept { return modulus_.prime(); }
  unsigned degree() const noexcept { return static_cast<unsigned>(modulus_.degree()); }
  const FpPoly& modulus() const noexcept { return modulus_; }
  BigInt cardinality() const;

  FpPoly reduce(const FpPoly& a) const { return a % modulus_; }
  FpPoly add(const FpPoly& a, const FpPoly& b) const { return (a + b) % modulus_; }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const { return mul_mod(a, b, modulus_); }
  FpPoly pow(const FpPoly& a, const BigInt& e) const { return pow_mod(a, e, modulus_); }
  FpPoly inverse(const FpPoly& a) const { return inverse_mod(a, modulus_); }

 private:
  FpPoly modulus_;
};

/// Limits for integer factoring.
struct FactorBudget {
  std::uint64_t trial_bound = 100000;
  std::uint64_t rho_iterations = 2'000'000;
};

struct IntegerFactorization {
  std::vector<std::pair<BigInt, unsigned>> factors;  // ascending primes
  bool complete = true;                              // false if the budget ran out
};

/// Trial division, then Pollard rho with Brent's cycle detection.
IntegerFactorization factor_integer(const BigInt& n, const FactorBudget& budget = {});

/// Factorization of p^f - 1 through its cyclotomic pieces Φ_d(p), d | f.
IntegerFactorization factor_prime_power_minus_one(std::uint64_t p, unsigned f, const FactorBudget& budget = {});

/// Order of the class of t in F_p[t]/(g), g monic irreducible with g(0) != 0.
/// Empty when p^deg(g) - 1 cannot be factored within the budget.
std::optional<BigInt> multiplicative_order(const FpPoly& g, const FactorBudget& budget = {});

/// t^n == 1 in F_p[t]/(g).
bool power_is_one(const FpPoly& g, const BigInt& n);

}  // namespace ihara_towers
