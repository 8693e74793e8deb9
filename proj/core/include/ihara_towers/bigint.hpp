#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ihara_towers {

using BigInt = mpz_class;
using Rational = mpq_class;

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

/// ord_p(x) for x != 0. Throws std::domain_error on x == 0.
long valuation(const BigInt& x, const BigInt& p);
long valuation(long long x, long long p);

/// ord_p of a nonzero rational.
long valuation(const Rational& x, const BigInt& p);

BigInt pow(const BigInt& base, unsigned long exponent);

bool is_probable_prime(const BigInt& n);

/// Safety valve driven by IHARA_TOWERS_MAX_BITS (unset or 0 means unlimited).
/// Throws ResourceError when |x| needs more bits than the cap.
void check_bit_cap(const BigInt& x);

/// The cap currently in force; 0 when unlimited.
std::size_t bit_cap();

/// Overrides the environment for the current process (0 lifts the cap).
void set_bit_cap(std::size_t bits);

/// Natural log of |x| for x != 0, accurate for arbitrarily large x.
double log_abs(const BigInt& x);

}  // namespace ihara_towers
