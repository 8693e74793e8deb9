#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ihara_towers/bigint.hpp"
#include "ihara_towers/errors.hpp"
#include "ihara_towers/matrix.hpp"
#include "ihara_towers/modular.hpp"
#include "oracles.hpp"

using namespace ihara_towers;

TEST(BigIntTest, ValuationCountsPrimePowers) {
  EXPECT_EQ(valuation(BigInt(96), BigInt(2)), 5);
  EXPECT_EQ(valuation(BigInt(-250), BigInt(5)), 3);
  EXPECT_EQ(valuation(7LL, 3LL), 0);
  EXPECT_EQ(valuation(Rational(9, 8), BigInt(2)), -3);
  EXPECT_THROW(valuation(BigInt(0), BigInt(2)), std::domain_error);
}

TEST(BigIntTest, DecimalRoundTrip) {
  const BigInt big = pow(BigInt(3), 200) - 1;
  EXPECT_EQ(parse_bigint(to_string(big)), big);
  EXPECT_EQ(parse_bigint("-42"), BigInt(-42));
  EXPECT_THROW(parse_bigint("12x"), std::invalid_argument);
}

TEST(BigIntTest, LogAbsHandlesHugeValues) {
  const BigInt big = pow(BigInt(10), 5000);
  EXPECT_NEAR(log_abs(big), 5000 * std::log(10.0), 1e-6);
  EXPECT_NEAR(log_abs(BigInt(-1)), 0.0, 1e-15);
}

TEST(BigIntTest, BitCapRaisesResourceError) {
  set_bit_cap(64);
  EXPECT_NO_THROW(check_bit_cap(BigInt(1) << 60));
  EXPECT_THROW(check_bit_cap(BigInt(1) << 80), ResourceError);
  set_bit_cap(0);
  EXPECT_NO_THROW(check_bit_cap(BigInt(1) << 800));
}

TEST(ModularTest, CrtRecoversSignedValue) {
  const BigInt target = -(pow(BigInt(7), 60) + 11);
  modular::CrtAccumulator crt;
  for (std::uint64_t q : modular::large_primes(4)) crt.add(modular::reduce(target, q), q);
  EXPECT_EQ(crt.symmetric_value(), target);
}

TEST(MatrixTest, DeterminantMatchesRationalElimination) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> entry(-5, 5);
  std::uniform_int_distribution<std::size_t> size(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = size(rng);
    IntMatrix m(n);
    std::vector<std::vector<Rational>> q(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        // Sparse on purpose: the lazy-scaling path only triggers on zeros.
        const long v = (rng() % 3 == 0) ? entry(rng) : 0;
        m(i, j) = v;
        q[i][j] = v;
      }
    EXPECT_EQ(determinant(m), oracle::determinant_rational(q)) << "trial " << trial;
  }
}

TEST(MatrixTest, MinorAndPermutation) {
  IntMatrix m(3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = static_cast<long>(3 * i + j);
  const IntMatrix minor = m.minor_without(1);
  EXPECT_EQ(minor(0, 0), 0);
  EXPECT_EQ(minor(1, 1), 8);
  const std::vector<std::size_t> order{2, 0, 1};
  EXPECT_EQ(m.permuted(order)(0, 0), 8);
  EXPECT_EQ(determinant(m.permuted(order)), determinant(m));
}
