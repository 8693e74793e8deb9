#include <gtest/gtest.h>

#include <random>

#include "ihara_towers/finite_field.hpp"
#include "oracles.hpp"

using namespace ihara_towers;

namespace {

FpPoly product(const std::vector<FpFactor>& factors, std::uint64_t p) {
  FpPoly out = FpPoly::constant(p, 1);
  for (const FpFactor& f : factors)
    for (unsigned i = 0; i < f.multiplicity; ++i) out = out * f.factor;
  return out;
}

// Brute-force order of t in F_p[t]/(g) for tiny fields.
std::uint64_t naive_order(const FpPoly& g) {
  const FpPoly x = FpPoly::x(g.prime());
  FpPoly acc = x % g;
  for (std::uint64_t k = 1; k < 100000; ++k) {
    if (acc.is_one()) return k;
    acc = mul_mod(acc, x, g);
  }
  return 0;
}

}  // namespace

TEST(FpPolyTest, ReductionAndArithmetic) {
  const FpPoly f = FpPoly::reduce(IntPoly{1, 3, 1}, 2);
  EXPECT_EQ(f, FpPoly(2, {1, 1, 1}));
  const FpPoly g = FpPoly::reduce(IntPoly{-1, 1}, 5);
  EXPECT_EQ(g, FpPoly(5, {4, 1}));
  EXPECT_EQ(g * g, FpPoly(5, {1, 3, 1}));
  EXPECT_EQ((g * g).derivative(), FpPoly(5, {3, 2}));
}

TEST(FpPolyTest, InverseModulo) {
  const FpPoly m(7, {3, 0, 1});  // t^2 + 3 irreducible mod 7
  const FpPoly a(7, {2, 5});
  EXPECT_TRUE(mul_mod(a, inverse_mod(a, m), m).is_one());
  EXPECT_THROW(inverse_mod(FpPoly(7, {6, 1}), FpPoly(7, {6, 0, 1})), std::domain_error);
}

TEST(FactorModPTest, Examples) {
  const auto mod2 = factor_mod_p(IntPoly{1, 3, 1}, 2);
  ASSERT_EQ(mod2.size(), 1u);
  EXPECT_EQ(mod2[0].factor, FpPoly(2, {1, 1, 1}));
  EXPECT_EQ(mod2[0].multiplicity, 1u);

  const auto mod5 = factor_mod_p(IntPoly{1, 3, 1}, 5);
  ASSERT_EQ(mod5.size(), 1u);
  EXPECT_EQ(mod5[0].factor, FpPoly(5, {4, 1}));
  EXPECT_EQ(mod5[0].multiplicity, 2u);

  const auto mod7 = factor_mod_p(IntPoly{-1, 0, 1}, 7);
  ASSERT_EQ(mod7.size(), 2u);
  EXPECT_EQ(mod7[0].factor, FpPoly(7, {1, 1}));
  EXPECT_EQ(mod7[1].factor, FpPoly(7, {6, 1}));
}

TEST(FactorModPTest, RandomProductsRecovered) {
  std::mt19937_64 rng(61);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 13ULL, 101ULL, 2305843009213693951ULL}) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<std::uint64_t> c(1 + rng() % 9);
      for (auto& x : c) x = rng() % p;
      c.back() = 1;
      const FpPoly f(p, c);
      if (f.degree() < 1) continue;
      const auto factors = factor_mod_p(f, rng());
      EXPECT_EQ(product(factors, p), f.monic()) << f.to_string();
      for (const auto& fac : factors) EXPECT_TRUE(is_irreducible(fac.factor)) << fac.factor.to_string();
    }
  }
}

TEST(FactorModPTest, SeedDoesNotChangeResult) {
  const IntPoly f = IntPoly{-1, -2, -4, -6, -8, -6, -4, -2, -1};
  EXPECT_EQ(factor_mod_p(f, 7, 1), factor_mod_p(f, 7, 99));
}

TEST(FqTest, FieldArithmetic) {
  const Fq f4(FpPoly(2, {1, 1, 1}));
  EXPECT_EQ(f4.cardinality(), 4);
  const FpPoly x = FpPoly::x(2);
  EXPECT_TRUE(f4.pow(x, 3).is_one());
  EXPECT_TRUE(f4.mul(x, f4.inverse(x)).is_one());
  EXPECT_THROW(Fq(FpPoly(2, {1, 0, 1})), std::invalid_argument);
}

TEST(OrderTest, Examples) {
  EXPECT_EQ(*multiplicative_order(FpPoly(2, {1, 1, 1})), 3);
  EXPECT_EQ(*multiplicative_order(FpPoly(5, {4, 1})), 1);
  EXPECT_EQ(*multiplicative_order(FpPoly(7, {5, 1})), 3);  // t - 2
}

TEST(OrderTest, MatchesNaiveOrder) {
  std::mt19937_64 rng(62);
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL}) {
    int done = 0;
    while (done < 15) {
      std::vector<std::uint64_t> c(2 + rng() % 4);
      for (auto& x : c) x = rng() % p;
      c.back() = 1;
      const FpPoly g(p, c);
      if (g.coeff(0) == 0 || !is_irreducible(g)) continue;
      EXPECT_EQ(*multiplicative_order(g), naive_order(g)) << g.to_string();
      ++done;
    }
  }
}

TEST(IntegerFactorTest, CompleteFactorizations) {
  const auto f = factor_integer(BigInt("600851475143"));
  ASSERT_TRUE(f.complete);
  BigInt prod = 1;
  for (const auto& [q, k] : f.factors) {
    EXPECT_TRUE(is_probable_prime(q));
    for (unsigned i = 0; i < k; ++i) prod *= q;
  }
  EXPECT_EQ(prod, BigInt("600851475143"));

  const auto g = factor_prime_power_minus_one(2, 64);
  BigInt prod2 = 1;
  for (const auto& [q, k] : g.factors)
    for (unsigned i = 0; i < k; ++i) prod2 *= q;
  EXPECT_EQ(prod2, pow(BigInt(2), 64) - 1);
}

TEST(IntegerFactorTest, BudgetExhaustionIsReported) {
  FactorBudget tiny;
  tiny.trial_bound = 10;
  tiny.rho_iterations = 1;
  const BigInt semiprime = BigInt("1000000016000000063");  // 1000000007 * 1000000009
  const auto f = factor_integer(semiprime, tiny);
  EXPECT_FALSE(f.complete);
}
