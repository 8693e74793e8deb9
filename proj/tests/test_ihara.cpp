#include <gtest/gtest.h>

#include <random>

#include "ihara_towers/errors.hpp"
#include "ihara_towers/graph.hpp"
#include "ihara_towers/ihara.hpp"
#include "oracles.hpp"

using namespace ihara_towers;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

VoltagedGraph bouquet(std::vector<std::int64_t> voltages) {
  Edges loops(voltages.size(), {0, 0});
  return VoltagedGraph(build_graph(1, loops), VoltageAssignment(std::move(voltages)));
}

VoltagedGraph dumbbell(std::int64_t k, std::int64_t l) {
  const Edges edges{{0, 0}, {0, 1}, {1, 1}};
  return VoltagedGraph(build_graph(2, edges), VoltageAssignment({k, 0, l}));
}

LaurentPoly sym(long a) { return LaurentPoly::monomial(1, a) + LaurentPoly::monomial(1, -a); }

const std::vector<long> kKappa35{1, 4, 3, 32, 5, 300, 1183, 1024, 12321, 16820};
const std::vector<long> kRes35{1, -8, 9, -128, 25, -1800, 8281, -8192, 110889, -168200};
const std::vector<long> kDelta35{-34, 68, -34, 272, -34, 1700, -5746, 4352, -46546, 57188};

}  // namespace

TEST(IharaPolynomialTest, Bouquets) {
  EXPECT_EQ(ihara_polynomial(bouquet({3, 5})), LaurentPoly::constant(4) - sym(3) - sym(5));
  EXPECT_EQ(ihara_polynomial(bouquet({1, 2})), LaurentPoly::constant(4) - sym(1) - sym(2));
  EXPECT_EQ(ihara_polynomial(bouquet({1, 3, 7})), LaurentPoly::constant(6) - sym(1) - sym(3) - sym(7));
}

TEST(IharaPolynomialTest, Dumbbell) {
  const LaurentPoly left = LaurentPoly::constant(3) - sym(1);
  const LaurentPoly right = LaurentPoly::constant(3) - sym(2);
  EXPECT_EQ(ihara_polynomial(dumbbell(1, 2)), left * right - LaurentPoly::constant(1));
}

TEST(IharaPolynomialTest, MatchesPointEvaluations) {
  const auto towers = oracle::random_towers(5, 25);
  for (const auto& g : towers) {
    const LaurentPoly poly = ihara_polynomial(g.voltaged());
    for (long num : {2, 3, -2}) {
      for (long den : {1, 3}) {
        const Rational t(num, den);
        Rational value = 0;
        Rational power = 1;
        for (long k = 0; k < poly.low(); ++k) power *= t;
        for (long k = poly.low(); k < 0; ++k) power /= t;
        for (const BigInt& c : poly.body().coeffs()) {
          value += Rational(c) * power;
          power *= t;
        }
        EXPECT_EQ(value, oracle::ihara_at(g.vertices, g.edges, g.voltages, t));
      }
    }
  }
}

TEST(AnalyzeTest, BouquetThreeFive) {
  const TowerAnalysis ta = analyze(bouquet({3, 5}));
  EXPECT_EQ(ta.b, 5u);
  EXPECT_EQ(ta.e, 2u);
  EXPECT_EQ(ta.j_poly, (IntPoly{-1, -2, -4, -6, -8, -6, -4, -2, -1}));
  EXPECT_EQ(ta.delta1, -34);
  EXPECT_EQ(ta.kappa_base, 1);
  EXPECT_EQ(ta.chi, -1);
}

TEST(AnalyzeTest, Fibonacci) {
  const TowerAnalysis ta = analyze(bouquet({1, 2}));
  EXPECT_EQ(ta.b, 2u);
  EXPECT_EQ(ta.e, 2u);
  EXPECT_EQ(ta.j_poly, (IntPoly{-1, -3, -1}));
  EXPECT_EQ(ta.delta1, -5);
}

TEST(AnalyzeTest, HypothesisViolations) {
  const Edges triangle{{0, 1}, {1, 2}, {2, 0}};
  const VoltagedGraph cycle(build_graph(3, triangle), VoltageAssignment({1, 0, 0}));
  try {
    analyze(cycle);
    FAIL() << "χ = 0 accepted";
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.kind(), HypothesisError::Kind::kZeroEulerCharacteristic);
  }
  try {
    analyze(bouquet({0, 0}));
    FAIL() << "monodromy 0 accepted";
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.kind(), HypothesisError::Kind::kMonodromy);
  }
  try {
    analyze(VoltagedGraph(build_graph(2, {}), VoltageAssignment()));
    FAIL() << "disconnected base accepted";
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.kind(), HypothesisError::Kind::kDisconnectedBase);
  }
}

TEST(PierceLehmerTest, TableRow) {
  const TowerAnalysis ta = analyze(bouquet({3, 5}));
  const auto range = pierce_lehmer_range(ta.j_poly, 10);
  for (std::uint64_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(pierce_lehmer(ta.j_poly, n), kDelta35[n - 1]) << n;
    EXPECT_EQ(pierce_lehmer_sylvester(ta.j_poly, n), kDelta35[n - 1]) << n;
    EXPECT_EQ(range[n - 1], kDelta35[n - 1]) << n;
  }
}

TEST(PierceLehmerTest, SmallCases) {
  EXPECT_EQ(pierce_lehmer(IntPoly{-2, 1}, 1), 1);
  const BigInt f12 = oracle::fibonacci(12);
  EXPECT_EQ(pierce_lehmer(IntPoly{-1, -3, -1}, 12), -5 * f12 * f12);
  EXPECT_EQ(pierce_lehmer(IntPoly{-1, -3, -1}, 12), -103680);
  EXPECT_THROW(pierce_lehmer(IntPoly{1, 1}, 0), std::invalid_argument);
}

TEST(PierceLehmerTest, ThreePathsAgree) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const IntPoly f = oracle::random_poly(rng, 6, 6, true);
    const auto range = pierce_lehmer_range(f, 40);
    for (std::uint64_t n : {1, 2, 7, 13, 24, 31, 40}) {
      const BigInt reference = pierce_lehmer_sylvester(f, n);
      EXPECT_EQ(pierce_lehmer(f, n), reference) << f.to_string() << " n=" << n;
      EXPECT_EQ(range[n - 1], reference) << f.to_string() << " n=" << n;
    }
  }
}

TEST(PierceLehmerTest, RootOfUnityDetection) {
  EXPECT_TRUE(vanishes_at_root_of_unity(IntPoly{1, 1, 1} * IntPoly{3, 1}));
  EXPECT_TRUE(vanishes_at_root_of_unity(IntPoly{1, 0, 1}));
  EXPECT_FALSE(vanishes_at_root_of_unity(IntPoly{-1, -3, -1}));
  EXPECT_FALSE(vanishes_at_root_of_unity(IntPoly{-1, -2, -4, -6, -8, -6, -4, -2, -1}));
}

TEST(KappaFormulaTest, TableRows) {
  const TowerAnalysis ta = analyze(bouquet({3, 5}));
  for (std::uint64_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(kappa_via_formula(ta, n), kKappa35[n - 1]) << n;
    EXPECT_EQ(resultant_row(ta, n), kRes35[n - 1]) << n;
  }
  // n κ(X_n) = (-1)^{b(n-1)} κ(X) Res(I, 1 + ... + t^{n-1}).
  EXPECT_EQ(4 * kappa_via_formula(ta, 4), -resultant_row(ta, 4));
}

TEST(KappaFormulaTest, FirstLayerIsBase) {
  for (const auto& g : oracle::random_towers(9, 15)) {
    const TowerAnalysis ta = analyze(g.voltaged());
    EXPECT_EQ(kappa_via_formula(ta, 1), ta.kappa_base);
    EXPECT_EQ(resultant_row(ta, 1), 1);
  }
}

TEST(KappaFormulaTest, Fibonacci) {
  const TowerAnalysis ta = analyze(bouquet({1, 2}));
  EXPECT_EQ(kappa_via_formula(ta, 7), 1183);
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const BigInt f = oracle::fibonacci(n);
    EXPECT_EQ(kappa_via_formula(ta, n), BigInt(static_cast<unsigned long>(n)) * f * f) << n;
  }
}

TEST(VerifyTowerTest, NamedTowers) {
  EXPECT_TRUE(verify_tower(bouquet({3, 5}), 10).ok());
  const auto fib = verify_tower(bouquet({1, 2}), 10, 2);
  ASSERT_TRUE(fib.ok());
  for (const auto& layer : fib.layers) {
    const BigInt f = oracle::fibonacci(layer.n);
    EXPECT_EQ(layer.oracle, BigInt(static_cast<unsigned long>(layer.n)) * f * f);
  }
  EXPECT_TRUE(verify_tower(dumbbell(1, 2), 30, 4).ok());
  EXPECT_TRUE(verify_tower(dumbbell(1, 2), 8, 2, OracleMode::kBruteForceSmall).ok());
}

TEST(VerifyTowerTest, ReportsFirstMismatch) {
  const VoltagedGraph good = bouquet({3, 5});
  const TowerAnalysis wrong = analyze(bouquet({3, 4}));
  const TowerVerification v = verify_tower(good, wrong, 10, 2);
  ASSERT_FALSE(v.ok());
  std::uint64_t first = 0;
  for (const auto& layer : v.layers)
    if (!layer.match) {
      first = layer.n;
      break;
    }
  EXPECT_EQ(*v.first_mismatch, first);
  EXPECT_EQ(v.layers.size(), 10u);
}

TEST(VerifyTowerTest, RandomTowersAgreeWithIndependentKirchhoff) {
  for (const auto& g : oracle::random_towers(41, 8)) {
    const TowerAnalysis ta = analyze(g.voltaged());
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const auto edges = oracle::derived_edges(g.vertices, g.edges, g.voltages, n);
      EXPECT_EQ(kappa_via_formula(ta, n), oracle::kirchhoff(g.vertices * n, edges));
    }
  }
}
