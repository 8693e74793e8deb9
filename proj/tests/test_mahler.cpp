#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ihara_towers/graph.hpp"
#include "ihara_towers/mahler.hpp"
#include "oracles.hpp"

using namespace ihara_towers;

namespace {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

TowerAnalysis bouquet_tower(std::vector<std::int64_t> voltages) {
  Edges loops(voltages.size(), {0, 0});
  return analyze(VoltagedGraph(build_graph(1, loops), VoltageAssignment(std::move(voltages))));
}

TowerAnalysis dumbbell_tower(std::int64_t k, std::int64_t l) {
  const Edges edges{{0, 0}, {0, 1}, {1, 1}};
  return analyze(VoltagedGraph(build_graph(2, edges), VoltageAssignment({k, 0, l})));
}

const double kGolden = (1.0 + std::sqrt(5.0)) / 2.0;

}  // namespace

TEST(PadicMeasureTest, ContentValuation) {
  EXPECT_EQ(mahler_padic(IntPoly{1, 3, 1}, 7).exponent, 0);
  const PadicMeasure m = mahler_padic(IntPoly{25, 0, 5}, 5);
  EXPECT_EQ(m.exponent, 1);
  EXPECT_NEAR(std::exp(m.log_measure()), 0.2, 1e-15);
  EXPECT_EQ(mahler_padic(IntPoly{-1, -2, -4, -6, -8, -6, -4, -2, -1}, 2).exponent, 0);
  EXPECT_THROW(mahler_padic(IntPoly{}, 2), std::domain_error);
  EXPECT_THROW(mahler_padic(IntPoly{1, 1}, 4), std::invalid_argument);
}

TEST(ArchimedeanMeasureTest, ClosedForms) {
  EXPECT_NEAR(mahler_archimedean(IntPoly{-2, 1}).value, 2.0, 1e-12);
  EXPECT_NEAR(mahler_archimedean(IntPoly{1, 3, 1}).value, kGolden * kGolden, 1e-12);
  const IntPoly with_unit_factor = IntPoly{1, 3, 1} * IntPoly{1, -2, 1};
  EXPECT_NEAR(mahler_archimedean(with_unit_factor).value, kGolden * kGolden, 1e-12);
  EXPECT_NEAR(mahler_archimedean(IntPoly{0, 0, 6}).value, 6.0, 1e-12);
}

TEST(ArchimedeanMeasureTest, RepeatedRootsHandled) {
  const IntPoly f = IntPoly{-3, 1} * IntPoly{-3, 1} * IntPoly{1, 1, 1};
  EXPECT_NEAR(mahler_archimedean(f).log_value, 2 * std::log(3.0), 1e-12);
}

TEST(ArchimedeanMeasureTest, MatchesPierceLehmerGrowth) {
  // |Δ_n|^{1/n} -> M(f) when f has no root on the unit circle; roots kept 0.1 away so n = 400 is asymptotic.
  std::mt19937_64 rng(51);
  int checked = 0;
  while (checked < 20) {
    const IntPoly f = oracle::random_poly(rng, 5, 6, true);
    if (f.degree() < 1 || count_unit_circle_roots(f) != 0) continue;
    bool near_circle = false;
    for (const auto& z : oracle::roots(f)) near_circle = near_circle || std::abs(std::abs(z) - 1.0L) < 0.1L;
    if (near_circle) continue;
    const double predicted = mahler_archimedean(f).log_value;
    const double a = log_abs(pierce_lehmer(f, 400));
    const double b = log_abs(pierce_lehmer(f, 401));
    EXPECT_NEAR(b - a, predicted, 1e-6) << f.to_string();
    ++checked;
  }
}

TEST(ArchimedeanMeasureTest, AberthFindsRoots) {
  const auto roots = aberth_roots(IntPoly{-6, 11, -6, 1});
  ASSERT_EQ(roots.size(), 3u);
  std::vector<double> re;
  for (const auto& z : roots) {
    EXPECT_NEAR(z.imag(), 0.0, 1e-9);
    re.push_back(z.real());
  }
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], 1.0, 1e-10);
  EXPECT_NEAR(re[1], 2.0, 1e-10);
  EXPECT_NEAR(re[2], 3.0, 1e-10);
}

TEST(UnitCircleTest, Examples) {
  EXPECT_EQ(count_unit_circle_roots(IntPoly{-1, -3, -1}), 0u);
  EXPECT_EQ(count_unit_circle_roots(IntPoly{1, 0, 1}), 2u);
  EXPECT_EQ(count_unit_circle_roots(dumbbell_tower(1, 2).j_poly), 0u);
  EXPECT_EQ(count_unit_circle_roots(IntPoly{1, -2, 1} * IntPoly{1, 1}), 3u);
  EXPECT_EQ(count_unit_circle_roots(IntPoly{1, 1, 1} * IntPoly{1, 1, 1} * IntPoly{0, 1}), 4u);
  EXPECT_EQ(count_unit_circle_roots(IntPoly{1, 0, 0, 0, 1} * IntPoly{-3, 1}), 4u);
}

TEST(UnitCircleTest, ReciprocalTracePolynomial) {
  EXPECT_EQ(reciprocal_trace_polynomial(IntPoly{1, 3, 1}), (IntPoly{3, 1}));
  // t^4 + 1 = t^2 (x^2 - 2), x = t + 1/t.
  EXPECT_EQ(reciprocal_trace_polynomial(IntPoly{1, 0, 0, 0, 1}), (IntPoly{-2, 0, 1}));
  EXPECT_THROW(reciprocal_trace_polynomial(IntPoly{1, 2}), std::invalid_argument);
  EXPECT_THROW(reciprocal_trace_polynomial(IntPoly{1, 2, 3}), std::invalid_argument);
}

TEST(UnitCircleTest, SturmCount) {
  const IntPoly q = IntPoly{-1, 1} * IntPoly{1, 1} * IntPoly{-5, 1};  // roots 1, -1, 5
  EXPECT_EQ(sturm_count(q, Rational(-2), Rational(2)), 2u);
  EXPECT_EQ(sturm_count(q, Rational(0), Rational(10)), 2u);
  EXPECT_EQ(sturm_count(IntPoly{1, 0, 1}, Rational(-10), Rational(10)), 0u);
}

TEST(AsymptoticsTest, FibonacciRate) {
  const ArchimedeanAsymptotic law = archimedean_asymptotic(bouquet_tower({1, 2}));
  EXPECT_TRUE(law.applicable);
  EXPECT_NEAR(law.rate, 2 * std::log(kGolden), 1e-12);
  EXPECT_EQ(law.poly_order, 1u);
  EXPECT_NEAR(law.constant, -std::log(5.0), 1e-12);
  const TowerAnalysis ta = bouquet_tower({1, 2});
  EXPECT_LT(std::abs(log_abs(kappa_via_formula(ta, 150)) - law.predicted_log_kappa(150)), 1e-8);
}

TEST(AsymptoticsTest, CirculantAndIGraphConstants) {
  EXPECT_EQ(abs(bouquet_tower({1, 3}).delta1), 10);
  EXPECT_EQ(abs(bouquet_tower({2, 3, 5}).delta1), 38);
  EXPECT_EQ(abs(dumbbell_tower(1, 2).delta1), 5);
  EXPECT_EQ(abs(dumbbell_tower(2, 3).delta1), 13);
  const TowerAnalysis ta = bouquet_tower({1, 3});
  const ArchimedeanAsymptotic law = archimedean_asymptotic(ta);
  EXPECT_LT(std::abs(log_abs(kappa_via_formula(ta, 300)) - law.predicted_log_kappa(300)), 1e-6);
}

TEST(PadicLawTest, ApplicabilityFollowsNewtonPolygon) {
  TowerAnalysis synthetic;
  synthetic.j_poly = IntPoly{-1, 2};
  synthetic.e = 1;
  synthetic.kappa_base = 1;
  synthetic.delta1 = 1;
  EXPECT_TRUE(padic_asymptotic_no_unit_roots(synthetic, 2).applicable);
  EXPECT_FALSE(padic_asymptotic_no_unit_roots(synthetic, 3).applicable);
  EXPECT_FALSE(padic_asymptotic_no_unit_roots(bouquet_tower({1, 2}), 7).applicable);
}

TEST(PadicLawTest, PredictsValuationsWhenApplicable) {
  // J = 2t - 1 has Δ_n = 2^n - 1: ord_2 = 0 for every n.
  TowerAnalysis synthetic;
  synthetic.j_poly = IntPoly{-1, 2};
  synthetic.e = 1;
  synthetic.kappa_base = 1;
  synthetic.delta1 = 1;
  const PadicAffineLaw law = padic_asymptotic_no_unit_roots(synthetic, 2);
  for (std::uint64_t n = 1; n <= 40; ++n)
    EXPECT_EQ(law.predicted_ord(n), valuation(pierce_lehmer(synthetic.j_poly, n), 2));
}
