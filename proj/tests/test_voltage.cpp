#include <gtest/gtest.h>

#include "ihara_towers/errors.hpp"
#include "ihara_towers/graph.hpp"
#include "ihara_towers/voltage.hpp"
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

}  // namespace

TEST(VoltageTest, AssignmentIsAntisymmetric) {
  const VoltageAssignment a({3, -5});
  EXPECT_EQ(a[0], 3);
  EXPECT_EQ(a.reversed(0), -3);
  EXPECT_EQ(a.reversed(1), 5);
}

TEST(VoltageTest, SizeMismatchRejected) {
  const Edges loops{{0, 0}, {0, 0}};
  EXPECT_THROW(VoltagedGraph(build_graph(1, loops), VoltageAssignment({1})), std::invalid_argument);
}

TEST(VoltageTest, MonodromyIndex) {
  EXPECT_EQ(monodromy_index(bouquet({3, 5})), 1u);
  EXPECT_EQ(monodromy_index(bouquet({2, 4})), 2u);
  EXPECT_EQ(monodromy_index(bouquet({0, 0})), 0u);
  EXPECT_EQ(monodromy_index(dumbbell(4, 6)), 2u);
}

TEST(VoltageTest, FundamentalCycles) {
  EXPECT_EQ(fundamental_cycle_voltages(bouquet({3, 5})), (std::vector<std::int64_t>{3, 5}));
  EXPECT_EQ(fundamental_cycle_voltages(dumbbell(1, 2)), (std::vector<std::int64_t>{1, 2}));
  const Edges path{{0, 1}, {1, 2}};
  const VoltagedGraph tree(build_graph(3, path), VoltageAssignment({4, 7}));
  EXPECT_TRUE(fundamental_cycle_voltages(tree).empty());
  EXPECT_EQ(monodromy_index(tree), 0u);
}

TEST(VoltageTest, DisconnectedBaseIsAHypothesisError) {
  const VoltagedGraph split(build_graph(2, {}), VoltageAssignment());
  EXPECT_THROW(monodromy_index(split), HypothesisError);
}

TEST(DerivedGraphTest, FirstLayerIsTheBase) {
  const VoltagedGraph vg = dumbbell(1, 2);
  const SerreGraph x1 = derived_graph(vg, 1);
  EXPECT_EQ(laplacian(x1), laplacian(vg.base()));
  EXPECT_EQ(degree_and_adjacency(x1).adjacency, degree_and_adjacency(vg.base()).adjacency);
}

TEST(DerivedGraphTest, FourthLayerOfBouquet) {
  const SerreGraph x4 = derived_graph(bouquet({3, 5}), 4);
  EXPECT_EQ(x4.vertex_count(), 4u);
  for (std::size_t v = 0; v < 4; ++v) EXPECT_EQ(x4.valency(v), 4u);
  EXPECT_EQ(spanning_tree_count(x4), 32);
}

TEST(DerivedGraphTest, BouquetLayersAreCirculants) {
  // C_n(1, 3) for n = 9: vertex i adjacent to i ± 1 and i ± 3.
  const std::uint64_t n = 9;
  const SerreGraph layer = derived_graph(bouquet({1, 3}), n);
  const auto adj = degree_and_adjacency(layer).adjacency;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t d = (j + n - i) % n;
      const long expected = (d == 1 || d == n - 1 || d == 3 || d == n - 3) ? 1 : 0;
      EXPECT_EQ(adj(i, j), expected) << i << "," << j;
    }
}

TEST(DerivedGraphTest, MatchesIndependentConstruction) {
  const auto towers = oracle::random_towers(3, 10);
  for (const auto& g : towers) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const auto edges = oracle::derived_edges(g.vertices, g.edges, g.voltages, n);
      EXPECT_EQ(spanning_tree_count(derived_graph(g.voltaged(), n)),
                oracle::kirchhoff(g.vertices * n, edges));
    }
  }
}

TEST(DerivedGraphTest, RejectsZeroLayer) { EXPECT_THROW(derived_graph(bouquet({1, 2}), 0), std::invalid_argument); }
