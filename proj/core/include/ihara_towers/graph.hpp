#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ihara_towers/bigint.hpp"
#include "ihara_towers/matrix.hpp"

namespace ihara_towers {

/// One edge pair {e, ē}: the stored orientation e runs origin -> terminus and
/// the inverse orientation is implicit.
struct EdgePair {
  std::size_t id = 0;
  std::size_t origin = 0;
  std::size_t terminus = 0;

  bool is_loop() const noexcept { return origin == terminus; }
  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/// Finite graph in the sense of Serre: directed edges come in involutive pairs
/// (e, ē) with ē != e. Loops and parallel edges are allowed. Immutable.
class SerreGraph {
 public:
  SerreGraph() = default;

  /// Throws std::out_of_range if an edge references a missing vertex and
  /// std::invalid_argument if edge ids are not 0..m-1 in order or names repeat.
  SerreGraph(std::vector<std::string> vertex_names, std::vector<EdgePair> edge_pairs);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_pair_count() const noexcept { return edges_.size(); }
  /// |E_X|, counting both orientations of every pair.
  std::size_t directed_edge_count() const noexcept { return 2 * edges_.size(); }

  std::span<const EdgePair> edge_pairs() const noexcept { return edges_; }
  const EdgePair& edge(std::size_t id) const { return edges_.at(id); }
  std::span<const std::string> vertex_names() const noexcept { return names_; }

  /// Number of directed edges with origin v; a loop contributes 2.
  std::size_t valency(std::size_t v) const { return valency_.at(v); }

 private:
  std::vector<std::string> names_;
  std::vector<EdgePair> edges_;
  std::vector<std::size_t> valency_;
};

/// Graph on vertices 0..vertex_count-1 with one edge pair per entry (in order).
SerreGraph build_graph(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> undirected_edges);

/// χ(X) = |V_X| - |E_X|/2.
long euler_characteristic(const SerreGraph& g);

struct DegreeAdjacency {
  IntMatrix degree;     ///< D_X
  IntMatrix adjacency;  ///< A_X, a_ij = #{directed e : o(e) = v_i, t(e) = v_j}
};

DegreeAdjacency degree_and_adjacency(const SerreGraph& g);

/// D_X - A_X. Loops cancel.
IntMatrix laplacian(const SerreGraph& g);

/// Throws std::invalid_argument on the empty graph.
bool is_connected(const SerreGraph& g);

/// κ(X) by the matrix-tree theorem: determinant of the Laplacian with the row
/// and column of vertex 0 removed. Returns 0 for disconnected graphs.
BigInt spanning_tree_count(const SerreGraph& g);

/// Maximum number of edge pairs accepted by the brute-force counter.
inline constexpr std::size_t kBruteForceEdgeLimit = 24;

/// Counts (|V|-1)-subsets of edge pairs forming a spanning tree. Independent of
/// any linear algebra. Throws std::length_error above kBruteForceEdgeLimit.
BigInt spanning_tree_count_bruteforce(const SerreGraph& g);

/// Reverse Cuthill-McKee vertex order (deterministic); used to keep the
/// Laplacian banded before elimination.
std::vector<std::size_t> bandwidth_ordering(const SerreGraph& g);

/// Graph with vertex v renamed to perm[v]; edge ids and orientations kept.
SerreGraph relabel(const SerreGraph& g, std::span<const std::size_t> perm);

}  // namespace ihara_towers
