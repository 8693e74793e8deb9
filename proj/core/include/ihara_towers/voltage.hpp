#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ihara_towers/graph.hpp"

namespace ihara_towers {

/// Integer voltage on the stored orientation of each edge pair; the inverse
/// orientation carries the negated value, so antisymmetry holds by construction.
class VoltageAssignment {
 public:
  VoltageAssignment() = default;
  explicit VoltageAssignment(std::vector<std::int64_t> values) : values_(std::move(values)) {}

  std::int64_t operator[](std::size_t edge_id) const { return values_.at(edge_id); }
  /// α(ē) for the reversed orientation.
  std::int64_t reversed(std::size_t edge_id) const { return -values_.at(edge_id); }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::int64_t> values() const noexcept { return values_; }

  friend bool operator==(const VoltageAssignment&, const VoltageAssignment&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// The pair (X, α). Throws std::invalid_argument unless every edge pair of the
/// base has exactly one voltage.
class VoltagedGraph {
 public:
  VoltagedGraph(SerreGraph base, VoltageAssignment voltages);

  const SerreGraph& base() const noexcept { return base_; }
  const VoltageAssignment& voltages() const noexcept { return voltages_; }

 private:
  SerreGraph base_;
  VoltageAssignment voltages_;
};

/// Voltages of the fundamental cycles of the breadth-first spanning tree rooted
/// at vertex 0 (edges scanned in id order), one per non-tree edge pair in id
/// order. Throws HypothesisError on a disconnected base.
std::vector<std::int64_t> fundamental_cycle_voltages(const VoltagedGraph& vg);

/// d >= 0 with image(ρ_{α,v0}) = dZ. X(Z, α) is connected iff d == 1 and
/// X_n is connected iff gcd(d, n) == 1.
std::uint64_t monodromy_index(const VoltagedGraph& vg);

/// X_n = X(Z/nZ, α mod n). Vertex (v, σ) has index v * n + σ; edge pair
/// (e, σ) has id e * n + σ and runs (o(e), σ) -> (t(e), σ + α(e) mod n).
/// Materializes |V_X| * n vertices. Throws std::invalid_argument for n < 1.
SerreGraph derived_graph(const VoltagedGraph& vg, std::uint64_t n);

}  // namespace ihara_towers
