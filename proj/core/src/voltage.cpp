#include "ihara_towers/voltage.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

#include "ihara_towers/errors.hpp"

namespace ihara_towers {

VoltagedGraph::VoltagedGraph(SerreGraph base, VoltageAssignment voltages)
    : base_(std::move(base)), voltages_(std::move(voltages)) {
  if (voltages_.size() != base_.edge_pair_count()) {
    throw std::invalid_argument("voltage assignment has " + std::to_string(voltages_.size()) +
                                " values for " + std::to_string(base_.edge_pair_count()) + " edge pairs");
  }
}

std::vector<std::int64_t> fundamental_cycle_voltages(const VoltagedGraph& vg) {
  const SerreGraph& g = vg.base();
  const std::size_t n = g.vertex_count();
  if (n == 0 || !is_connected(g))
    throw HypothesisError(HypothesisError::Kind::kDisconnectedBase, "base graph is not connected");

  // incident[v] lists (edge id, other endpoint, signed voltage leaving v), in id order.
  struct Half {
    std::size_t edge;
    std::size_t other;
    std::int64_t voltage;
  };
  std::vector<std::vector<Half>> incident(n);
  for (const EdgePair& e : g.edge_pairs()) {
    incident[e.origin].push_back({e.id, e.terminus, vg.voltages()[e.id]});
    if (!e.is_loop()) incident[e.terminus].push_back({e.id, e.origin, vg.voltages().reversed(e.id)});
  }

  // potential[v] = voltage of the tree path 0 -> v.
  std::vector<std::int64_t> potential(n, 0);
  std::vector<char> seen(n, 0);
  std::vector<char> tree_edge(g.edge_pair_count(), 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (const Half& h : incident[v]) {
      if (seen[h.other]) continue;
      seen[h.other] = 1;
      tree_edge[h.edge] = 1;
      potential[h.other] = potential[v] + h.voltage;
      q.push(h.other);
    }
  }

  std::vector<std::int64_t> out;
  for (const EdgePair& e : g.edge_pairs()) {
    if (tree_edge[e.id]) continue;
    out.push_back(potential[e.origin] + vg.voltages()[e.id] - potential[e.terminus]);
  }
  return out;
}

std::uint64_t monodromy_index(const VoltagedGraph& vg) {
  std::uint64_t d = 0;
  for (std::int64_t c : fundamental_cycle_voltages(vg)) {
    std::uint64_t a = c < 0 ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
    d = std::gcd(d, a);
  }
  return d;
}

SerreGraph derived_graph(const VoltagedGraph& vg, std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("cover degree n must be >= 1");
  const SerreGraph& g = vg.base();
  const std::size_t nv = g.vertex_count();
  std::vector<std::string> names;
  names.reserve(nv * n);
  for (std::size_t v = 0; v < nv; ++v)
    for (std::uint64_t s = 0; s < n; ++s) names.push_back(std::string(g.vertex_names()[v]) + "@" + std::to_string(s));

  const auto modulus = static_cast<std::int64_t>(n);
  std::vector<EdgePair> edges;
  edges.reserve(g.edge_pair_count() * n);
  for (const EdgePair& e : g.edge_pairs()) {
    std::int64_t shift = vg.voltages()[e.id] % modulus;
    if (shift < 0) shift += modulus;
    for (std::int64_t s = 0; s < modulus; ++s) {
      std::size_t from = e.origin * n + static_cast<std::size_t>(s);
      std::size_t to = e.terminus * n + static_cast<std::size_t>((s + shift) % modulus);
      edges.push_back({edges.size(), from, to});
    }
  }
  return SerreGraph(std::move(names), std::move(edges));
}

}  // namespace ihara_towers
