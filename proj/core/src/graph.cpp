#include "ihara_towers/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace ihara_towers {

SerreGraph::SerreGraph(std::vector<std::string> vertex_names, std::vector<EdgePair> edge_pairs)
    : names_(std::move(vertex_names)), edges_(std::move(edge_pairs)), valency_(names_.size(), 0) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("duplicate vertex name");
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const EdgePair& e = edges_[k];
    if (e.id != k) throw std::invalid_argument("edge ids must be 0..m-1 in order");
    if (e.origin >= names_.size() || e.terminus >= names_.size())
      throw std::out_of_range("edge " + std::to_string(k) + " references a missing vertex");
    ++valency_[e.origin];
    ++valency_[e.terminus];
  }
}

SerreGraph build_graph(std::size_t vertex_count, std::span<const std::pair<std::size_t, std::size_t>> undirected_edges) {
  if (vertex_count == 0) throw std::invalid_argument("vertex_count must be positive");
  std::vector<std::string> names(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) names[v] = std::to_string(v);
  std::vector<EdgePair> edges;
  edges.reserve(undirected_edges.size());
  for (auto [u, v] : undirected_edges) {
    if (u >= vertex_count || v >= vertex_count) throw std::out_of_range("edge endpoint out of range");
    edges.push_back({edges.size(), u, v});
  }
  return SerreGraph(std::move(names), std::move(edges));
}

long euler_characteristic(const SerreGraph& g) {
  return static_cast<long>(g.vertex_count()) - static_cast<long>(g.edge_pair_count());
}

DegreeAdjacency degree_and_adjacency(const SerreGraph& g) {
  const std::size_t n = g.vertex_count();
  DegreeAdjacency out{IntMatrix(n), IntMatrix(n)};
  for (std::size_t v = 0; v < n; ++v) out.degree(v, v) = static_cast<unsigned long>(g.valency(v));
  for (const EdgePair& e : g.edge_pairs()) {
    out.adjacency(e.origin, e.terminus) += 1;
    out.adjacency(e.terminus, e.origin) += 1;
  }
  return out;
}

IntMatrix laplacian(const SerreGraph& g) {
  auto [d, a] = degree_and_adjacency(g);
  return d - a;
}

bool is_connected(const SerreGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw std::invalid_argument("connectivity of the empty graph is undefined");
  std::vector<std::vector<std::size_t>> adj(n);
  for (const EdgePair& e : g.edge_pairs()) {
    adj[e.origin].push_back(e.terminus);
    adj[e.terminus].push_back(e.origin);
  }
  std::vector<char> seen(n, 0);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    std::size_t v = q.front();
    q.pop();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        q.push(w);
      }
    }
  }
  return reached == n;
}

std::vector<std::size_t> bandwidth_ordering(const SerreGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const EdgePair& e : g.edge_pairs()) {
    if (e.is_loop()) continue;
    adj[e.origin].push_back(e.terminus);
    adj[e.terminus].push_back(e.origin);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  auto by_degree = [&](std::size_t a, std::size_t b) {
    return adj[a].size() != adj[b].size() ? adj[a].size() < adj[b].size() : a < b;
  };
  for (auto& nb : adj) std::sort(nb.begin(), nb.end(), by_degree);

  std::vector<std::size_t> order;
  order.reserve(n);
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  std::stable_sort(starts.begin(), starts.end(), by_degree);
  for (std::size_t s : starts) {
    if (placed[s]) continue;
    std::queue<std::size_t> q;
    q.push(s);
    placed[s] = 1;
    while (!q.empty()) {
      std::size_t v = q.front();
      q.pop();
      order.push_back(v);
      for (std::size_t w : adj[v]) {
        if (!placed[w]) {
          placed[w] = 1;
          q.push(w);
        }
      }
    }
  }
  std::reverse(order.begin(), order.end());
  return order;
}

BigInt spanning_tree_count(const SerreGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  if (!is_connected(g)) return 0;
  if (n == 1) return 1;
  IntMatrix reduced = laplacian(g).minor_without(0);
  // Vertex v > 0 sits at index v - 1 of the reduced Laplacian.
  std::vector<std::size_t> order;
  order.reserve(n - 1);
  for (std::size_t v : bandwidth_ordering(g))
    if (v != 0) order.push_back(v - 1);
  return determinant(reduced.permuted(order));
}

namespace {

// Union-find with rollback (union by size, no path compression).
class RollbackDsu {
 public:
  explicit RollbackDsu(std::size_t n) : parent_(n), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    history_.push_back(b);
    return true;
  }

  void rollback() {
    std::size_t b = history_.back();
    history_.pop_back();
    std::size_t a = parent_[b];
    size_[a] -= size_[b];
    parent_[b] = b;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
};

void count_trees(const std::vector<EdgePair>& edges, std::size_t idx, std::size_t needed, RollbackDsu& dsu,
                 BigInt& total) {
  if (needed == 0) {
    total += 1;
    return;
  }
  if (edges.size() - idx < needed) return;
  const EdgePair& e = edges[idx];
  if (dsu.unite(e.origin, e.terminus)) {
    count_trees(edges, idx + 1, needed - 1, dsu, total);
    dsu.rollback();
  }
  count_trees(edges, idx + 1, needed, dsu, total);
}

}  // namespace

BigInt spanning_tree_count_bruteforce(const SerreGraph& g) {
  if (g.edge_pair_count() > kBruteForceEdgeLimit)
    throw std::length_error("brute-force spanning tree count limited to " + std::to_string(kBruteForceEdgeLimit) +
                            " edge pairs");
  const std::size_t n = g.vertex_count();
  if (n == 0) return 0;
  std::vector<EdgePair> edges;
  for (const EdgePair& e : g.edge_pairs())
    if (!e.is_loop()) edges.push_back(e);
  RollbackDsu dsu(n);
  BigInt total = 0;
  count_trees(edges, 0, n - 1, dsu, total);
  return total;
}

SerreGraph relabel(const SerreGraph& g, std::span<const std::size_t> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  std::vector<char> hit(n, 0);
  for (std::size_t v : perm) {
    if (v >= n || hit[v]) throw std::invalid_argument("not a permutation");
    hit[v] = 1;
  }
  std::vector<std::string> names(n);
  for (std::size_t v = 0; v < n; ++v) names[perm[v]] = g.vertex_names()[v];
  std::vector<EdgePair> edges;
  for (const EdgePair& e : g.edge_pairs()) edges.push_back({e.id, perm[e.origin], perm[e.terminus]});
  return SerreGraph(std::move(names), std::move(edges));
}

}  // namespace ihara_towers
