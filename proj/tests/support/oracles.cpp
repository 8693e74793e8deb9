#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ihara_towers/errors.hpp"
#include "ihara_towers/ihara.hpp"

namespace oracle {

BigInt determinant_rational(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  if (det.get_den() != 1) throw std::logic_error("non-integral determinant");
  return det.get_num();
}

BigInt kirchhoff(std::size_t vertices, const std::vector<Edge>& edges) {
  if (vertices <= 1) return 1;
  std::vector<std::vector<Rational>> lap(vertices, std::vector<Rational>(vertices, Rational(0)));
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  std::vector<std::vector<Rational>> reduced(vertices - 1, std::vector<Rational>(vertices - 1));
  for (std::size_t i = 1; i < vertices; ++i)
    for (std::size_t j = 1; j < vertices; ++j) reduced[i - 1][j - 1] = lap[i][j];
  return determinant_rational(std::move(reduced));
}

namespace {

struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
};

void enumerate(const std::vector<Edge>& edges, std::size_t idx, std::size_t needed, Dsu& dsu, BigInt& count) {
  if (needed == 0) {
    ++count;
    return;
  }
  if (edges.size() - idx < needed) return;
  const auto& [a, b] = edges[idx];
  const std::size_t ra = dsu.find(a), rb = dsu.find(b);
  if (ra != rb) {
    dsu.parent[ra] = rb;
    enumerate(edges, idx + 1, needed - 1, dsu, count);
    dsu.parent[ra] = ra;
  }
  enumerate(edges, idx + 1, needed, dsu, count);
}

}  // namespace

BigInt enumerate_spanning_trees(std::size_t vertices, const std::vector<Edge>& edges) {
  if (vertices == 0) return 0;
  std::vector<Edge> proper;
  for (const Edge& e : edges)
    if (e.first != e.second) proper.push_back(e);
  Dsu dsu(vertices);
  BigInt count = 0;
  enumerate(proper, 0, vertices - 1, dsu, count);
  return count;
}

std::vector<Edge> derived_edges(std::size_t vertices, const std::vector<Edge>& edges,
                                const std::vector<std::int64_t>& voltages, std::uint64_t n) {
  (void)vertices;
  std::vector<Edge> out;
  const auto nn = static_cast<std::int64_t>(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::int64_t shift = ((voltages[e] % nn) + nn) % nn;
    for (std::int64_t s = 0; s < nn; ++s)
      out.emplace_back(edges[e].first * n + static_cast<std::size_t>(s),
                       edges[e].second * n + static_cast<std::size_t>((s + shift) % nn));
  }
  return out;
}

BigInt fibonacci(std::uint64_t n) {
  BigInt a = 0, b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    BigInt c = a + b;
    a = b;
    b = c;
  }
  return a;
}

long valuation(const BigInt& x, std::uint64_t p) {
  if (x == 0) throw std::domain_error("valuation of 0");
  BigInt y = abs(x);
  long k = 0;
  while (y % p == 0) {
    y /= p;
    ++k;
  }
  return k;
}

long valuation(std::uint64_t n, std::uint64_t p) {
  long k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

long lengyel(std::uint64_t p, std::uint64_t n) {
  if (p == 2) {
    if (n % 3 != 0) return 0;
    if (n % 6 == 3) return 1;
    return valuation(n, 2) + 2;
  }
  if (p == 5) return valuation(n, 5);
  std::uint64_t z = 1;
  std::uint64_t a = 1, b = 1;  // F_z, F_{z+1} mod p
  while (a % p != 0) {
    const std::uint64_t c = (a + b) % p;
    a = b;
    b = c;
    ++z;
  }
  if (n % z != 0) return 0;
  return valuation(fibonacci(z), p) + valuation(n, p);
}

Rational ihara_at(std::size_t vertices, const std::vector<Edge>& edges, const std::vector<std::int64_t>& voltages,
                  const Rational& t) {
  auto power = [&](std::int64_t k) {
    Rational base = k >= 0 ? t : Rational(1) / t;
    Rational out = 1;
    for (std::int64_t i = 0; i < (k >= 0 ? k : -k); ++i) out *= base;
    return out;
  };
  std::vector<std::vector<Rational>> m(vertices, std::vector<Rational>(vertices, Rational(0)));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    m[a][a] += 1;
    m[b][b] += 1;
    m[a][b] -= power(voltages[e]);
    m[b][a] -= power(-voltages[e]);
  }
  // Rational determinant (entries need not be integral here).
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::vector<std::complex<long double>> roots(const ihara_towers::IntPoly& f) {
  using C = std::complex<long double>;
  const int d = f.degree();
  if (d < 1) return {};
  std::vector<C> c;
  for (const BigInt& x : f.coeffs()) c.emplace_back(static_cast<long double>(x.get_d()), 0.0L);
  for (C& x : c) x /= c.back();
  std::vector<C> z(static_cast<std::size_t>(d));
  const C seed(0.4L, 0.9L);
  long double radius = 1.0L;
  for (int i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)]) + 1.0L);
  for (int i = 0; i < d; ++i) z[static_cast<std::size_t>(i)] = radius * std::pow(seed, i);
  auto eval = [&](C x) {
    C acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  };
  for (int iter = 0; iter < 5000; ++iter) {
    long double change = 0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      C denom = 1;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) denom *= z[i] - z[j];
      const C step = eval(z[i]) / denom;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-17L) break;
  }
  return z;
}

std::complex<long double> resultant_numeric(const ihara_towers::IntPoly& f, const ihara_towers::IntPoly& g) {
  std::complex<long double> out = std::pow(static_cast<long double>(f.lead().get_d()), g.degree());
  for (const auto& r : roots(f)) {
    std::complex<long double> acc = 0;
    for (std::size_t i = g.coeffs().size(); i-- > 0;) acc = acc * r + static_cast<long double>(g.coeffs()[i].get_d());
    out *= acc;
  }
  return out;
}

ihara_towers::VoltagedGraph RandomGraph::voltaged() const {
  return ihara_towers::VoltagedGraph(ihara_towers::build_graph(vertices, edges),
                                     ihara_towers::VoltageAssignment(voltages));
}

RandomGraph random_connected_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                   std::int64_t max_voltage) {
  RandomGraph g;
  g.vertices = std::uniform_int_distribution<std::size_t>(1, max_vertices)(rng);
  std::uniform_int_distribution<std::int64_t> volt(-max_voltage, max_voltage);
  for (std::size_t v = 1; v < g.vertices; ++v)
    g.edges.emplace_back(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
  const std::size_t total = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(g.edges.size(), 1),
                                                                       std::max(max_edges, g.edges.size()))(rng);
  std::uniform_int_distribution<std::size_t> vert(0, g.vertices - 1);
  while (g.edges.size() < total) g.edges.emplace_back(vert(rng), vert(rng));
  std::shuffle(g.edges.begin(), g.edges.end(), rng);
  for (auto& e : g.edges)
    if (rng() & 1U) std::swap(e.first, e.second);
  for (std::size_t i = 0; i < g.edges.size(); ++i) g.voltages.push_back(volt(rng));
  return g;
}

std::vector<RandomGraph> random_towers(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<RandomGraph> out;
  while (out.size() < count) {
    RandomGraph g = random_connected_graph(rng, 4, 6, 6);
    const long twice_chi = 2 * static_cast<long>(g.vertices) - 2 * static_cast<long>(g.edges.size());
    if (twice_chi == 0) continue;
    try {
      const ihara_towers::VoltagedGraph vg = g.voltaged();
      if (ihara_towers::monodromy_index(vg) != 1) continue;
      ihara_towers::analyze(vg);
    } catch (const ihara_towers::HypothesisError&) {
      continue;
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::pair<std::string, RandomGraph>> named_towers() {
  auto bouquet = [](std::vector<std::int64_t> v) {
    RandomGraph g;
    g.vertices = 1;
    g.edges.assign(v.size(), {0, 0});
    g.voltages = std::move(v);
    return g;
  };
  auto dumbbell = [](std::int64_t k, std::int64_t l) {
    RandomGraph g;
    g.vertices = 2;
    g.edges = {{0, 0}, {0, 1}, {1, 1}};
    g.voltages = {k, 0, l};
    return g;
  };
  return {{"B2(3,5)", bouquet({3, 5})},
          {"B2(1,2)", bouquet({1, 2})},
          {"dumbbell(1,2)", dumbbell(1, 2)},
          {"dumbbell(2,3)", dumbbell(2, 3)},
          {"bouquet(1,3,7)", bouquet({1, 3, 7})}};
}

std::vector<std::pair<std::string, RandomGraph>> reference_corpus(std::size_t random_count) {
  auto out = named_towers();
  std::size_t i = 0;
  for (auto& g : random_towers(20240601, random_count)) out.emplace_back("random#" + std::to_string(i++), std::move(g));
  return out;
}

ihara_towers::IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound, bool nonzero_constant) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  for (;;) {
    const int d = deg(rng);
    std::vector<BigInt> c;
    for (int i = 0; i <= d; ++i) c.emplace_back(coeff(rng));
    ihara_towers::IntPoly f(std::move(c));
    if (f.is_zero()) continue;
    if (nonzero_constant && f.coeff(0) == 0) continue;
    return f;
  }
}

ihara_towers::IntPoly random_palindromic(std::mt19937_64& rng, int max_degree, long bound) {
  std::uniform_int_distribution<int> half(1, max_degree / 2);
  std::uniform_int_distribution<long> coeff(-bound, bound);
  for (;;) {
    const int m = half(rng);
    std::vector<BigInt> c(static_cast<std::size_t>(2 * m + 1));
    for (int i = 0; i <= m; ++i) {
      const BigInt v = coeff(rng);
      c[static_cast<std::size_t>(i)] = v;
      c[static_cast<std::size_t>(2 * m - i)] = v;
    }
    if (c[0] == 0) continue;
    return ihara_towers::IntPoly(std::move(c));
  }
}

}  // namespace oracle
