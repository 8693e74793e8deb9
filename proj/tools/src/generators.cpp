#include <numeric>
#include <stdexcept>

#include "towers_cli/towers_cli.hpp"

namespace towers_cli {

namespace {

GraphFile bouquet(const std::vector<std::int64_t>& voltages) {
  if (voltages.empty()) throw std::invalid_argument("a bouquet needs at least one loop voltage");
  GraphFile g;
  g.vertices = {"v"};
  for (std::int64_t a : voltages) g.edges.push_back({"v", "v", a});
  return g;
}

GraphFile dumbbell(std::int64_t left, std::int64_t right) {
  if (std::gcd(left, right) != 1)
    throw std::invalid_argument("dumbbell(" + std::to_string(left) + ", " + std::to_string(right) +
                                ") needs gcd 1 for a connected tower");
  GraphFile g;
  g.vertices = {"u", "v"};
  g.edges = {{"u", "u", left}, {"u", "v", 0}, {"v", "v", right}};
  return g;
}

void expect_count(const std::string& family, const std::vector<std::int64_t>& params, std::size_t count) {
  if (params.size() != count)
    throw std::invalid_argument(family + " takes " + std::to_string(count) + " parameter(s), got " +
                                std::to_string(params.size()));
}

}  // namespace

std::vector<std::string> generator_families() {
  return {"bouquet", "circulant-base", "dumbbell", "igraph", "petersen", "fibonacci"};
}

GraphFile generate(const std::string& family, const std::vector<std::int64_t>& params) {
  if (family == "bouquet" || family == "circulant-base") return bouquet(params);
  if (family == "dumbbell" || family == "igraph") {
    expect_count(family, params, 2);
    return dumbbell(params[0], params[1]);
  }
  if (family == "petersen") {
    expect_count(family, params, 1);
    return dumbbell(1, params[0]);
  }
  if (family == "fibonacci") {
    expect_count(family, params, 0);
    return bouquet({1, 2});
  }
  throw std::invalid_argument("unknown family \"" + family + "\"");
}

}  // namespace towers_cli
