#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ihara_towers/ihara.hpp"
#include "ihara_towers/padic.hpp"
#include "ihara_towers/voltage.hpp"
#include "json.hpp"

namespace towers_cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kHypothesis = 2,
  kMismatch = 3,
  kResource = 4,
};

struct GraphEdge {
  std::string from;
  std::string to;
  std::int64_t voltage = 0;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// {"vertices": [...], "edges": [{"from", "to", "voltage"}, ...]}
struct GraphFile {
  std::vector<std::string> vertices;
  std::vector<GraphEdge> edges;
  friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

/// Throws std::invalid_argument on malformed documents.
GraphFile parse_graph(const Json& doc);
GraphFile read_graph(const std::string& path);
Json to_json(const GraphFile& g);
ihara_towers::VoltagedGraph to_voltaged(const GraphFile& g);

/// Families: bouquet, circulant-base, dumbbell, igraph, petersen, fibonacci.
GraphFile generate(const std::string& family, const std::vector<std::int64_t>& params);
std::vector<std::string> generator_families();

Json analyze_summary(const GraphFile& g, const std::vector<std::uint64_t>& primes);

struct TableRow {
  std::uint64_t n = 0;
  ihara_towers::BigInt kappa;
  ihara_towers::BigInt resultant;
  ihara_towers::BigInt delta;
};
std::vector<TableRow> table_rows(const ihara_towers::TowerAnalysis& ta, std::uint64_t n_max, unsigned jobs = 1);
Json table_json(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);

Json verification_json(const ihara_towers::TowerVerification& v);

/// One report per prime, computed concurrently and returned in input order.
std::vector<ihara_towers::PadicReport> padic_reports(const ihara_towers::TowerAnalysis& ta,
                                                     const std::vector<std::uint64_t>& primes, std::uint64_t n_max,
                                                     const ihara_towers::PadicOptions& options, unsigned jobs = 1);
Json padic_json(const std::vector<ihara_towers::PadicReport>& reports);
std::string padic_csv(const std::vector<ihara_towers::PadicReport>& reports);

Json asymptotics_json(const ihara_towers::TowerAnalysis& ta, std::uint64_t n_probe);

/// Runs body(i) for i in [0, count) on up to `jobs` threads; rethrows the
/// first exception.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body&& body);

}  // namespace towers_cli

#include "towers_cli/parallel.ipp"
