#include <fstream>
#include <map>
#include <stdexcept>

#include "towers_cli/towers_cli.hpp"

namespace towers_cli {

namespace {

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return *it;
}

}  // namespace

GraphFile parse_graph(const Json& doc) {
  if (!doc.is_object()) throw std::invalid_argument("graph document must be a JSON object");
  GraphFile g;
  const Json& vertices = field(doc, "vertices");
  if (!vertices.is_array() || vertices.empty()) throw std::invalid_argument("\"vertices\" must be a nonempty array");
  std::map<std::string, std::size_t> index;
  for (const Json& v : vertices) {
    if (!v.is_string()) throw std::invalid_argument("vertex names must be strings");
    const std::string name = v.get<std::string>();
    if (!index.emplace(name, g.vertices.size()).second) throw std::invalid_argument("duplicate vertex \"" + name + "\"");
    g.vertices.push_back(name);
  }
  const Json& edges = field(doc, "edges");
  if (!edges.is_array()) throw std::invalid_argument("\"edges\" must be an array");
  for (const Json& e : edges) {
    if (!e.is_object()) throw std::invalid_argument("edges must be objects");
    GraphEdge edge;
    const Json& from = field(e, "from");
    const Json& to = field(e, "to");
    const Json& voltage = field(e, "voltage");
    if (!from.is_string() || !to.is_string()) throw std::invalid_argument("edge endpoints must be vertex names");
    if (!voltage.is_number_integer()) throw std::invalid_argument("voltage must be an integer");
    edge.from = from.get<std::string>();
    edge.to = to.get<std::string>();
    edge.voltage = voltage.get<std::int64_t>();
    if (!index.contains(edge.from)) throw std::invalid_argument("unknown vertex \"" + edge.from + "\"");
    if (!index.contains(edge.to)) throw std::invalid_argument("unknown vertex \"" + edge.to + "\"");
    g.edges.push_back(std::move(edge));
  }
  return g;
}

GraphFile read_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return parse_graph(doc);
}

Json to_json(const GraphFile& g) {
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"voltage", e.voltage}});
  return {{"vertices", g.vertices}, {"edges", edges}};
}

ihara_towers::VoltagedGraph to_voltaged(const GraphFile& g) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;
  std::vector<ihara_towers::EdgePair> pairs;
  std::vector<std::int64_t> voltages;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    pairs.push_back({i, index.at(g.edges[i].from), index.at(g.edges[i].to)});
    voltages.push_back(g.edges[i].voltage);
  }
  return ihara_towers::VoltagedGraph(ihara_towers::SerreGraph(g.vertices, std::move(pairs)),
                                     ihara_towers::VoltageAssignment(std::move(voltages)));
}

}  // namespace towers_cli
