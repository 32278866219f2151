#include "gbtc/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "gbtc/errors.hpp"

namespace gbtc {

using nlohmann::json;

namespace {
const std::string& as_id(const json& value, const char* what) {
  if (!value.is_string())
    throw InputError(std::string("graph json: ") + what + " must be a string id");
  return value.get_ref<const std::string&>();
}
}  // namespace

Graph graph_from_json(const json& doc) {
  if (!doc.is_object()) throw InputError("graph json: top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw InputError("graph json: missing \"vertices\" array");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw InputError("graph json: missing \"edges\" array");

  Graph g;
  for (const auto& v : doc["vertices"]) g.add_vertex(as_id(v, "vertex"));
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2)
      throw InputError("graph json: each edge must be a pair of vertex ids");
    g.add_edge(as_id(e[0], "edge endpoint"), as_id(e[1], "edge endpoint"));
  }
  if (doc.contains("sinks")) {
    if (!doc["sinks"].is_array()) throw InputError("graph json: \"sinks\" must be an array");
    for (const auto& s : doc["sinks"]) g.mark_sink(g.index(as_id(s, "sink")));
  }
  return g;
}

Graph parse_graph(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw InputError("graph json: parse error");
  return graph_from_json(doc);
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

json graph_to_json(const Graph& g) {
  json vertices = json::array();
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) vertices.push_back(g.name(v));
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({g.name(e.tail), g.name(e.head)});
  json sinks = json::array();
  for (VertexIndex s : g.sinks()) sinks.push_back(g.name(s));
  return {{"vertices", vertices}, {"edges", edges}, {"sinks", sinks}};
}

}  // namespace gbtc
