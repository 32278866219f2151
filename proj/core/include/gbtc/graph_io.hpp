#pragma once

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "gbtc/graph.hpp"

namespace gbtc {

/// Reads `{"vertices": [...], "edges": [[a, b], ...], "sinks": [...]}`.
/// Edge order in the document becomes edge order in the graph; each pair
/// is read as (tail, head). "sinks" is optional. Throws InputError.
Graph graph_from_json(const nlohmann::json& doc);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::filesystem::path& path);

nlohmann::json graph_to_json(const Graph& g);

}  // namespace gbtc
