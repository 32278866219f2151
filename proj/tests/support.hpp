#pragma once

#include <string>

#include "gbtc/graph.hpp"
#include "gbtc/graph_io.hpp"

namespace testing_support {

inline gbtc::Graph star(int n) {
  gbtc::Graph g;
  g.add_vertex("c");
  for (int i = 1; i <= n; ++i) {
    g.add_vertex("l" + std::to_string(i));
    g.add_edge("c", "l" + std::to_string(i));
  }
  return g;
}

inline gbtc::Graph theta(int edges = 3) {
  gbtc::Graph g;
  g.add_vertex("a");
  g.add_vertex("b");
  for (int i = 0; i < edges; ++i) g.add_edge("a", "b");
  return g;
}

inline gbtc::Graph path(int edges) {
  gbtc::Graph g;
  g.add_vertex("p0");
  for (int i = 1; i <= edges; ++i) {
    g.add_vertex("p" + std::to_string(i));
    g.add_edge("p" + std::to_string(i - 1), "p" + std::to_string(i));
  }
  return g;
}

inline gbtc::Graph cycle(int edges) {
  gbtc::Graph g;
  for (int i = 0; i < edges; ++i) g.add_vertex("c" + std::to_string(i));
  for (int i = 0; i < edges; ++i)
    g.add_edge("c" + std::to_string(i), "c" + std::to_string((i + 1) % edges));
  return g;
}

inline gbtc::Graph corpus(const std::string& name) {
  return gbtc::load_graph(std::string(GBTC_CORPUS_DIR) + "/" + name + ".json");
}

inline gbtc::Graph test_data(const std::string& name) {
  return gbtc::load_graph(std::string(GBTC_TEST_DATA_DIR) + "/" + name + ".json");
}

}  // namespace testing_support
