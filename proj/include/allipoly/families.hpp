#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "allipoly/graph.hpp"

namespace allipoly {

// Standard family constructors with fixed labellings, so tests and the
// canonical-form machinery see deterministic graphs.

// Vertices 0..n-1, edges (i, i+1).
inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: order must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

// Path edges plus (n-1, 0).
inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: order must be >= 3");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(n - 1, 0);
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: order must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph empty_graph(int n) {
  if (n < 1) throw std::invalid_argument("empty_graph: order must be >= 1");
  return Graph(n, {});
}

// Center is vertex 0, leaves 1..n-1. star_graph(2) is the single edge.
inline Graph star_graph(int n) {
  if (n < 2) throw std::invalid_argument("star_graph: order must be >= 2");
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

// Parts {0..n-1} and {n..n+m-1}.
inline Graph complete_bipartite_graph(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("complete_bipartite_graph: both part sizes must be >= 1");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < m; ++v) e.emplace_back(u, n + v);
  return Graph(n + m, e);
}

// Complete graph with the edge (0, 1) removed. n = 2 yields two isolated
// vertices.
inline Graph complete_minus_edge_graph(int n) {
  if (n < 2) throw std::invalid_argument("complete_minus_edge_graph: order must be >= 2");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!(u == 0 && v == 1)) e.emplace_back(u, v);
  return Graph(n, e);
}

}  // namespace allipoly
