#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "allipoly/graph.hpp"

namespace allipoly {

// Graph operations. Every result relabels vertices deterministically; all
// combined orders must still fit the 64-vertex representation.

// Vertices of g2 are shifted up by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.order();
  if (n1 + g2.order() > kMaxOrder)
    throw std::invalid_argument("disjoint_union: combined order exceeds 64");
  std::vector<std::pair<int, int>> e = edge_list(g1);
  for (auto [u, v] : edge_list(g2)) e.emplace_back(n1 + u, n1 + v);
  return Graph(n1 + g2.order(), e);
}

// Disjoint union plus every edge between the two sides.
inline Graph graph_join(const Graph& g1, const Graph& g2) {
  int n1 = g1.order();
  int n2 = g2.order();
  if (n1 + n2 > kMaxOrder) throw std::invalid_argument("graph_join: combined order exceeds 64");
  std::vector<std::pair<int, int>> e = edge_list(g1);
  for (auto [u, v] : edge_list(g2)) e.emplace_back(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) e.emplace_back(u, n1 + v);
  return Graph(n1 + n2, e);
}

inline Graph graph_complement(const Graph& g) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) e.emplace_back(u, v);
  return Graph(g.order(), e);
}

inline Graph add_isolated_vertex(const Graph& g) {
  if (g.order() + 1 > kMaxOrder)
    throw std::invalid_argument("add_isolated_vertex: order exceeds 64");
  return Graph(g.order() + 1, edge_list(g));
}

// Vertex (u, v) of a product is index u * g2.order() + v.
inline Graph cartesian_product(const Graph& g1, const Graph& g2) {
  int n1 = g1.order();
  int n2 = g2.order();
  if (n1 == 0 || n2 == 0 || n1 * n2 > kMaxOrder)
    throw std::invalid_argument("cartesian_product: product order must lie in [1, 64]");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n1; ++u)
    for (auto [v, w] : edge_list(g2)) e.emplace_back(u * n2 + v, u * n2 + w);
  for (auto [u, w] : edge_list(g1))
    for (int v = 0; v < n2; ++v) e.emplace_back(u * n2 + v, w * n2 + v);
  return Graph(n1 * n2, e);
}

// Cartesian edges plus the diagonal ones: (u,v) ~ (u',v') when u ~ u' and
// v ~ v'.
inline Graph strong_product(const Graph& g1, const Graph& g2) {
  int n2 = g2.order();
  Graph base = cartesian_product(g1, g2);
  std::vector<std::pair<int, int>> e = edge_list(base);
  for (auto [u, w] : edge_list(g1))
    for (auto [v, x] : edge_list(g2)) {
      e.emplace_back(u * n2 + v, w * n2 + x);
      e.emplace_back(u * n2 + x, w * n2 + v);
    }
  return Graph(base.order(), e);
}

inline Graph remove_edge(const Graph& g, int u, int v) {
  if (!g.adjacent(u, v))
    throw std::invalid_argument("remove_edge: (" + std::to_string(u) + ", " + std::to_string(v) +
                                ") is not an edge");
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : edge_list(g))
    if (!(a == std::min(u, v) && b == std::max(u, v))) e.emplace_back(a, b);
  return Graph(g.order(), e);
}

// Deletes v and compacts the labels above it down by one.
inline Graph remove_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw std::invalid_argument("remove_vertex: no such vertex");
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : edge_list(g)) {
    if (a == v || b == v) continue;
    e.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return Graph(g.order() - 1, e);
}

}  // namespace allipoly
