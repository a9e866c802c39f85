#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace allipoly {

// Vertices are 0-based indices packed into 64-bit masks, so every graph here
// has order at most 64. Subset enumeration caps out far below that anyway.
inline constexpr int kMaxOrder = 64;

inline std::uint64_t universe_mask(int universe) {
  return universe >= 64 ? ~0ULL : (1ULL << universe) - 1;
}

// Immutable subset of the vertex range [0, universe).
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(std::uint64_t bits, int universe) : bits_(bits), universe_(universe) {
    if (universe < 0 || universe > kMaxOrder)
      throw std::invalid_argument("VertexSet universe must lie in [0, 64]");
    if (bits & ~universe_mask(universe))
      throw std::invalid_argument("VertexSet bits outside universe");
  }

  static VertexSet empty_set(int universe) { return VertexSet(0, universe); }
  static VertexSet full_set(int universe) {
    return VertexSet(universe_mask(universe), universe);
  }
  static VertexSet of(std::initializer_list<int> vs, int universe) {
    std::uint64_t b = 0;
    for (int v : vs) {
      if (v < 0 || v >= universe)
        throw std::invalid_argument("VertexSet member outside universe");
      b |= 1ULL << v;
    }
    return VertexSet(b, universe);
  }

  std::uint64_t bits() const { return bits_; }
  int universe() const { return universe_; }
  int count() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  bool contains(int v) const {
    return v >= 0 && v < universe_ && (bits_ >> v & 1);
  }
  VertexSet complement() const {
    return VertexSet(~bits_ & universe_mask(universe_), universe_);
  }
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  bool operator==(const VertexSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
  int universe_ = 0;
};

// Finite simple undirected graph stored as one adjacency bitmask per vertex.
class Graph {
 public:
  Graph() = default;

  Graph(int order, const std::vector<std::pair<int, int>>& edges) : order_(order) {
    if (order < 0 || order > kMaxOrder)
      throw std::invalid_argument("graph order must lie in [0, 64]");
    adj_.assign(static_cast<std::size_t>(order), 0);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= order || v < 0 || v >= order)
        throw std::invalid_argument("edge endpoint " + std::to_string(u < 0 || u >= order ? u : v) +
                                    " outside vertex range [0, " + std::to_string(order) + ")");
      if (u == v)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(u) +
                                    " (only simple graphs are supported)");
      adj_[static_cast<std::size_t>(u)] |= 1ULL << v;  // duplicates collapse
      adj_[static_cast<std::size_t>(v)] |= 1ULL << u;
    }
    size_ = 0;
    for (int v = 0; v < order; ++v) size_ += std::popcount(adj_[static_cast<std::size_t>(v)]);
    size_ /= 2;
  }

  int order() const { return order_; }
  int size() const { return size_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)] >> v & 1;
  }

  std::uint64_t neighbor_bits(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  int degree(int v) const { return std::popcount(neighbor_bits(v)); }

  // Non-increasing.
  std::vector<int> degree_sequence() const;

  int max_degree() const {  // 0 for the order-0 graph
    int d = 0;
    for (int v = 0; v < order_; ++v) d = std::max(d, std::popcount(adj_[static_cast<std::size_t>(v)]));
    return d;
  }
  int min_degree() const {
    int d = order_ == 0 ? 0 : kMaxOrder + 1;
    for (int v = 0; v < order_; ++v) d = std::min(d, std::popcount(adj_[static_cast<std::size_t>(v)]));
    return d == kMaxOrder + 1 ? 0 : d;
  }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= order_)
      throw std::invalid_argument("vertex " + std::to_string(v) + " outside range [0, " +
                                  std::to_string(order_) + ")");
  }

  int order_ = 0;
  int size_ = 0;
  std::vector<std::uint64_t> adj_;
};

inline std::vector<int> Graph::degree_sequence() const {
  std::vector<int> ds;
  ds.reserve(static_cast<std::size_t>(order_));
  for (int v = 0; v < order_; ++v) ds.push_back(std::popcount(adj_[static_cast<std::size_t>(v)]));
  std::sort(ds.rbegin(), ds.rend());
  return ds;
}

inline Graph make_graph(int order, const std::vector<std::pair<int, int>>& edges) {
  return Graph(order, edges);
}

// Lexicographically sorted (u < v) list of edges.
inline std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(g.size()));
  for (int u = 0; u < g.order(); ++u) {
    std::uint64_t higher = g.neighbor_bits(u) & ~universe_mask(u + 1);
    for (std::uint64_t b = higher; b; b &= b - 1) out.emplace_back(u, std::countr_zero(b));
  }
  return out;
}

// Degree of v inside S: |N(v) ∩ S|. v itself need not belong to S.
inline int degree_in_set(const Graph& g, int v, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  return std::popcount(g.neighbor_bits(v) & s.bits());
}

// Fast path for the enumeration loops: bits must be a nonempty subset of the
// vertex range. BFS by mask expansion.
inline bool induced_is_connected_bits(const Graph& g, std::uint64_t bits) {
  std::uint64_t seed = bits & (~bits + 1);
  std::uint64_t reached = seed;
  std::uint64_t frontier = seed;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1)
      next |= g.neighbor_bits(std::countr_zero(f));
    frontier = next & bits & ~reached;
    reached |= frontier;
  }
  return reached == bits;
}

// Whether the subgraph induced by S is connected. S must be nonempty: the
// empty subgraph has no connectivity status in this library.
inline bool induced_is_connected(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  if (s.empty()) throw std::invalid_argument("connectivity of the empty subgraph is undefined");
  return induced_is_connected_bits(g, s.bits());
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return induced_is_connected_bits(g, universe_mask(g.order()));
}

// Connected components as vertex sets, ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t left = universe_mask(g.order());
  while (left) {
    std::uint64_t seed = left & (~left + 1);
    std::uint64_t reached = seed;
    std::uint64_t frontier = seed;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= g.neighbor_bits(std::countr_zero(f));
      frontier = next & ~reached;
      reached |= frontier;
    }
    out.emplace_back(reached, g.order());
    left &= ~reached;
  }
  return out;
}

// Subgraph induced by S, with vertices relabelled 0..|S|-1 in member order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  std::vector<int> verts = s.members();
  std::vector<int> where(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) where[static_cast<std::size_t>(verts[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    std::uint64_t nb = g.neighbor_bits(verts[i]) & s.bits();
    for (std::uint64_t b = nb; b; b &= b - 1) {
      int v = std::countr_zero(b);
      if (verts[i] < v) edges.emplace_back(static_cast<int>(i), where[static_cast<std::size_t>(v)]);
    }
  }
  return Graph(static_cast<int>(verts.size()), edges);
}

}  // namespace allipoly
