#pragma once

#include <stdexcept>
#include <vector>

#include "allipoly/graph.hpp"

namespace allipoly {

// Hard-coded small graphs whose classical polynomials collide pairwise while
// the alliance polynomial separates them. Each constructor re-checks its
// degree sequence so a typo in an edge list cannot slip through silently.

struct GraphPair {
  Graph a;
  Graph b;
};

namespace detail {

inline Graph checked(Graph g, const std::vector<int>& want_degrees, const char* who) {
  if (g.degree_sequence() != want_degrees)
    throw std::logic_error(std::string("fixture ") + who + ": degree sequence mismatch");
  return g;
}

}  // namespace detail

// Two order-10 trees with the same subgraph-component polynomial (and the
// same degree sequence, characteristic polynomial, matching and independence
// counts) but different alliance polynomials. Both are an 8-path with two
// extra leaves; they differ in where the leaves land.
inline GraphPair component_polynomial_pair() {
  Graph a(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {3, 8}, {4, 9}});
  Graph b(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {5, 7}, {4, 8}, {8, 9}});
  std::vector<int> deg{3, 3, 2, 2, 2, 2, 1, 1, 1, 1};
  return {detail::checked(std::move(a), deg, "component_polynomial_pair.a"),
          detail::checked(std::move(b), deg, "component_polynomial_pair.b")};
}

// The classic connected cospectral pair on 6 vertices: a 4-clique minus an
// edge wearing two pendant leaves, against a 5-star with two extra edges
// among the leaves. Equal characteristic polynomials, different alliance
// polynomials.
inline GraphPair cospectral_pair() {
  Graph a(6, {{0, 1}, {2, 3}, {4, 5}, {1, 4}, {4, 3}, {3, 5}, {5, 1}});
  Graph b(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {3, 4}});
  return {detail::checked(std::move(a), {3, 3, 3, 3, 1, 1}, "cospectral_pair.a"),
          detail::checked(std::move(b), {5, 2, 2, 2, 2, 1}, "cospectral_pair.b")};
}

// A triangle and a square sharing one vertex, against a theta graph with a
// pendant leaf. Known to agree on the two-variable chromatic polynomial;
// the first is the even-degree parity-symmetry example.
inline GraphPair bichromatic_pair() {
  Graph a(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}, {2, 0}});
  Graph b(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {5, 2}});
  return {detail::checked(std::move(a), {4, 2, 2, 2, 2, 2}, "bichromatic_pair.a"),
          detail::checked(std::move(b), {3, 3, 3, 2, 2, 1}, "bichromatic_pair.b")};
}

}  // namespace allipoly
