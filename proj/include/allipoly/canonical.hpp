#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "allipoly/errors.hpp"
#include "allipoly/graph.hpp"

namespace allipoly {

// Canonicalization by explicit minimization over all n! relabellings, so it
// is guarded tightly. Orders up to 8 are allowed by default (8! = 40320
// permutations), up to 10 with force.
inline constexpr int kCanonicalGuard = 8;
inline constexpr int kCanonicalForceCeiling = 10;

// Isomorph enumeration walks all 2^C(n,2) labelled graphs; 7 by default
// (2^21 words), 8 with force (2^28 words, half a gigabit of seen-marks).
inline constexpr int kEnumerationGuard = 7;
inline constexpr int kEnumerationForceCeiling = 8;

namespace detail {

inline int triangle_slots(int n) { return n * (n - 1) / 2; }

// Upper-triangle slot for the pair i < j, column-major: (0,1), (0,2), (1,2),
// (0,3), ... — slot t maps to bit t of the packed word.
inline int pair_slot(int i, int j) { return j * (j - 1) / 2 + i; }

inline std::uint64_t pack_adjacency(const Graph& g) {
  std::uint64_t w = 0;
  for (int j = 1; j < g.order(); ++j)
    for (int i = 0; i < j; ++i)
      if (g.adjacent(i, j)) w |= 1ULL << pair_slot(i, j);
  return w;
}

inline Graph unpack_adjacency(int n, std::uint64_t w) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (w >> pair_slot(i, j) & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// slot_map[t] = source slot of bit t after relabelling by p (new label i
// wears old vertex p[i]).
inline std::vector<int> permutation_slot_map(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<int> sm(static_cast<std::size_t>(triangle_slots(n)));
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int a = p[static_cast<std::size_t>(i)];
      int b = p[static_cast<std::size_t>(j)];
      sm[static_cast<std::size_t>(pair_slot(i, j))] = pair_slot(std::min(a, b), std::max(a, b));
    }
  return sm;
}

inline std::uint64_t apply_slot_map(std::uint64_t w, const std::vector<int>& sm) {
  std::uint64_t out = 0;
  for (std::size_t t = 0; t < sm.size(); ++t)
    out |= (w >> sm[t] & 1ULL) << t;
  return out;
}

inline std::string form_bytes(int n, std::uint64_t w) {
  std::string out(1 + static_cast<std::size_t>((triangle_slots(n) + 7) / 8), '\0');
  out[0] = static_cast<char>(n);
  for (std::size_t b = 1; b < out.size(); ++b)
    out[b] = static_cast<char>(w >> (8 * (b - 1)) & 0xFF);
  return out;
}

}  // namespace detail

// Canonical form: the order byte followed by the minimum, over all vertex
// relabellings, of the packed upper-triangle adjacency word. Two graphs are
// isomorphic exactly when their canonical forms are byte-equal.
inline std::string canonical_form(const Graph& g, bool force = false) {
  const int n = g.order();
  if (n > kCanonicalForceCeiling)
    throw guard_error("canonical_form: order " + std::to_string(n) + " exceeds the ceiling of " +
                      std::to_string(kCanonicalForceCeiling) + " (n! relabellings)");
  if (n > kCanonicalGuard && !force)
    throw guard_error("canonical_form: order " + std::to_string(n) + " exceeds the guard of " +
                      std::to_string(kCanonicalGuard) + " (n! relabellings); pass force to override");
  if (n <= 1) return detail::form_bytes(n, 0);
  const std::uint64_t w = detail::pack_adjacency(g);
  std::uint64_t best = ~0ULL;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  do best = std::min(best, detail::apply_slot_map(w, detail::permutation_slot_map(p)));
  while (std::next_permutation(p.begin(), p.end()));
  return detail::form_bytes(n, best);
}

// Calls fn once per isomorphism class of order-n graphs, with the canonical
// representative (the unpacking of the class's minimal word), in increasing
// order of first labelled appearance. Equivalent to canonicalizing all
// 2^C(n,2) labelled graphs and keeping one per form, but each class is
// canonicalized once and its whole orbit marked seen.
template <class F>
inline void for_each_nonisomorphic(int n, F&& fn, bool force = false) {
  if (n < 1) throw std::invalid_argument("for_each_nonisomorphic: order must be >= 1");
  if (n > kEnumerationForceCeiling)
    throw guard_error("for_each_nonisomorphic: order " + std::to_string(n) +
                      " exceeds the ceiling of " + std::to_string(kEnumerationForceCeiling));
  if (n > kEnumerationGuard && !force)
    throw guard_error("for_each_nonisomorphic: order " + std::to_string(n) + " exceeds the guard of " +
                      std::to_string(kEnumerationGuard) + "; pass force to override");
  const int slots = detail::triangle_slots(n);
  std::vector<std::vector<int>> slot_maps;
  for (const auto& p : detail::all_permutations(n)) slot_maps.push_back(detail::permutation_slot_map(p));
  std::vector<bool> seen(1ULL << slots, false);
  for (std::uint64_t w = 0; w < (1ULL << slots); ++w) {
    if (seen[w]) continue;
    std::uint64_t best = ~0ULL;
    for (const auto& sm : slot_maps) {
      std::uint64_t img = detail::apply_slot_map(w, sm);
      seen[img] = true;
      best = std::min(best, img);
    }
    fn(detail::unpack_adjacency(n, best));
  }
}

inline std::vector<Graph> enumerate_nonisomorphic(int n, bool force = false) {
  std::vector<Graph> out;
  for_each_nonisomorphic(n, [&out](const Graph& g) { out.push_back(g); }, force);
  return out;
}

}  // namespace allipoly
