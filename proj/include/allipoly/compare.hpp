#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "allipoly/alliance.hpp"
#include "allipoly/bigint.hpp"
#include "allipoly/errors.hpp"
#include "allipoly/families.hpp"
#include "allipoly/fixtures.hpp"
#include "allipoly/graph.hpp"
#include "allipoly/ops.hpp"
#include "allipoly/polynomial.hpp"

namespace allipoly {

// Brute-force implementations of six classical graph polynomials. They exist
// to measure distinguishing power against the alliance polynomial, so they
// are deliberately simple and tightly guarded rather than clever.

inline constexpr int kCompareOrderGuard = 16;  // vertex-subset enumerations
inline constexpr int kCompareSizeGuard = 16;   // deletion-contraction edge count

namespace detail {

inline void check_compare_order(const Graph& g, const char* who) {
  if (g.order() > kCompareOrderGuard)
    throw guard_error(std::string(who) + ": order " + std::to_string(g.order()) +
                      " exceeds the comparison guard of " + std::to_string(kCompareOrderGuard));
}

}  // namespace detail

// counts[k] = number of size-k objects; trailing zeros trimmed.
struct CountVector {
  std::vector<std::uint64_t> counts;
  bool operator==(const CountVector&) const = default;
};

inline std::string to_text(const CountVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.counts.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(v.counts[i]);
  }
  return out + "]";
}

namespace detail {

inline void trim_trailing_zeros(std::vector<std::uint64_t>& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
}

// Matchings by size over the unmatched-vertex mask, memoized. Index 0 is the
// empty matching.
inline const std::vector<std::uint64_t>& matchings_for_mask(
    const Graph& g, std::uint64_t mask, std::vector<std::vector<std::uint64_t>>& memo,
    std::vector<bool>& done) {
  if (done[mask]) return memo[mask];
  std::vector<std::uint64_t> out{1};  // leave the lowest vertex unmatched
  int v = std::countr_zero(mask);
  std::uint64_t rest = mask & (mask - 1);
  if (rest) {
    out = matchings_for_mask(g, rest, memo, done);
    for (std::uint64_t nb = g.neighbor_bits(v) & rest; nb; nb &= nb - 1) {
      int u = std::countr_zero(nb);
      const auto& sub = matchings_for_mask(g, rest & ~(1ULL << u), memo, done);
      if (out.size() < sub.size() + 1) out.resize(sub.size() + 1, 0);
      for (std::size_t i = 0; i < sub.size(); ++i) out[i + 1] += sub[i];
    }
  }
  memo[mask] = std::move(out);
  done[mask] = true;
  return memo[mask];
}

}  // namespace detail

// counts[k] = number of k-edge matchings.
inline CountVector matching_counts(const Graph& g) {
  detail::check_compare_order(g, "matching_counts");
  std::uint64_t full = universe_mask(g.order());
  if (!full) return {{1}};
  std::vector<std::vector<std::uint64_t>> memo(full + 1);
  std::vector<bool> done(full + 1, false);
  memo[0] = {1};
  done[0] = true;
  std::vector<std::uint64_t> counts = detail::matchings_for_mask(g, full, memo, done);
  detail::trim_trailing_zeros(counts);
  return {std::move(counts)};
}

// counts[k] = number of independent vertex sets of size k (empty set counts).
inline CountVector independence_counts(const Graph& g) {
  detail::check_compare_order(g, "independence_counts");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.order()) + 1, 0);
  const std::uint64_t end = g.order() ? 2ULL << (g.order() - 1) : 1;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    bool ok = true;
    for (std::uint64_t b = mask; ok && b; b &= b - 1)
      ok = (g.neighbor_bits(std::countr_zero(b)) & mask) == 0;
    if (ok) ++counts[static_cast<std::size_t>(std::popcount(mask))];
  }
  detail::trim_trailing_zeros(counts);
  return {std::move(counts)};
}

// counts[k] = number of dominating sets of size k.
inline CountVector domination_counts(const Graph& g) {
  detail::check_compare_order(g, "domination_counts");
  const int n = g.order();
  std::vector<std::uint64_t> closed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = g.neighbor_bits(v) | (1ULL << v);
  const std::uint64_t full = universe_mask(n);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t end = n ? 2ULL << (n - 1) : 1;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    std::uint64_t covered = 0;
    for (std::uint64_t b = mask; b; b &= b - 1) covered |= closed[static_cast<std::size_t>(std::countr_zero(b))];
    if (covered == full) ++counts[static_cast<std::size_t>(std::popcount(mask))];
  }
  detail::trim_trailing_zeros(counts);
  return {std::move(counts)};
}

// Dense integer polynomial, constant term first, no trailing zeros.
struct IntPolynomial {
  std::vector<BigInt> coeffs;
  bool operator==(const IntPolynomial&) const = default;
};

inline std::string to_text(const IntPolynomial& p) {
  std::string out;
  for (std::size_t e = 0; e < p.coeffs.size(); ++e) {
    const BigInt& c = p.coeffs[e];
    if (c == 0) continue;
    if (out.empty()) out = c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    BigInt a = abs(c);
    if (a != 1 || e == 0) out += a.str();
    if (e >= 1) out += "x";
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

// Characteristic polynomial of the adjacency matrix, exact integers
// throughout (Faddeev–LeVerrier: the trace divisions are exact by theory,
// and this implementation checks that they are).
inline IntPolynomial characteristic_polynomial(const Graph& g) {
  detail::check_compare_order(g, "characteristic_polynomial");
  const int n = g.order();
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, 0);
  coeffs[static_cast<std::size_t>(n)] = 1;
  auto at = [n](std::vector<BigInt>& m, int i, int j) -> BigInt& {
    return m[static_cast<std::size_t>(i * n + j)];
  };
  std::vector<BigInt> M(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) at(M, i, i) = 1;  // M_1 = I
  for (int step = 1; step <= n; ++step) {
    std::vector<BigInt> AM(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (g.adjacent(i, k))
          for (int j = 0; j < n; ++j) AM[static_cast<std::size_t>(i * n + j)] += at(M, k, j);
    BigInt tr = 0;
    for (int i = 0; i < n; ++i) tr += at(AM, i, i);
    if (tr % step != 0) throw std::logic_error("characteristic_polynomial: non-integer trace step");
    BigInt c = -tr / step;
    coeffs[static_cast<std::size_t>(n - step)] = c;
    for (int i = 0; i < n; ++i) at(AM, i, i) += c;
    M = std::move(AM);
  }
  return {std::move(coeffs)};
}

// Sparse polynomial in two variables; zero coefficients are absent.
struct BivariatePoly {
  std::map<std::pair<int, int>, BigInt> terms;
  bool operator==(const BivariatePoly&) const = default;
};

inline std::string to_text(const BivariatePoly& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : p.terms) {
    if (out.empty()) out = c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    BigInt a = abs(c);
    bool bare = e.first == 0 && e.second == 0;
    if (a != 1 || bare) out += a.str();
    if (e.first >= 1) out += "x";
    if (e.first >= 2) out += "^" + std::to_string(e.first);
    if (e.second >= 1) out += "y";
    if (e.second >= 2) out += "^" + std::to_string(e.second);
  }
  return out;
}

inline BigRational evaluate(const BivariatePoly& p, const BigRational& x, const BigRational& y) {
  BigRational acc = 0;
  for (const auto& [e, c] : p.terms) {
    BigRational term(c);
    for (int i = 0; i < e.first; ++i) term *= x;
    for (int i = 0; i < e.second; ++i) term *= y;
    acc += term;
  }
  return acc;
}

namespace detail {

// Multigraph for deletion-contraction: parallel edges and loops arise from
// contractions even though the input is simple.
struct Multigraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline bool mg_connects_elsewhere(const Multigraph& g, std::size_t skip) {
  auto [su, sv] = g.edges[skip];
  std::vector<int> stack{su};
  std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
  seen[static_cast<std::size_t>(su)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == sv) return true;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (i == skip) continue;
      auto [a, b] = g.edges[i];
      int next = -1;
      if (a == v && !seen[static_cast<std::size_t>(b)]) next = b;
      else if (b == v && !seen[static_cast<std::size_t>(a)]) next = a;
      if (next >= 0) {
        seen[static_cast<std::size_t>(next)] = true;
        stack.push_back(next);
      }
    }
  }
  return false;
}

inline BivariatePoly tutte_recurse(const Multigraph& g) {
  int bridges = 0, loops = 0;
  std::size_t pick = g.edges.size();
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    auto [u, v] = g.edges[i];
    if (u == v) ++loops;
    else if (mg_connects_elsewhere(g, i)) {  // lowest-index non-loop non-bridge
      pick = i;
      break;
    } else ++bridges;
  }
  if (pick == g.edges.size()) {
    // Only bridges and loops remain; count the loops we may have skipped.
    BivariatePoly out;
    loops = 0;
    bridges = 0;
    for (auto [u, v] : g.edges) (u == v ? loops : bridges) += 1;
    out.terms[{bridges, loops}] = 1;
    return out;
  }
  Multigraph del = g;
  del.edges.erase(del.edges.begin() + static_cast<std::ptrdiff_t>(pick));
  Multigraph con = del;
  auto [u, v] = g.edges[pick];
  for (auto& [a, b] : con.edges) {
    if (a == v) a = u;
    if (b == v) b = u;
  }
  BivariatePoly left = tutte_recurse(del);
  BivariatePoly right = tutte_recurse(con);
  for (const auto& [e, c] : right.terms) left.terms[e] += c;
  return left;
}

}  // namespace detail

// Tutte polynomial by deletion-contraction; bridges contribute x, loops y,
// the edgeless graph gives 1.
inline BivariatePoly tutte_polynomial(const Graph& g) {
  if (g.size() > kCompareSizeGuard)
    throw guard_error("tutte_polynomial: size " + std::to_string(g.size()) +
                      " exceeds the deletion-contraction guard of " + std::to_string(kCompareSizeGuard));
  detail::Multigraph mg{g.order(), edge_list(g)};
  return detail::tutte_recurse(mg);
}

// Coefficient at (i, j): vertex subsets of size i inducing exactly j
// components. The empty set contributes the constant 1.
inline BivariatePoly subgraph_component_polynomial(const Graph& g) {
  detail::check_compare_order(g, "subgraph_component_polynomial");
  BivariatePoly out;
  const std::uint64_t end = g.order() ? 2ULL << (g.order() - 1) : 1;
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    int comps = 0;
    std::uint64_t left = mask;
    while (left) {
      std::uint64_t seed = left & (~left + 1);
      std::uint64_t reached = seed, frontier = seed;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.neighbor_bits(std::countr_zero(f));
        frontier = next & mask & ~reached;
        reached |= frontier;
      }
      left &= ~reached;
      ++comps;
    }
    out.terms[{std::popcount(mask), comps}] += 1;
  }
  return out;
}

// One row of the distinguishing table: a classical polynomial that fails to
// separate the fixture pair which the alliance polynomial separates.
struct DistinguishingItem {
  int item;                     // 1..7, stable across runs
  std::string classical;        // which classical polynomial
  std::string fixture_a;
  std::string fixture_b;
  std::string classical_status; // "EQUAL", or "SKIPPED (out of scope)"
  std::string alliance_status;  // "UNEQUAL" when the item passes
  bool pass;
};

struct DistinguishingReport {
  std::vector<DistinguishingItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

// The seven fixture pairs: each classical polynomial ties on its pair, the
// alliance polynomial separates every pair. Item 5's classical side (the
// two-variable chromatic polynomial) is out of scope and only recorded.
inline DistinguishingReport distinguishing_suite() {
  DistinguishingReport rep;
  auto alliance_differs = [](const Graph& a, const Graph& b) {
    return alliance_polynomial(a).expanded() != alliance_polynomial(b).expanded();
  };
  auto add = [&rep](int item, std::string classical, std::string fa, std::string fb,
                    bool classical_equal, bool skipped, bool alliance_unequal) {
    bool pass = alliance_unequal && (skipped || classical_equal);
    rep.items.push_back({item, std::move(classical), std::move(fa), std::move(fb),
                         skipped ? "SKIPPED (out of scope)" : (classical_equal ? "EQUAL" : "NOT EQUAL"),
                         alliance_unequal ? "UNEQUAL" : "NOT UNEQUAL", pass});
  };

  GraphPair spectral = cospectral_pair();
  add(1, "characteristic", "pendant-clique", "wired-star",
      characteristic_polynomial(spectral.a) == characteristic_polynomial(spectral.b), false,
      alliance_differs(spectral.a, spectral.b));

  Graph m_a = disjoint_union(path_graph(2), cycle_graph(3));
  Graph m_b = path_graph(5);
  add(2, "matching", "P_2 + C_3 (disjoint union)", "P_5",
      matching_counts(m_a) == matching_counts(m_b), false, alliance_differs(m_a, m_b));

  Graph i_a = strong_product(path_graph(2), path_graph(3));
  Graph i_b = graph_join(empty_graph(2), path_graph(4));
  add(3, "independence", "P_2 * P_3 (strong product)", "E_2 v P_4 (join)",
      independence_counts(i_a) == independence_counts(i_b), false, alliance_differs(i_a, i_b));

  Graph d_a = complete_bipartite_graph(3, 3);
  Graph d_b = cartesian_product(path_graph(2), cycle_graph(3));
  add(4, "domination", "K_{3,3}", "P_2 x C_3 (cartesian product)",
      domination_counts(d_a) == domination_counts(d_b), false, alliance_differs(d_a, d_b));

  GraphPair chrom = bichromatic_pair();
  add(5, "bivariate-chromatic", "shared-vertex cycles", "pendant theta", false, true,
      alliance_differs(chrom.a, chrom.b));

  Graph t_a = path_graph(4);
  Graph t_b = star_graph(4);
  add(6, "tutte", "P_4", "K_{1,3}", tutte_polynomial(t_a) == tutte_polynomial(t_b), false,
      alliance_differs(t_a, t_b));

  GraphPair comp = component_polynomial_pair();
  add(7, "subgraph-component", "leaves-adjacent tree", "leaves-spread tree",
      subgraph_component_polynomial(comp.a) == subgraph_component_polynomial(comp.b), false,
      alliance_differs(comp.a, comp.b));

  return rep;
}

}  // namespace allipoly
