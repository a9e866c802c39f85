#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "allipoly/alliance.hpp"
#include "allipoly/closed_forms.hpp"
#include "allipoly/families.hpp"
#include "allipoly/graph.hpp"
#include "allipoly/ops.hpp"
#include "allipoly/polynomial.hpp"

namespace allipoly {

// Structural facts every alliance polynomial must satisfy, checked against
// the graph they were computed from. One CheckResult per theorem; a FAIL
// means either the engine or the claimed polynomial is wrong.

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

struct InvariantReport {
  std::vector<CheckResult> checks;
  bool all_pass() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

namespace detail {

inline std::string big_str(const BigInt& b) { return b.str(); }

// Deterministic per-graph sample seed: checks must not flap between runs.
inline std::uint64_t sample_seed(const Graph& g) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(g.order());
  for (int v = 0; v < g.order(); ++v) h = (h * 0x100000001b3ULL) ^ g.neighbor_bits(v);
  return h;
}

inline BigInt direct_connected_count(const Graph& g) {
  BigInt total = 0;
  const std::uint64_t end = 2ULL << (g.order() - 1);
  for (std::uint64_t mask = 1; mask < end; ++mask)
    if (induced_is_connected_bits(g, mask)) ++total;
  return total;
}

}  // namespace detail

// Verify a claimed polynomial against its graph. The thirteen checks below
// are the library's running self-test; invariant_report() computes the
// polynomial first, while this overload lets callers (and the corruption
// test hook) supply one.
inline InvariantReport invariant_report_for(const Graph& g, const AlliancePolynomial& p,
                                            const ComputeOptions& opt = {}) {
  detail::check_enumeration_guard(g, opt.force, "invariant_report");
  InvariantReport rep;
  const int n = g.order();
  const int d1 = g.max_degree();
  auto add = [&rep](std::string name, bool pass, std::string detail_text) {
    rep.checks.push_back({std::move(name), pass, std::move(detail_text)});
  };
  ComputeOptions forced = opt;
  forced.force = true;  // inner composite graphs exceed the caller's order by <= 3

  // 1. Lowest term: exponent n - d1, coefficient = number of max-degree
  //    vertices (only max-degree singletons reach index -d1).
  {
    int maxdeg_vertices = 0;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == d1) ++maxdeg_vertices;
    bool ok = p.order() == n && p.min_exponent() == n - d1 && p.coefficient(-d1) == maxdeg_vertices;
    add("lowest-term-max-degree", ok,
        "min exponent " + std::to_string(p.min_exponent()) + " vs n-d1 = " + std::to_string(n - d1) +
            "; A[-d1] = " + detail::big_str(p.coefficient(-d1)) + " vs " + std::to_string(maxdeg_vertices) +
            " max-degree vertices");
  }

  // 2. Next term: A[1 - d1] counts the vertices of degree d1 - 1 (no larger
  //    subset can land on that index). Vacuous for edgeless graphs.
  {
    bool ok = true;
    std::string note = "vacuous: d1 = 0";
    if (d1 >= 1) {
      int count = 0;
      for (int v = 0; v < n; ++v)
        if (g.degree(v) == d1 - 1) ++count;
      ok = p.coefficient(1 - d1) == count;
      note = "A[1-d1] = " + detail::big_str(p.coefficient(1 - d1)) + " vs " + std::to_string(count) +
             " vertices of degree d1-1";
    }
    add("next-term-degree-count", ok, note);
  }

  // 3. The whole component around a minimum-degree vertex is an exact
  //    dn-alliance, so A[dn] > 0; the top exponent sits in [n+dn, n+d1].
  {
    const int dn = g.min_degree();
    bool ok = p.coefficient(dn) > 0 && n + dn <= p.max_exponent() && p.max_exponent() <= n + d1;
    add("min-degree-term-and-degree-bounds", ok,
        "A[dn] = " + detail::big_str(p.coefficient(dn)) + ", max exponent " +
            std::to_string(p.max_exponent()) + " vs bounds [" + std::to_string(n + dn) + ", " +
            std::to_string(n + d1) + "]");
  }

  // 4. Index d1 is reached exactly by whole d1-regular components, so A[d1]
  //    counts them; for a connected graph A[d1] = 1 is equivalent to
  //    regularity.
  {
    int regular_components = 0;
    for (const VertexSet& comp : components(g)) {
      Graph h = induced_subgraph(g, comp);
      if (h.min_degree() == d1 && h.max_degree() == d1) ++regular_components;
    }
    bool ok = p.coefficient(d1) == regular_components;
    if (is_connected(g)) ok = ok && ((p.coefficient(d1) == 1) == (g.min_degree() == d1));
    add("regular-component-count", ok,
        "A[d1] = " + detail::big_str(p.coefficient(d1)) + " vs " + std::to_string(regular_components) +
            " d1-regular components");
  }

  // 5. Parity: exponents all share one parity exactly when the degrees are
  //    all even or all odd (index n + k with k = 2*deg_S(v) - deg(v)).
  {
    bool all_even = true, all_odd = true;
    for (int v = 0; v < n; ++v) {
      if (g.degree(v) % 2 == 0) all_odd = false;
      else all_even = false;
    }
    bool expect = all_even || all_odd;
    bool got = parity_symmetric(p);
    add("parity-symmetry", got == expect,
        std::string("polynomial ") + (got ? "is" : "is not") + " parity-symmetric; degrees " +
            (expect ? "are" : "are not") + " single-parity");
  }

  // 6. Evaluation at one counts the connected induced subgraphs; the size
  //    breakdown must tie off against binomials.
  {
    BigInt direct = detail::direct_connected_count(g);
    SizeCounts sc = size_counts(g, forced);
    BigInt by_size = 0;
    for (const BigInt& v : sc.s) by_size += v;
    bool ok = connected_count(p) == direct && by_size == direct &&
              evaluate(p, BigRational(1)) == BigRational(direct) &&
              cut_set_count(p) == big_pow2(n) - 1 - direct;
    for (int j = 0; ok && j < n; ++j)
      ok = sc.c[static_cast<std::size_t>(j)] + sc.s[static_cast<std::size_t>(n - j)] == binomial(n, j);
    add("evaluation-at-one", ok,
        "A(1) = " + detail::big_str(connected_count(p)) + " vs " + detail::big_str(direct) +
            " connected induced subgraphs");
  }

  // 7. Cumulative counts: sum of coefficients at indices >= k must equal a
  //    direct census of connected defensive k-alliances.
  {
    bool ok = true;
    std::string note = "all k in [-d1, d1] agree";
    const std::uint64_t end = 2ULL << (n - 1);
    for (int k = -d1; ok && k <= d1; ++k) {
      BigInt direct = 0;
      for (std::uint64_t mask = 1; mask < end; ++mask) {
        if (!induced_is_connected_bits(g, mask)) continue;
        if (is_defensive_k_alliance(g, VertexSet(mask, n), k)) ++direct;
      }
      if (defensive_alliance_count(p, k) != direct) {
        ok = false;
        note = "k = " + std::to_string(k) + ": cumulative " + detail::big_str(defensive_alliance_count(p, k)) +
               " vs direct " + detail::big_str(direct);
      }
    }
    add("cumulative-alliance-counts", ok, note);
  }

  // 8. Exact index boundary: every subset is a defensive k_S-alliance and
  //    not a (k_S + 1)-alliance. Sampled deterministically.
  {
    std::mt19937_64 rng(detail::sample_seed(g));
    const std::uint64_t full = universe_mask(n);
    bool ok = true;
    std::string note = "200 sampled subsets sit on their index boundary";
    for (int i = 0; ok && i < 200; ++i) {
      std::uint64_t mask = rng() & full;
      if (!mask) mask = 1ULL << (rng() % static_cast<std::uint64_t>(n));
      VertexSet s(mask, n);
      int k = exact_alliance_index(g, s);
      if (!is_defensive_k_alliance(g, s, k) || is_defensive_k_alliance(g, s, k + 1)) {
        ok = false;
        note = "subset mask " + std::to_string(mask) + " breaks the boundary at k = " + std::to_string(k);
      }
    }
    add("exact-index-boundary", ok, note);
  }

  // 9. Disjoint-union composition against a brute-forced union with a
  //    triangle.
  {
    Graph c3 = cycle_graph(3);
    AlliancePolynomial lhs = alliance_polynomial(disjoint_union(g, c3), forced);
    AlliancePolynomial rhs = union_compose({p, alliance_polynomial(c3)});
    bool ok = lhs == rhs;
    add("disjoint-union-composition", ok,
        ok ? "matches the brute-forced union with a triangle"
           : "union with a triangle: engine " + to_text(lhs) + " vs composed " + to_text(rhs));
  }

  // 10 & 11. Joining leaves both parts' own terms intact: a one-sided subset
  //     keeps its exponent because each member gains the same outside degree
  //     as the order shift. So A(G v P_2) - A(G) - A(P_2) must be exactly
  //     the tally of two-sided subsets (always connected, one term each),
  //     which has non-negative coefficients and sums to (2^n - 1)(2^2 - 1)
  //     at x = 1.
  {
    Graph p2 = path_graph(2);
    Graph joined_g = graph_join(g, p2);
    AlliancePolynomial joined = alliance_polynomial(joined_g, forced);
    AlliancePolynomial p2_poly = alliance_polynomial(p2);
    std::map<int, BigInt> cross = joined.expanded();
    bool nonneg = true;
    for (const auto& [e, c] : p.expanded()) nonneg = nonneg && (cross[e] -= c) >= 0;
    for (const auto& [e, c] : p2_poly.expanded()) nonneg = nonneg && (cross[e] -= c) >= 0;
    for (auto it = cross.begin(); it != cross.end();)
      it = it->second == 0 ? cross.erase(it) : std::next(it);
    BigInt at_one = 0;
    for (const auto& [e, c] : cross) at_one += c;
    BigInt want = (big_pow2(n) - 1) * 3;
    add("join-evaluation", nonneg && at_one == want,
        "cross terms at x=1: " + detail::big_str(at_one) + " vs " + detail::big_str(want));

    std::map<int, BigInt> direct;
    const std::uint64_t side_a = universe_mask(n);
    const std::uint64_t side_b = universe_mask(n + 2) & ~side_a;
    for (std::uint64_t mask = 1; mask < (2ULL << (n + 1)); ++mask) {
      if (!(mask & side_a) || !(mask & side_b)) continue;
      ++direct[n + 2 + exact_alliance_index(joined_g, VertexSet(mask, n + 2))];
    }
    add("join-cross-terms", nonneg && cross == direct,
        nonneg && cross == direct
            ? "subtraction remainder matches the direct two-sided tally (degree " +
                  std::to_string(cross.rbegin()->first) + ")"
            : "subtraction remainder disagrees with the direct two-sided tally");
  }

  // 12. Proper subgraphs separate: deleting any single edge changes the
  //     polynomial and strictly lowers A(1) (the endpoints alone stop being
  //     connected); deleting any single vertex changes the polynomial too.
  {
    bool ok = true;
    std::string note = "every single-edge and single-vertex deletion changes the polynomial";
    for (auto [u, v] : edge_list(g)) {
      AlliancePolynomial q = alliance_polynomial(remove_edge(g, u, v), forced);
      if (q.expanded() == p.expanded() || !(connected_count(q) < connected_count(p))) {
        ok = false;
        note = "removing edge (" + std::to_string(u) + ", " + std::to_string(v) +
               ") failed to shrink the polynomial";
        break;
      }
    }
    for (int v = 0; ok && v < n && n >= 2; ++v) {
      if (alliance_polynomial(remove_vertex(g, v), forced).expanded() == p.expanded()) {
        ok = false;
        note = "removing vertex " + std::to_string(v) + " left the polynomial unchanged";
      }
    }
    add("subgraph-separation", ok, note);
  }

  // 13. Partitioned enumeration is deterministic: thread counts 1, 2 and 8
  //     must reproduce the identical polynomial, byte for byte.
  {
    ComputeOptions o1 = forced, o2 = forced, o8 = forced;
    o1.threads = 1;
    o2.threads = 2;
    o8.threads = 8;
    AlliancePolynomial a1 = alliance_polynomial(g, o1);
    AlliancePolynomial a2 = alliance_polynomial(g, o2);
    AlliancePolynomial a8 = alliance_polynomial(g, o8);
    bool ok = a1 == a2 && a2 == a8 && to_json(a1).dump() == to_json(a8).dump();
    add("thread-partition-determinism", ok,
        ok ? "thread counts 1, 2, 8 agree" : "thread counts disagree on the result");
  }

  return rep;
}

inline InvariantReport invariant_report(const Graph& g, const ComputeOptions& opt = {}) {
  return invariant_report_for(g, alliance_polynomial(g, opt), opt);
}

}  // namespace allipoly
