#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "allipoly/bigint.hpp"
#include "allipoly/errors.hpp"
#include "allipoly/graph.hpp"
#include "allipoly/polynomial.hpp"

namespace allipoly {

// Exhaustive subset enumeration is Theta(m * 2^n); beyond this order the
// library refuses unless forced. 2^26 subsets is roughly a minute of work.
inline constexpr int kSubsetEnumerationGuard = 26;

struct ComputeOptions {
  unsigned threads = 1;
  bool force = false;  // lift the order guard on enumeration routines
};

// S is a defensive k-alliance when every member has at least k more
// neighbours inside S than outside: deg_S(v) >= deg_{V\S}(v) + k.
inline bool is_defensive_k_alliance(const Graph& g, const VertexSet& s, int k) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  if (s.empty()) throw std::invalid_argument("the empty set is not an alliance");
  for (std::uint64_t b = s.bits(); b; b &= b - 1) {
    int v = std::countr_zero(b);
    int inside = std::popcount(g.neighbor_bits(v) & s.bits());
    if (2 * inside - g.degree(v) < k) return false;
  }
  return true;
}

// The largest k for which S is a defensive k-alliance:
// min over members of deg_S(v) - deg_{V\S}(v). Always lies in [-d1, d1].
inline int exact_alliance_index(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("vertex set universe does not match graph order");
  if (s.empty()) throw std::invalid_argument("the empty set has no alliance index");
  int k = kMaxOrder;
  for (std::uint64_t b = s.bits(); b; b &= b - 1) {
    int v = std::countr_zero(b);
    int inside = std::popcount(g.neighbor_bits(v) & s.bits());
    k = std::min(k, 2 * inside - g.degree(v));
  }
  return k;
}

namespace detail {

inline void check_enumeration_guard(const Graph& g, bool force, const char* who) {
  if (g.order() < 1) throw std::invalid_argument(std::string(who) + ": graph must have at least one vertex");
  if (g.order() > 62)  // subset cursor arithmetic needs headroom in 64 bits
    throw guard_error(std::string(who) + ": order " + std::to_string(g.order()) +
                      " exceeds the enumeration ceiling of 62");
  if (g.order() > kSubsetEnumerationGuard && !force)
    throw guard_error(std::string(who) + ": order " + std::to_string(g.order()) + " exceeds the guard of " +
                      std::to_string(kSubsetEnumerationGuard) + " (2^n subsets); pass force to override");
}

// Tallies exact alliance indices over the subset range [lo, hi) into
// counts[k + d1]. Local adjacency/degree copies keep the hot loop in cache.
inline void tally_subset_range(const std::vector<std::uint64_t>& adj, const std::vector<int>& deg,
                               int d1, std::uint64_t lo, std::uint64_t hi,
                               std::vector<std::uint64_t>& counts) {
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    // Connectivity first: grow from the lowest member by mask expansion.
    std::uint64_t seed = mask & (~mask + 1);
    std::uint64_t reached = seed;
    std::uint64_t frontier = seed;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1)
        next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & mask & ~reached;
      reached |= frontier;
    }
    if (reached != mask) continue;
    int k = kMaxOrder;
    for (std::uint64_t s = mask; s; s &= s - 1) {
      int v = std::countr_zero(s);
      int d = 2 * std::popcount(adj[static_cast<std::size_t>(v)] & mask) - deg[static_cast<std::size_t>(v)];
      if (d < k) k = d;
    }
    ++counts[static_cast<std::size_t>(k + d1)];
  }
}

}  // namespace detail

// Alliance polynomial by exhaustive enumeration of the 2^n - 1 nonempty
// subsets. Deterministic for every thread count: workers tally into private
// arrays that are merged pointwise, so no result depends on scheduling.
inline AlliancePolynomial alliance_polynomial(const Graph& g, const ComputeOptions& opt = {}) {
  detail::check_enumeration_guard(g, opt.force, "alliance_polynomial");
  const int n = g.order();
  const int d1 = g.max_degree();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    adj[static_cast<std::size_t>(v)] = g.neighbor_bits(v);
    deg[static_cast<std::size_t>(v)] = g.degree(v);
  }
  const std::uint64_t total = 2ULL << (n - 1);  // 2^n; guard caps n at 62
  const unsigned threads = std::max(1u, opt.threads);
  const std::size_t bins = static_cast<std::size_t>(2 * d1 + 1);
  std::vector<std::vector<std::uint64_t>> tallies(threads, std::vector<std::uint64_t>(bins, 0));

  if (threads == 1) {
    detail::tally_subset_range(adj, deg, d1, 1, total, tallies[0]);
  } else {
    // Dynamic chunking: an atomic cursor hands out equal slices. Work per
    // subset is uneven (disconnected ones exit early), so static splits
    // would idle workers.
    const std::uint64_t chunk = std::max<std::uint64_t>(4096, total / (threads * 64u));
    std::atomic<std::uint64_t> cursor{1};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (;;) {
          std::uint64_t lo = cursor.fetch_add(chunk);
          if (lo >= total) return;
          std::uint64_t hi = std::min(total, lo + chunk);
          detail::tally_subset_range(adj, deg, d1, lo, hi, tallies[t]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  std::map<int, BigInt> coeffs;
  for (std::size_t b = 0; b < bins; ++b) {
    std::uint64_t c = 0;
    for (unsigned t = 0; t < threads; ++t) c += tallies[t][b];
    if (c) coeffs.emplace(static_cast<int>(b) - d1, BigInt(c));
  }
  return AlliancePolynomial(n, std::move(coeffs));
}

// Connected-subgraph counts by size, plus the complementary cut-set counts.
//   s[r] (1 <= r <= n): connected induced subgraphs of order r; s[0] = 0.
//   c[j] (0 <= j < n):  vertex sets of size j whose removal leaves the rest
//                       disconnected or empty, i.e. c[j] = C(n, j) - s[n - j].
struct SizeCounts {
  std::vector<BigInt> s;
  std::vector<BigInt> c;
};

inline SizeCounts size_counts(const Graph& g, const ComputeOptions& opt = {}) {
  detail::check_enumeration_guard(g, opt.force, "size_counts");
  const int n = g.order();
  std::vector<BigInt> s(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t total = 2ULL << (n - 1);
  for (std::uint64_t mask = 1; mask < total; ++mask)
    if (induced_is_connected_bits(g, mask)) ++s[static_cast<std::size_t>(std::popcount(mask))];
  std::vector<BigInt> c(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < n; ++j) c[static_cast<std::size_t>(j)] = binomial(n, j) - s[static_cast<std::size_t>(n - j)];
  return SizeCounts{std::move(s), std::move(c)};
}

}  // namespace allipoly
