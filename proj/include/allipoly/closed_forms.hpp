#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "allipoly/bigint.hpp"
#include "allipoly/polynomial.hpp"

namespace allipoly {

// Closed-form alliance polynomials for the standard families. These never
// enumerate subsets, so they serve as the independent check against the
// brute-force engine (and scale to arbitrary order).

namespace detail {

// Build from an exponent -> coefficient map; zero entries are dropped and
// everything is re-keyed by alliance index (exponent - order).
inline AlliancePolynomial from_exponents(int order, const std::map<int, BigInt>& by_exp) {
  std::map<int, BigInt> coeffs;
  for (const auto& [e, c] : by_exp)
    if (c != 0) coeffs.emplace(e - order, c);
  return AlliancePolynomial(order, std::move(coeffs));
}

}  // namespace detail

// (n-2)x^(n-2) + 2x^(n-1) + ((n-2)(n+1)/2)x^n + x^(n+1), n >= 2.
inline AlliancePolynomial closed_form_path(int n) {
  if (n < 2) throw std::invalid_argument("closed_form_path: order must be >= 2");
  std::map<int, BigInt> e;
  e[n - 2] += n - 2;
  e[n - 1] += 2;
  e[n] += BigInt(n - 2) * (n + 1) / 2;
  e[n + 1] += 1;
  return detail::from_exponents(n, e);
}

// n x^(n-2) + n(n-2) x^n + x^(n+2), n >= 3.
inline AlliancePolynomial closed_form_cycle(int n) {
  if (n < 3) throw std::invalid_argument("closed_form_cycle: order must be >= 3");
  std::map<int, BigInt> e;
  e[n - 2] += n;
  e[n] += BigInt(n) * (n - 2);
  e[n + 2] += 1;
  return detail::from_exponents(n, e);
}

// ((x^2 + 1)^n - 1) / x = sum_{j=1..n} C(n, j) x^(2j-1), n >= 1.
inline AlliancePolynomial closed_form_complete(int n) {
  if (n < 1) throw std::invalid_argument("closed_form_complete: order must be >= 1");
  std::map<int, BigInt> e;
  for (int j = 1; j <= n; ++j) e[2 * j - 1] += binomial(n, j);
  return detail::from_exponents(n, e);
}

// [(x^2+1)^n - (x^4 - x^3)(x^2+1)^(n-2) + x^3 - 2x^2 - 1] / x, n >= 2.
inline AlliancePolynomial closed_form_complete_minus_edge(int n) {
  if (n < 2) throw std::invalid_argument("closed_form_complete_minus_edge: order must be >= 2");
  std::map<int, BigInt> e;
  for (int j = 0; j <= n; ++j) e[2 * j] += binomial(n, j);
  for (int j = 0; j <= n - 2; ++j) {
    e[2 * j + 4] -= binomial(n - 2, j);
    e[2 * j + 3] += binomial(n - 2, j);
  }
  e[3] += 1;
  e[2] -= 2;
  e[0] -= 1;
  if (e[0] != 0) throw std::logic_error("closed_form_complete_minus_edge: constant term must cancel");
  std::map<int, BigInt> shifted;  // divide by x
  for (const auto& [exp, c] : e)
    if (c != 0) shifted.emplace(exp - 1, c);
  return detail::from_exponents(n, shifted);
}

// n x^n + m x^m + sum_{i,j >= 1} C(n,i) C(m,j) x^(n + m + min(2i-n, 2j-m)).
inline AlliancePolynomial closed_form_complete_bipartite(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("closed_form_complete_bipartite: part sizes must be >= 1");
  std::map<int, BigInt> e;
  e[n] += n;
  e[m] += m;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= m; ++j)
      e[n + m + std::min(2 * i - n, 2 * j - m)] += binomial(n, i) * binomial(m, j);
  return detail::from_exponents(n + m, e);
}

// sum_{k=0..floor((n-1)/2)} C(n-1, k) x^(2k+1) + (n-1) x^(n-1)
//   + x^(n+1) sum_{k=ceil(n/2)..n-1} C(n-1, k), n >= 2.
inline AlliancePolynomial closed_form_star(int n) {
  if (n < 2) throw std::invalid_argument("closed_form_star: order must be >= 2");
  std::map<int, BigInt> e;
  for (int k = 0; 2 * k <= n - 1; ++k) e[2 * k + 1] += binomial(n - 1, k);
  e[n - 1] += n - 1;
  BigInt top = 0;
  for (int k = (n + 1) / 2; k <= n - 1; ++k) top += binomial(n - 1, k);
  e[n + 1] += top;
  return detail::from_exponents(n, e);
}

// n x^n: only the singletons are connected, each exact index 0.
inline AlliancePolynomial closed_form_empty(int n) {
  if (n < 1) throw std::invalid_argument("closed_form_empty: order must be >= 1");
  return AlliancePolynomial(n, {{0, BigInt(n)}});
}

// The join factor for m isolated vertices: sum_{r=0..m} C(m, r) x^min(2r, m+1),
// dense coefficient vector with the constant first.
inline std::vector<BigInt> tilde_a(int m) {
  if (m < 0) throw std::invalid_argument("tilde_a: m must be >= 0");
  std::vector<BigInt> out(static_cast<std::size_t>(m) + 2, 0);
  for (int r = 0; r <= m; ++r) out[static_cast<std::size_t>(std::min(2 * r, m + 1))] += binomial(m, r);
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

// A(K_n join E_m) = A(K_n) * tilde_a(m) + m x^m, on n + m vertices.
inline AlliancePolynomial join_complete_empty(int n, int m) {
  if (n < 1 || m < 1)
    throw std::invalid_argument("join_complete_empty: both orders must be >= 1");
  std::vector<BigInt> factor = tilde_a(m);
  std::map<int, BigInt> e;
  for (int j = 1; j <= n; ++j) {
    BigInt c = binomial(n, j);  // A(K_n) term at exponent 2j - 1
    for (std::size_t t = 0; t < factor.size(); ++t)
      if (factor[t] != 0) e[2 * j - 1 + static_cast<int>(t)] += c * factor[t];
  }
  e[m] += m;
  return detail::from_exponents(n + m, e);
}

// Alliance polynomial of a disjoint union: coefficient maps add pointwise in
// index space (a connected subgraph of the union lives in exactly one part,
// keeping its exact index; only the order shifts every exponent).
inline AlliancePolynomial union_compose(const std::vector<AlliancePolynomial>& parts) {
  if (parts.empty()) throw std::invalid_argument("union_compose: at least one part is required");
  int order = 0;
  std::map<int, BigInt> coeffs;
  for (const AlliancePolynomial& p : parts) {
    order += p.order();
    for (const auto& [k, c] : p.coefficients()) coeffs[k] += c;
  }
  return AlliancePolynomial(order, std::move(coeffs));
}

}  // namespace allipoly
