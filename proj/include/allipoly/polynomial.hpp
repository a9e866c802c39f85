#pragma once

#include <charconv>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "json.hpp"

#include "allipoly/bigint.hpp"
#include "allipoly/detail/parse.hpp"
#include "allipoly/errors.hpp"

namespace allipoly {

// The alliance polynomial of a graph of order n: sum over connected exact
// defensive k-alliances S of x^(n + k). Coefficients are keyed by the index k
// rather than the exponent, so the order travels with the value and two
// graphs of different order never compare equal even when their coefficient
// maps match.
class AlliancePolynomial {
 public:
  AlliancePolynomial(int order, std::map<int, BigInt> coeffs)
      : order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < 1) throw std::invalid_argument("alliance polynomial order must be >= 1");
    BigInt total = 0;
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
      if (it->second < 0)
        throw std::invalid_argument("alliance polynomial coefficients must be non-negative");
      if (it->second == 0) {
        it = coeffs_.erase(it);
        continue;
      }
      if (it->first <= -order_ || it->first >= order_)
        throw std::invalid_argument("alliance index " + std::to_string(it->first) +
                                    " outside (-n, n-1] for order " + std::to_string(order_));
      total += it->second;
      ++it;
    }
    if (coeffs_.empty())
      throw std::invalid_argument("alliance polynomial must have at least one term");
    if (total >= big_pow2(order_))
      throw std::invalid_argument("alliance polynomial counts exceed the subset total");
  }

  int order() const { return order_; }

  // k -> count of connected exact defensive k-alliances; every count > 0.
  const std::map<int, BigInt>& coefficients() const { return coeffs_; }

  BigInt coefficient(int k) const {
    auto it = coeffs_.find(k);
    return it == coeffs_.end() ? BigInt(0) : it->second;
  }

  int min_exponent() const { return order_ + coeffs_.begin()->first; }
  int max_exponent() const { return order_ + coeffs_.rbegin()->first; }

  // Exponent -> coefficient; the representation actually written as x-powers.
  std::map<int, BigInt> expanded() const {
    std::map<int, BigInt> out;
    for (const auto& [k, c] : coeffs_) out.emplace(order_ + k, c);
    return out;
  }

  bool operator==(const AlliancePolynomial&) const = default;

 private:
  int order_;
  std::map<int, BigInt> coeffs_;
};

inline BigRational evaluate(const AlliancePolynomial& p, const BigRational& x) {
  BigRational acc = 0;
  int e = 0;
  BigRational pw = 1;
  for (const auto& [exp, c] : p.expanded()) {
    for (; e < exp; ++e) pw *= x;
    acc += BigRational(c) * pw;
  }
  return acc;
}

// A(G; 1): the number of connected induced subgraphs (nonempty).
inline BigInt connected_count(const AlliancePolynomial& p) {
  BigInt total = 0;
  for (const auto& [k, c] : p.coefficients()) total += c;
  return total;
}

// Subsets whose induced subgraph is disconnected or empty: 2^n - 1 - A(G; 1).
inline BigInt cut_set_count(const AlliancePolynomial& p) {
  return big_pow2(p.order()) - 1 - connected_count(p);
}

// Connected defensive k-alliances (not only exact ones): every exact
// i-alliance with i >= k qualifies.
inline BigInt defensive_alliance_count(const AlliancePolynomial& p, int k) {
  BigInt total = 0;
  for (const auto& [i, c] : p.coefficients())
    if (i >= k) total += c;
  return total;
}

// Unimodality of the nonzero coefficients in exponent order: they rise (not
// necessarily strictly) and then fall.
inline bool is_unimodal(const AlliancePolynomial& p) {
  bool falling = false;
  const BigInt* prev = nullptr;
  for (const auto& [k, c] : p.coefficients()) {
    if (prev) {
      if (falling && c > *prev) return false;
      if (c < *prev) falling = true;
    }
    prev = &c;
  }
  return true;
}

// Whether all exponents carrying nonzero coefficients share one parity.
inline bool parity_symmetric(const AlliancePolynomial& p) {
  int first = (p.order() + p.coefficients().begin()->first) & 1;
  for (const auto& [k, c] : p.coefficients())
    if (((p.order() + k) & 1) != first) return false;
  return true;
}

// Text form, ascending exponents: "6x^3 + 33x^5 + 15x^7 + x^9"; coefficient 1
// is dropped, exponent 1 renders as "x", exponent 0 as the bare coefficient.
inline std::string to_text(const AlliancePolynomial& p) {
  std::string out;
  for (const auto& [exp, c] : p.expanded()) {
    if (!out.empty()) out += " + ";
    if (c != 1 || exp == 0) out += c.str();
    if (exp >= 1) out += "x";
    if (exp >= 2) out += "^" + std::to_string(exp);
  }
  return out;
}

namespace detail {

inline nlohmann::json count_to_json(const BigInt& c) {
  static const BigInt kMaxU64 = BigInt(std::numeric_limits<std::uint64_t>::max());
  if (c <= kMaxU64) return nlohmann::json(c.convert_to<std::uint64_t>());
  return nlohmann::json(c.str());
}

inline BigInt count_from_json(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("polynomial count '" + s + "' is not a non-negative integer");
    return BigInt(s);
  }
  throw parse_error("polynomial count must be a non-negative integer or decimal string");
}

}  // namespace detail

// {"n": order, "coeffs": {"k": count, ...}} with signed decimal keys; counts
// are numbers when they fit 64 bits, decimal strings beyond that.
inline nlohmann::json to_json(const AlliancePolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [k, c] : p.coefficients()) coeffs[std::to_string(k)] = detail::count_to_json(c);
  return nlohmann::json{{"n", p.order()}, {"coeffs", coeffs}};
}

inline AlliancePolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("coeffs") ||
      !j["n"].is_number_integer() || !j["coeffs"].is_object())
    throw parse_error("polynomial JSON must be {\"n\": order, \"coeffs\": {...}}");
  std::map<int, BigInt> coeffs;
  for (const auto& [key, val] : j["coeffs"].items()) {
    int k = 0;
    if (!detail::parse_int(key, k))
      throw parse_error("polynomial coefficient key '" + key + "' is not an integer");
    coeffs[k] = detail::count_from_json(val);
  }
  try {
    return AlliancePolynomial(j["n"].get<int>(), std::move(coeffs));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("polynomial JSON invalid: ") + e.what());
  }
}

}  // namespace allipoly
