#pragma once

#include <cctype>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "allipoly/detail/parse.hpp"
#include "allipoly/errors.hpp"
#include "allipoly/graph.hpp"

namespace allipoly {

// Edge-list text: '#' starts a comment line, blank lines are skipped, the
// first significant line is the order, and every later significant line holds
// two 0-based endpoints.
inline Graph from_edge_list_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_order = false;
  int order = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view sv(line);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
    while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
    if (sv.empty() || sv.front() == '#') continue;
    std::istringstream ls{std::string(sv)};
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    std::string where = "line " + std::to_string(lineno) + ": ";
    if (!have_order) {
      if (toks.size() != 1 || !detail::parse_int(toks[0], order))
        throw parse_error(where + "expected the graph order as a single integer");
      if (order < 0 || order > kMaxOrder)
        throw parse_error(where + "order " + toks[0] + " outside supported range [0, 64]");
      have_order = true;
      continue;
    }
    int u = 0, v = 0;
    if (toks.size() != 2 || !detail::parse_int(toks[0], u) || !detail::parse_int(toks[1], v))
      throw parse_error(where + "expected an edge as two vertex indices");
    if (u < 0 || u >= order || v < 0 || v >= order)
      throw parse_error(where + "edge endpoint outside vertex range [0, " +
                        std::to_string(order) + ")");
    if (u == v) throw parse_error(where + "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (!have_order) throw parse_error("edge-list input holds no order line");
  return Graph(order, edges);
}

inline std::string to_edge_list_text(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : edge_list(g)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

// graph6: one printable line, order <= 62 (the single-byte header form).
// Upper-triangle bits in column-major order, packed into 6-bit characters
// offset by 63, zero-padded.
inline Graph from_graph6(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  if (!text.empty() && text.front() == '>') {  // optional ">>graph6<<" prefix
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) != kHeader)
      throw parse_error("graph6: malformed optional header");
    text.remove_prefix(kHeader.size());
  }
  if (text.empty()) throw parse_error("graph6: empty input");
  for (char c : text)
    if (c < 63 || c > 126)
      throw parse_error("graph6: character '" + std::string(1, c) + "' outside printable range");
  int n = text.front() - 63;
  if (n == 63)
    throw parse_error("graph6: multi-byte order header (order > 62) is not supported");
  text.remove_prefix(1);
  int slots = n * (n - 1) / 2;
  int need = (slots + 5) / 6;
  if (static_cast<int>(text.size()) < need) throw parse_error("graph6: truncated bit stream");
  if (static_cast<int>(text.size()) > need) throw parse_error("graph6: trailing characters after bit stream");
  std::vector<std::pair<int, int>> edges;
  int t = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++t) {
      int bit = (text[static_cast<std::size_t>(t / 6)] - 63) >> (5 - t % 6) & 1;
      if (bit) edges.emplace_back(i, j);
    }
  }
  // Padding bits beyond the triangle must be zero.
  for (int p = slots; p < need * 6; ++p)
    if ((text[static_cast<std::size_t>(p / 6)] - 63) >> (5 - p % 6) & 1)
      throw parse_error("graph6: nonzero padding bits");
  return Graph(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  int n = g.order();
  if (n > 62)
    throw std::invalid_argument("graph6 output supports order <= 62 only");
  int slots = n * (n - 1) / 2;
  std::string out(1 + static_cast<std::size_t>((slots + 5) / 6), char(63));
  out[0] = static_cast<char>(63 + n);
  int t = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++t)
      if (g.adjacent(i, j)) out[static_cast<std::size_t>(1 + t / 6)] += char(1 << (5 - t % 6));
  return out;
}

}  // namespace allipoly
