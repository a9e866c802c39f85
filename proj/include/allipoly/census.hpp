#pragma once

#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "allipoly/alliance.hpp"
#include "allipoly/canonical.hpp"
#include "allipoly/errors.hpp"
#include "allipoly/families.hpp"
#include "allipoly/graph.hpp"
#include "allipoly/graph_io.hpp"
#include "allipoly/polynomial.hpp"

namespace allipoly {

// Catalog of every isomorphism class up to a small order, with alliance
// polynomials, for collision hunting and the family-uniqueness checks.

struct CatalogEntry {
  Graph graph;                    // canonical representative
  std::string canonical;          // canonical_form bytes
  AlliancePolynomial polynomial;
  std::vector<int> degree_sequence;
  bool connected;
};

// Entries ordered by (order, canonical labelled word); every class of every
// order in [1, max_n] appears exactly once.
inline std::vector<CatalogEntry> build_catalog(int max_n, const ComputeOptions& opt = {}) {
  if (max_n < 1) throw std::invalid_argument("build_catalog: max order must be >= 1");
  if (max_n > kEnumerationForceCeiling)
    throw guard_error("build_catalog: max order " + std::to_string(max_n) + " exceeds the ceiling of " +
                      std::to_string(kEnumerationForceCeiling));
  if (max_n > kEnumerationGuard && !opt.force)
    throw guard_error("build_catalog: max order " + std::to_string(max_n) + " exceeds the guard of " +
                      std::to_string(kEnumerationGuard) + "; pass force to override");
  std::vector<CatalogEntry> out;
  for (int n = 1; n <= max_n; ++n) {
    for_each_nonisomorphic(
        n,
        [&out, &opt](const Graph& g) {
          out.push_back(CatalogEntry{g, canonical_form(g, opt.force), alliance_polynomial(g, opt),
                                     g.degree_sequence(), is_connected(g)});
        },
        opt.force);
  }
  return out;
}

// Non-isomorphic graphs sharing one alliance polynomial (exponents included,
// so entries of different order can never group together).
struct CollisionGroup {
  std::string polynomial_text;             // the shared polynomial, rendered
  std::vector<std::string> canonical_forms;
  std::vector<std::string> graph6_forms;   // same order as canonical_forms
};

inline std::vector<CollisionGroup> find_collisions(const std::vector<CatalogEntry>& catalog) {
  std::map<std::string, std::vector<const CatalogEntry*>> by_poly;
  for (const CatalogEntry& e : catalog) by_poly[to_text(e.polynomial)].push_back(&e);
  std::vector<CollisionGroup> out;
  for (const auto& [text, members] : by_poly) {
    if (members.size() < 2) continue;
    CollisionGroup grp{text, {}, {}};
    for (const CatalogEntry* e : members) {
      grp.canonical_forms.push_back(e->canonical);
      grp.graph6_forms.push_back(to_graph6(e->graph));
    }
    out.push_back(std::move(grp));
  }
  return out;
}

// One family-uniqueness verdict: within the catalog, only the family member
// itself carries the family's polynomial.
struct CharacterizationItem {
  std::string family;  // e.g. "P_5", "K_4/e", "E_3"
  bool pass;
  std::string detail;
};

struct CharacterizationReport {
  std::vector<CharacterizationItem> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return true;
  }
};

namespace detail {

inline void check_family_uniqueness(const std::vector<CatalogEntry>& catalog, const std::string& label,
                                    const Graph& member, CharacterizationReport& rep) {
  AlliancePolynomial p = alliance_polynomial(member);
  std::string text = to_text(p);
  std::string canon = canonical_form(member, true);
  bool found_self = false;
  for (const CatalogEntry& e : catalog) {
    if (to_text(e.polynomial) != text) continue;
    if (e.canonical == canon) {
      found_self = true;
      continue;
    }
    rep.items.push_back({label, false,
                         "polynomial " + text + " shared by a non-isomorphic graph (graph6 " +
                             to_graph6(e.graph) + ")"});
    return;
  }
  if (!found_self) {
    rep.items.push_back({label, false, "family member missing from the catalog"});
    return;
  }
  rep.items.push_back({label, true, "unique holder of " + text});
}

}  // namespace detail

// For every family instance with order inside the catalog: paths, cycles,
// complete graphs, stars, complete-minus-edge graphs and edgeless graphs are
// each the only graph of their order with their alliance polynomial.
inline CharacterizationReport verify_characterizations(const std::vector<CatalogEntry>& catalog) {
  int max_n = 0;
  for (const CatalogEntry& e : catalog) max_n = std::max(max_n, e.graph.order());
  CharacterizationReport rep;
  for (int t = 2; t <= max_n; ++t)
    detail::check_family_uniqueness(catalog, "P_" + std::to_string(t), path_graph(t), rep);
  for (int t = 3; t <= max_n; ++t)
    detail::check_family_uniqueness(catalog, "C_" + std::to_string(t), cycle_graph(t), rep);
  for (int t = 1; t <= max_n; ++t)
    detail::check_family_uniqueness(catalog, "K_" + std::to_string(t), complete_graph(t), rep);
  for (int t = 2; t <= max_n; ++t)
    detail::check_family_uniqueness(catalog, "S_" + std::to_string(t), star_graph(t), rep);
  for (int t = 2; t <= max_n; ++t)
    detail::check_family_uniqueness(catalog, "K_" + std::to_string(t) + "/e",
                                    complete_minus_edge_graph(t), rep);
  for (int t = 1; t <= max_n; ++t) {
    detail::check_family_uniqueness(catalog, "E_" + std::to_string(t), empty_graph(t), rep);
    // The edgeless polynomial is pinned in closed form as well: t x^t.
    AlliancePolynomial expect(t, {{0, BigInt(t)}});
    if (alliance_polynomial(empty_graph(t)) != expect)
      rep.items.push_back({"E_" + std::to_string(t), false, "polynomial is not t x^t"});
  }
  return rep;
}

// JSON-lines persistence: one object per line, keys g6, n, poly, degseq,
// connected. Loading re-derives the graph-dependent fields and rejects lines
// whose stored values disagree; entries round-trip exactly.
inline void save_catalog(const std::vector<CatalogEntry>& catalog, std::ostream& out) {
  for (const CatalogEntry& e : catalog) {
    nlohmann::json line{{"g6", to_graph6(e.graph)},
                        {"n", e.graph.order()},
                        {"poly", to_json(e.polynomial)["coeffs"]},
                        {"degseq", e.degree_sequence},
                        {"connected", e.connected}};
    out << line.dump() << "\n";
  }
}

inline std::vector<CatalogEntry> load_catalog(std::istream& in) {
  std::vector<CatalogEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string where = "catalog line " + std::to_string(lineno) + ": ";
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) throw parse_error(where + "not valid JSON");
    if (!j.is_object() || !j.contains("g6") || !j.contains("n") || !j.contains("poly") ||
        !j.contains("degseq") || !j.contains("connected"))
      throw parse_error(where + "missing one of the keys g6/n/poly/degseq/connected");
    Graph g = [&] {
      try {
        return from_graph6(j["g6"].get<std::string>());
      } catch (const parse_error& e) {
        throw parse_error(where + e.what());
      }
    }();
    if (!j["n"].is_number_integer() || j["n"].get<int>() != g.order())
      throw parse_error(where + "order does not match the graph6 string");
    AlliancePolynomial poly = [&] {
      try {
        return polynomial_from_json(nlohmann::json{{"n", g.order()}, {"coeffs", j["poly"]}});
      } catch (const parse_error& e) {
        throw parse_error(where + e.what());
      }
    }();
    if (!j["degseq"].is_array() || j["degseq"].get<std::vector<int>>() != g.degree_sequence())
      throw parse_error(where + "degree sequence does not match the graph");
    if (!j["connected"].is_boolean() || j["connected"].get<bool>() != is_connected(g))
      throw parse_error(where + "connectivity flag does not match the graph");
    out.push_back(CatalogEntry{g, canonical_form(g, true), std::move(poly), g.degree_sequence(),
                               is_connected(g)});
  }
  return out;
}

}  // namespace allipoly
