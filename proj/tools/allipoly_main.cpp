// allipoly command-line driver: compute, family, verify, census, compare.
//
// Exit codes: 0 success / all checks pass, 1 input error or failed check,
// 2 enumeration guard exceeded.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "allipoly/allipoly.hpp"
#include "json.hpp"

namespace {

using namespace allipoly;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
  std::string text = read_file(path);
  if (format == "graph6") {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (!line.empty()) return from_graph6(line);
    }
    throw parse_error(path + ": no graph6 line found");
  }
  return from_edge_list_text(text);
}

// Family shorthand for positional graph arguments: P_6, C5, K_{3,3}, K_4/e,
// S_4, E_3 (braces, underscores and spaces are decorative). A path that names
// an existing file always wins over the shorthand reading.
Graph graph_from_shorthand(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (c != '{' && c != '}' && c != '_' && c != ' ') s += c;
  if (s.size() < 2) throw parse_error("unrecognized graph argument: " + raw);
  const char kind = s[0];
  std::string rest = s.substr(1);
  auto number = [&](const std::string& t) {
    int v;
    if (!detail::parse_int(t, v)) throw parse_error("unrecognized graph argument: " + raw);
    return v;
  };
  if (kind == 'K') {
    if (rest.size() > 2 && (rest.substr(rest.size() - 2) == "/e" || rest.substr(rest.size() - 2) == "-e"))
      return complete_minus_edge_graph(number(rest.substr(0, rest.size() - 2)));
    auto comma = rest.find(',');
    if (comma != std::string::npos)
      return complete_bipartite_graph(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
    return complete_graph(number(rest));
  }
  if (kind == 'P') return path_graph(number(rest));
  if (kind == 'C') return cycle_graph(number(rest));
  if (kind == 'S') return star_graph(number(rest));
  if (kind == 'E') return empty_graph(number(rest));
  throw parse_error("unrecognized graph argument: " + raw);
}

Graph load_graph_argument(const std::string& arg, const std::string& format) {
  if (std::filesystem::exists(arg)) return load_graph(arg, format);
  return graph_from_shorthand(arg);
}

BigRational parse_rational(const std::string& text) {
  auto part = [&](const std::string& t) {
    int v;
    if (!detail::parse_int(t, v)) throw parse_error("bad evaluation point: " + text);
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(part(text));
  int num = part(text.substr(0, slash));
  int den = part(text.substr(slash + 1));
  if (den == 0) throw parse_error("evaluation point denominator is zero");
  return BigRational(num, den);
}

std::string rational_text(const BigRational& r) {
  BigInt num = boost::multiprecision::numerator(r);
  BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

struct OutputOptions {
  bool json = false;
  std::string eval;  // empty = no evaluation requested
};

void print_polynomial(const AlliancePolynomial& p, const OutputOptions& out) {
  if (out.json) {
    nlohmann::json j = to_json(p);
    if (!out.eval.empty()) j["eval"] = rational_text(evaluate(p, parse_rational(out.eval)));
    std::cout << j.dump() << '\n';
    return;
  }
  std::cout << to_text(p) << '\n';
  if (!out.eval.empty()) std::cout << rational_text(evaluate(p, parse_rational(out.eval))) << '\n';
}

int cmd_compute(const std::string& input, const std::string& format, const ComputeOptions& opt,
                const OutputOptions& out) {
  Graph g = load_graph(input, format);
  print_polynomial(alliance_polynomial(g, opt), out);
  return 0;
}

struct FamilySpec {
  bool needs_m = false;
  int min_n = 1;
  AlliancePolynomial (*closed)(int, int);
  Graph (*build)(int, int);
};

const std::map<std::string, FamilySpec>& family_table() {
  static const std::map<std::string, FamilySpec> table = {
      {"path",
       {false, 1, [](int n, int) { return closed_form_path(n); },
        [](int n, int) { return path_graph(n); }}},
      {"cycle",
       {false, 3, [](int n, int) { return closed_form_cycle(n); },
        [](int n, int) { return cycle_graph(n); }}},
      {"complete",
       {false, 1, [](int n, int) { return closed_form_complete(n); },
        [](int n, int) { return complete_graph(n); }}},
      {"complete-minus-edge",
       {false, 2, [](int n, int) { return closed_form_complete_minus_edge(n); },
        [](int n, int) { return complete_minus_edge_graph(n); }}},
      {"complete-bipartite",
       {true, 1, [](int n, int m) { return closed_form_complete_bipartite(n, m); },
        [](int n, int m) { return complete_bipartite_graph(n, m); }}},
      {"star",
       {false, 2, [](int n, int) { return closed_form_star(n); },
        [](int n, int) { return star_graph(n); }}},
      {"empty",
       {false, 1, [](int n, int) { return closed_form_empty(n); },
        [](int n, int) { return empty_graph(n); }}},
  };
  return table;
}

int cmd_family(const std::string& name, int n, std::optional<int> m, bool brute,
               const ComputeOptions& opt, const OutputOptions& out) {
  auto it = family_table().find(name);
  if (it == family_table().end()) throw parse_error("unknown family: " + name);
  const FamilySpec& spec = it->second;
  if (spec.needs_m && !m) throw parse_error("family " + name + " needs --m");
  if (!spec.needs_m && m) throw parse_error("family " + name + " does not take --m");
  AlliancePolynomial p = spec.closed(n, m.value_or(0));
  print_polynomial(p, out);
  if (!brute) return 0;
  AlliancePolynomial q = alliance_polynomial(spec.build(n, m.value_or(0)), opt);
  bool match = p == q;
  std::cout << (match ? "MATCH" : "MISMATCH") << '\n';
  if (!match) std::cout << "enumerated: " << to_text(q) << '\n';
  return match ? 0 : 1;
}

int cmd_verify(const std::string& input, const std::string& format, bool corrupt,
               const ComputeOptions& opt, bool json) {
  Graph g = load_graph(input, format);
  AlliancePolynomial p = alliance_polynomial(g, opt);
  if (corrupt) {
    // Test hook: damage the lowest coefficient so the report must fail.
    std::map<int, BigInt> coeffs = p.coefficients();
    coeffs.begin()->second -= 1;
    p = AlliancePolynomial(p.order(), std::move(coeffs));
  }
  InvariantReport report = invariant_report_for(g, p, opt);
  if (json) {
    nlohmann::json j = to_json(p);
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["all_pass"] = report.all_pass();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << "A = " << to_text(p) << '\n';
    int passed = 0;
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name << " — " << c.detail << '\n';
      passed += c.pass;
    }
    std::cout << passed << "/" << report.checks.size() << " checks passed\n";
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_census(int max_n, const std::string& out_path, const ComputeOptions& opt) {
  std::vector<CatalogEntry> catalog = build_catalog(max_n, opt);
  std::map<int, int> per_order;
  for (const auto& e : catalog) ++per_order[e.graph.order()];
  for (const auto& [n, count] : per_order)
    std::cout << "n=" << n << ": " << count << (count == 1 ? " class" : " classes") << '\n';

  std::vector<CollisionGroup> collisions = find_collisions(catalog);
  std::cout << "collision groups: " << collisions.size() << '\n';
  for (const auto& grp : collisions) {
    std::cout << "  " << grp.polynomial_text << " shared by";
    for (const auto& g6 : grp.graph6_forms) std::cout << ' ' << g6;
    std::cout << '\n';
  }

  CharacterizationReport report = verify_characterizations(catalog);
  for (const auto& item : report.items)
    std::cout << (item.pass ? "PASS" : "FAIL") << "  " << item.family << " — " << item.detail << '\n';

  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    save_catalog(catalog, out);
    if (!out) throw std::runtime_error("write failed: " + out_path);
    std::cout << "wrote " << catalog.size() << " entries to " << out_path << '\n';
  }
  return report.all_pass() ? 0 : 1;
}

int cmd_compare_suite() {
  DistinguishingReport report = distinguishing_suite();
  for (const auto& item : report.items) {
    std::cout << "(" << item.item << ") " << item.classical << " on \"" << item.fixture_a
              << "\" vs \"" << item.fixture_b << "\": classical " << item.classical_status
              << ", alliance " << item.alliance_status << " — " << (item.pass ? "PASS" : "FAIL")
              << '\n';
  }
  std::cout << (report.all_pass() ? "all items pass" : "some items FAIL") << '\n';
  return report.all_pass() ? 0 : 1;
}

int cmd_compare(const std::vector<std::string>& graphs, const std::string& format,
                const std::string& polys, const ComputeOptions& opt) {
  if (graphs.size() != 2) throw parse_error("compare needs exactly two graph arguments");
  Graph a = load_graph_argument(graphs[0], format);
  Graph b = load_graph_argument(graphs[1], format);

  std::vector<std::string> names;
  std::string current;
  std::istringstream list(polys);
  while (std::getline(list, current, ','))
    if (!current.empty()) names.push_back(current);
  if (names.empty()) throw parse_error("no polynomials requested");

  for (const auto& name : names) {
    bool equal;
    if (name == "alliance")
      equal = alliance_polynomial(a, opt) == alliance_polynomial(b, opt);
    else if (name == "matching")
      equal = matching_counts(a) == matching_counts(b);
    else if (name == "independence")
      equal = independence_counts(a) == independence_counts(b);
    else if (name == "domination")
      equal = domination_counts(a) == domination_counts(b);
    else if (name == "characteristic")
      equal = characteristic_polynomial(a) == characteristic_polynomial(b);
    else if (name == "tutte")
      equal = tutte_polynomial(a) == tutte_polynomial(b);
    else if (name == "subgraph-component")
      equal = subgraph_component_polynomial(a) == subgraph_component_polynomial(b);
    else
      throw parse_error("unknown polynomial: " + name);
    std::cout << name << ": " << (equal ? "EQUAL" : "UNEQUAL") << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alliance polynomial toolkit"};
  app.require_subcommand(1);

  std::string input, format = "edgelist", eval_point, family_name, out_path, polys = "alliance";
  std::vector<std::string> graph_args;
  int max_n = 0, family_n = 0;
  std::optional<int> family_m;
  unsigned threads = 1;
  bool force = false, json = false, brute = false, corrupt = false, suite = false;

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--input", input, "graph file")->required();
      sub->add_option("--format", format, "input format")
          ->check(CLI::IsMember({"edgelist", "graph6"}));
    }
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--force", force, "override the subset-enumeration guard");
  };

  CLI::App* compute = app.add_subcommand("compute", "alliance polynomial of a graph file");
  add_common(compute, true);
  compute->add_flag("--json", json, "JSON output");
  compute->add_option("--eval", eval_point, "also evaluate at a rational point (p/q or integer)");

  CLI::App* family = app.add_subcommand("family", "closed-form polynomial of a named family");
  family->add_option("name", family_name, "family name")->required();
  family->add_option("--n", family_n, "order parameter")->required();
  family->add_option("--m", family_m, "second part size (complete-bipartite)");
  family->add_flag("--brute-force", brute, "also enumerate and report MATCH/MISMATCH");
  family->add_flag("--json", json, "JSON output");
  family->add_option("--eval", eval_point, "also evaluate at a rational point (p/q or integer)");
  add_common(family, false);

  CLI::App* verify = app.add_subcommand("verify", "run the structural invariant checks");
  add_common(verify, true);
  verify->add_flag("--json", json, "JSON output");
  verify->add_flag("--corrupt", corrupt, "")->group("");

  CLI::App* census = app.add_subcommand("census", "catalog all isomorphism classes up to --max-n");
  census->add_option("--max-n", max_n, "largest order to include")->required();
  census->add_option("--out", out_path, "write the catalog (JSON lines) here");
  add_common(census, false);

  CLI::App* compare = app.add_subcommand("compare", "compare two graphs under several polynomials");
  compare->add_option("graphs", graph_args, "two graphs: file paths or shorthands like P_4, K_{1,3}");
  compare->add_option("--polys", polys, "comma-separated list of polynomials");
  compare->add_option("--format", format, "format for file arguments")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  compare->add_flag("--suite", suite, "run the built-in distinguishing fixtures");
  add_common(compare, false);

  int rc = 0;
  auto opt = [&] { return ComputeOptions{threads, force}; };
  compute->callback([&] { rc = cmd_compute(input, format, opt(), {json, eval_point}); });
  family->callback(
      [&] { rc = cmd_family(family_name, family_n, family_m, brute, opt(), {json, eval_point}); });
  verify->callback([&] { rc = cmd_verify(input, format, corrupt, opt(), json); });
  census->callback([&] { rc = cmd_census(max_n, out_path, opt()); });
  compare->callback([&] {
    rc = suite ? cmd_compare_suite() : cmd_compare(graph_args, format, polys, opt());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const allipoly::guard_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const allipoly::parse_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
