#include <gtest/gtest.h>

#include <random>

#include "allipoly/allipoly.hpp"
#include "json.hpp"
#include "support/oracles.hpp"

using namespace allipoly;

TEST(AllianceIndex, DefinitionOnSmallGraphs) {
  Graph c4 = cycle_graph(4);
  VertexSet half = VertexSet::of({0, 1}, 4);
  // Each member: one neighbor inside, one outside.
  EXPECT_TRUE(is_defensive_k_alliance(c4, half, 0));
  EXPECT_FALSE(is_defensive_k_alliance(c4, half, 1));
  EXPECT_EQ(exact_alliance_index(c4, half), 0);
  EXPECT_EQ(exact_alliance_index(c4, VertexSet::full_set(4)), 2);
  EXPECT_EQ(exact_alliance_index(c4, VertexSet::of({0}, 4)), -2);
  Graph star = star_graph(5);
  EXPECT_EQ(exact_alliance_index(star, VertexSet::of({0}, 5)), -4);
  EXPECT_EQ(exact_alliance_index(star, VertexSet::of({1}, 5)), -1);
}

TEST(AlliancePolynomialEngine, WorkedCompleteBipartite33) {
  AlliancePolynomial p = alliance_polynomial(complete_bipartite_graph(3, 3));
  EXPECT_EQ(to_text(p), "6x^3 + 33x^5 + 15x^7 + x^9");
  EXPECT_EQ(connected_count(p), BigInt(55));
  EXPECT_EQ(cut_set_count(p), BigInt(8));
  EXPECT_EQ(p.min_exponent(), 3);
  EXPECT_EQ(p.max_exponent(), 9);
}

TEST(AlliancePolynomialEngine, MatchesDefinitionOracleOnRandomGraphs) {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 10;
    Graph g = oracles::random_graph(n, 0.2 + 0.15 * (trial % 5), rng);
    AlliancePolynomial p = alliance_polynomial(g);
    EXPECT_EQ(p.expanded(), oracles::alliance_exponents(g)) << "n=" << n << " trial=" << trial;
  }
}

TEST(AlliancePolynomialEngine, ThreadCountsAgree) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = oracles::random_graph(9 + trial, 0.4, rng);
    AlliancePolynomial serial = alliance_polynomial(g, {1, false});
    for (unsigned t : {2u, 3u, 8u})
      EXPECT_EQ(serial, alliance_polynomial(g, {t, false})) << "threads=" << t;
  }
}

TEST(AlliancePolynomialEngine, GuardsAndForce) {
  Graph big = empty_graph(27);
  EXPECT_THROW(alliance_polynomial(big), guard_error);
  EXPECT_NO_THROW(alliance_polynomial(empty_graph(26)));
  EXPECT_EQ(to_text(alliance_polynomial(big, {1, true})), "27x^27");
  EXPECT_THROW(alliance_polynomial(make_graph(0, {})), std::invalid_argument);
}

TEST(AlliancePolynomialEngine, SizeCountsComplementarity) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + trial % 7;
    Graph g = oracles::random_graph(n, 0.5, rng);
    SizeCounts sc = size_counts(g);
    auto direct = oracles::connected_subsets_by_size(g);
    ASSERT_EQ(sc.s.size(), direct.size());
    for (std::size_t r = 0; r < direct.size(); ++r) EXPECT_EQ(sc.s[r], direct[r]);
    for (int j = 0; j < n; ++j) EXPECT_EQ(sc.c[j] + sc.s[n - j], binomial(n, j));
  }
}

TEST(PolynomialClass, ValidationRules) {
  EXPECT_NO_THROW(AlliancePolynomial(3, {{0, 1}}));
  EXPECT_THROW(AlliancePolynomial(0, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(AlliancePolynomial(3, {{0, -1}}), std::invalid_argument);
  EXPECT_THROW(AlliancePolynomial(3, {{3, 1}}), std::invalid_argument);   // k > n-1
  EXPECT_THROW(AlliancePolynomial(3, {{-3, 1}}), std::invalid_argument);  // k <= -n
  EXPECT_THROW(AlliancePolynomial(3, {}), std::invalid_argument);         // empty
  EXPECT_THROW(AlliancePolynomial(2, {{0, 4}}), std::invalid_argument);   // total >= 2^n
  // Zero coefficients are dropped silently.
  AlliancePolynomial p(3, {{0, 2}, {1, 0}});
  EXPECT_EQ(p.coefficients().size(), 1u);
}

TEST(PolynomialClass, TextRendering) {
  EXPECT_EQ(to_text(alliance_polynomial(complete_graph(1))), "x");
  EXPECT_EQ(to_text(alliance_polynomial(empty_graph(2))), "2x^2");
  EXPECT_EQ(to_text(alliance_polynomial(path_graph(2))), "2x + x^3");
  EXPECT_EQ(to_text(closed_form_cycle(5)), "5x^3 + 15x^5 + x^7");
}

TEST(PolynomialClass, EvaluationAtRationalPoints) {
  AlliancePolynomial c5 = alliance_polynomial(cycle_graph(5));
  EXPECT_EQ(evaluate(c5, BigRational(1)), BigRational(21));
  // 5/8 + 15/32 + 1/128
  EXPECT_EQ(evaluate(c5, BigRational(1, 2)), BigRational(141, 128));
  EXPECT_EQ(evaluate(c5, BigRational(-1)), BigRational(-21));
  EXPECT_EQ(evaluate(c5, BigRational(0)), BigRational(0));
  EXPECT_EQ(defensive_alliance_count(c5, 0), BigInt(16));
  EXPECT_EQ(defensive_alliance_count(c5, -2), BigInt(21));
  EXPECT_EQ(defensive_alliance_count(c5, 3), BigInt(0));
}

TEST(PolynomialClass, UnimodalAndParity) {
  EXPECT_TRUE(is_unimodal(alliance_polynomial(path_graph(4))));
  EXPECT_FALSE(is_unimodal(alliance_polynomial(path_graph(5))));
  EXPECT_TRUE(parity_symmetric(alliance_polynomial(cycle_graph(6))));   // all degrees even
  EXPECT_TRUE(parity_symmetric(alliance_polynomial(path_graph(2))));    // all degrees odd
  EXPECT_FALSE(parity_symmetric(alliance_polynomial(path_graph(3))));   // mixed parities
}

TEST(PolynomialClass, JsonRoundTrip) {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = oracles::random_graph(1 + trial % 9, 0.5, rng);
    AlliancePolynomial p = alliance_polynomial(g);
    AlliancePolynomial back = polynomial_from_json(nlohmann::json::parse(to_json(p).dump()));
    EXPECT_EQ(p, back);
  }
  // Coefficients beyond uint64 survive the trip as strings.
  AlliancePolynomial wide(80, {{0, BigInt(1) << 70}});
  EXPECT_EQ(polynomial_from_json(nlohmann::json::parse(to_json(wide).dump())), wide);
  EXPECT_TRUE(to_json(wide)["coeffs"]["0"].is_string());

  EXPECT_THROW(polynomial_from_json(nlohmann::json("plain string")), parse_error);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse("{\"n\": 3}")), parse_error);
  EXPECT_THROW(polynomial_from_json(nlohmann::json::parse("{\"n\": 3, \"coeffs\": {\"q\": 1}}")),
               parse_error);
}
