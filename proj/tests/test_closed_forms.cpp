#include <gtest/gtest.h>

#include <random>

#include "allipoly/allipoly.hpp"
#include "support/oracles.hpp"

using namespace allipoly;

TEST(ClosedForms, AgreeWithEnumerationAcrossFamilies) {
  for (int n = 1; n <= 11; ++n) {
    EXPECT_EQ(closed_form_complete(n), alliance_polynomial(complete_graph(n))) << "K_" << n;
    EXPECT_EQ(closed_form_empty(n), alliance_polynomial(empty_graph(n))) << "E_" << n;
    if (n >= 2) {
      EXPECT_EQ(closed_form_path(n), alliance_polynomial(path_graph(n))) << "P_" << n;
      EXPECT_EQ(closed_form_star(n), alliance_polynomial(star_graph(n))) << "S_" << n;
      EXPECT_EQ(closed_form_complete_minus_edge(n), alliance_polynomial(complete_minus_edge_graph(n)))
          << "K_" << n << "/e";
    }
    if (n >= 3) {
      EXPECT_EQ(closed_form_cycle(n), alliance_polynomial(cycle_graph(n))) << "C_" << n;
    }
  }
  for (int n = 1; n <= 5; ++n)
    for (int m = 1; m <= 5; ++m)
      EXPECT_EQ(closed_form_complete_bipartite(n, m),
                alliance_polynomial(complete_bipartite_graph(n, m)))
          << "K_{" << n << "," << m << "}";
}

TEST(ClosedForms, KnownSmallValues) {
  EXPECT_EQ(to_text(closed_form_path(4)), "2x^2 + 2x^3 + 5x^4 + x^5");
  EXPECT_EQ(to_text(closed_form_cycle(5)), "5x^3 + 15x^5 + x^7");
  EXPECT_EQ(to_text(closed_form_complete(4)), "4x + 6x^3 + 4x^5 + x^7");
  EXPECT_EQ(to_text(closed_form_complete_bipartite(3, 3)), "6x^3 + 33x^5 + 15x^7 + x^9");
  EXPECT_EQ(to_text(closed_form_star(4)), "x + 6x^3 + 4x^5");
  EXPECT_EQ(to_text(closed_form_empty(3)), "3x^3");
  EXPECT_EQ(to_text(closed_form_complete_minus_edge(4)),
            "2x + 2x^2 + 5x^3 + 2x^4 + 2x^5 + x^6");
}

TEST(ClosedForms, ParameterBounds) {
  EXPECT_THROW(closed_form_path(0), std::invalid_argument);
  EXPECT_THROW(closed_form_cycle(2), std::invalid_argument);
  EXPECT_THROW(closed_form_star(1), std::invalid_argument);
  EXPECT_THROW(closed_form_complete_minus_edge(1), std::invalid_argument);
  EXPECT_THROW(closed_form_complete_bipartite(0, 3), std::invalid_argument);
}

TEST(ClosedForms, CompleteIsBinomialScheme) {
  // ((x^2+1)^n - 1) / x: coefficient of x^(2i-1) is C(n, i).
  AlliancePolynomial k9 = closed_form_complete(9);
  for (int i = 1; i <= 9; ++i) EXPECT_EQ(k9.expanded().at(2 * i - 1), binomial(9, i));
}

TEST(Compositions, TildeFactorValues) {
  // Cross-subset factor for joins with an edgeless part:
  // sum over r of C(m, r) x^{min(2r, m+1)}, constant-first coefficients.
  EXPECT_EQ(tilde_a(4), (std::vector<BigInt>{1, 0, 4, 0, 6, 5}));
  EXPECT_EQ(tilde_a(1), (std::vector<BigInt>{1, 0, 1}));
  EXPECT_EQ(tilde_a(2), (std::vector<BigInt>{1, 0, 2, 1}));
  EXPECT_EQ(tilde_a(0), (std::vector<BigInt>{1}));
}

TEST(Compositions, JoinCompleteEmptyMatchesEnumeration) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 6; ++m) {
      Graph joined = graph_join(complete_graph(n), empty_graph(m));
      EXPECT_EQ(join_complete_empty(n, m), alliance_polynomial(joined)) << n << "," << m;
    }
}

TEST(Compositions, UnionComposeMatchesEnumeration) {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    Graph a = oracles::random_graph(1 + trial % 6, 0.5, rng);
    Graph b = oracles::random_graph(1 + (trial + 3) % 6, 0.4, rng);
    AlliancePolynomial composed = union_compose({alliance_polynomial(a), alliance_polynomial(b)});
    EXPECT_EQ(composed, alliance_polynomial(disjoint_union(a, b)));
  }
  // Three-part union and the n-fold empty graph.
  AlliancePolynomial three = union_compose(
      {alliance_polynomial(path_graph(2)), alliance_polynomial(cycle_graph(3)),
       alliance_polynomial(complete_graph(1))});
  EXPECT_EQ(three, alliance_polynomial(disjoint_union(disjoint_union(path_graph(2), cycle_graph(3)),
                                                      complete_graph(1))));
  std::vector<AlliancePolynomial> singletons(5, closed_form_empty(1));
  EXPECT_EQ(union_compose(singletons), closed_form_empty(5));
  EXPECT_THROW(union_compose({}), std::invalid_argument);
}

TEST(Compositions, IsolatedVertexAddition) {
  std::mt19937 rng(555);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracles::random_graph(1 + trial % 8, 0.45, rng);
    AlliancePolynomial with_v =
        union_compose({alliance_polynomial(g), closed_form_empty(1)});
    EXPECT_EQ(with_v, alliance_polynomial(add_isolated_vertex(g)));
  }
}

TEST(Unimodality, FamilyBehavior) {
  for (int n = 2; n <= 12; ++n)
    EXPECT_EQ(is_unimodal(closed_form_path(n)), n <= 4) << "P_" << n;
  for (int n = 3; n <= 12; ++n) EXPECT_TRUE(is_unimodal(closed_form_cycle(n))) << "C_" << n;
  for (int n = 1; n <= 12; ++n) EXPECT_TRUE(is_unimodal(closed_form_complete(n))) << "K_" << n;
  for (int n = 2; n <= 12; ++n)
    EXPECT_EQ(is_unimodal(closed_form_complete_minus_edge(n)), n <= 4) << "K_" << n << "/e";
}
