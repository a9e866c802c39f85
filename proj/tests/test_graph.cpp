#include <gtest/gtest.h>

#include <sstream>
#include <stdexcept>

#include "allipoly/allipoly.hpp"
#include "support/oracles.hpp"

using namespace allipoly;

TEST(VertexSet, BasicOperations) {
  VertexSet s = VertexSet::of({0, 2, 5}, 6);
  EXPECT_TRUE(s.contains(0));
  EXPECT_FALSE(s.contains(1));
  EXPECT_EQ(s.members(), (std::vector<int>{0, 2, 5}));
  EXPECT_EQ(s.complement().members(), (std::vector<int>{1, 3, 4}));
  EXPECT_THROW(VertexSet::of({6}, 6), std::invalid_argument);
  EXPECT_EQ(VertexSet::full_set(3).members(), (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(VertexSet::empty_set(4).members().empty());
}

TEST(Graph, ConstructionAndDegrees) {
  Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 2}});  // duplicate collapses
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.size(), 3);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.degree_sequence(), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(g.max_degree(), 2);
  EXPECT_EQ(g.min_degree(), 1);
  EXPECT_THROW(make_graph(3, {{0, 0}}), std::invalid_argument);  // self-loop
  EXPECT_THROW(make_graph(3, {{0, 3}}), std::invalid_argument);  // out of range
  EXPECT_EQ(make_graph(0, {}).order(), 0);  // degenerate but constructible
  EXPECT_THROW(make_graph(65, {}), std::invalid_argument);
}

TEST(Graph, ConnectivityAndComponents) {
  Graph g = make_graph(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(induced_is_connected(g, VertexSet::of({0, 1, 2}, 5)));
  EXPECT_FALSE(induced_is_connected(g, VertexSet::of({0, 2}, 5)));
  EXPECT_TRUE(induced_is_connected(g, VertexSet::of({3}, 5)));
  EXPECT_THROW(induced_is_connected(g, VertexSet::empty_set(5)), std::invalid_argument);
  auto comps = components(g);
  ASSERT_EQ(comps.size(), 2u);
  EXPECT_EQ(comps[0].members(), (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(comps[1].members(), (std::vector<int>{3, 4}));
  EXPECT_TRUE(is_connected(path_graph(1)));
}

TEST(Graph, InducedSubgraphRelabels) {
  Graph g = make_graph(5, {{0, 2}, {2, 4}, {1, 3}});
  Graph h = induced_subgraph(g, VertexSet::of({0, 2, 4}, 5));
  EXPECT_EQ(h.order(), 3);
  EXPECT_TRUE(h.adjacent(0, 1));  // 0-2 relabeled
  EXPECT_TRUE(h.adjacent(1, 2));  // 2-4 relabeled
  EXPECT_FALSE(h.adjacent(0, 2));
}

TEST(Families, ShapesAndDegrees) {
  EXPECT_EQ(path_graph(5).size(), 4);
  EXPECT_EQ(cycle_graph(5).size(), 5);
  EXPECT_EQ(complete_graph(6).size(), 15);
  EXPECT_EQ(star_graph(5).degree(0), 4);
  EXPECT_EQ(complete_bipartite_graph(3, 4).size(), 12);
  EXPECT_EQ(complete_minus_edge_graph(5).size(), 9);
  EXPECT_EQ(empty_graph(7).size(), 0);
  EXPECT_TRUE(is_connected(cycle_graph(3)));
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
  EXPECT_THROW(star_graph(1), std::invalid_argument);
  EXPECT_THROW(path_graph(0), std::invalid_argument);
  // Coincidences between families at small orders.
  EXPECT_TRUE(oracles::isomorphic_by_permutation(star_graph(2), path_graph(2)));
  EXPECT_TRUE(oracles::isomorphic_by_permutation(complete_bipartite_graph(1, 3), star_graph(4)));
  EXPECT_TRUE(oracles::isomorphic_by_permutation(complete_minus_edge_graph(3), path_graph(3)));
}

TEST(Ops, DisjointUnionAndJoin) {
  Graph u = disjoint_union(path_graph(2), cycle_graph(3));
  EXPECT_EQ(u.order(), 5);
  EXPECT_EQ(u.size(), 4);
  EXPECT_TRUE(u.adjacent(0, 1));
  EXPECT_TRUE(u.adjacent(2, 3));
  EXPECT_FALSE(u.adjacent(1, 2));

  Graph j = graph_join(path_graph(2), path_graph(2));  // K_4
  EXPECT_TRUE(oracles::isomorphic_by_permutation(j, complete_graph(4)));

  Graph w = graph_join(empty_graph(1), cycle_graph(4));  // wheel hub
  EXPECT_EQ(w.degree(0), 4);
  EXPECT_EQ(w.order(), 5);
}

TEST(Ops, ComplementAndProducts) {
  EXPECT_TRUE(oracles::isomorphic_by_permutation(graph_complement(empty_graph(4)), complete_graph(4)));
  EXPECT_TRUE(oracles::isomorphic_by_permutation(graph_complement(cycle_graph(5)), cycle_graph(5)));

  Graph box = cartesian_product(path_graph(2), path_graph(2));
  EXPECT_TRUE(oracles::isomorphic_by_permutation(box, cycle_graph(4)));

  Graph strong = strong_product(path_graph(2), path_graph(2));
  EXPECT_TRUE(oracles::isomorphic_by_permutation(strong, complete_graph(4)));

  Graph prism = cartesian_product(path_graph(2), cycle_graph(3));
  EXPECT_EQ(prism.order(), 6);
  EXPECT_EQ(prism.size(), 9);
  EXPECT_EQ(prism.degree_sequence(), (std::vector<int>{3, 3, 3, 3, 3, 3}));
}

TEST(Ops, RemoveEdgeAndVertex) {
  Graph g = cycle_graph(4);
  Graph h = remove_edge(g, 0, 1);
  EXPECT_TRUE(oracles::isomorphic_by_permutation(h, path_graph(4)));
  EXPECT_THROW(remove_edge(h, 0, 1), std::invalid_argument);

  Graph k = remove_vertex(complete_graph(5), 2);
  EXPECT_TRUE(oracles::isomorphic_by_permutation(k, complete_graph(4)));
  Graph p = remove_vertex(path_graph(3), 1);
  EXPECT_EQ(p.order(), 2);
  EXPECT_EQ(p.size(), 0);

  Graph plus = add_isolated_vertex(path_graph(2));
  EXPECT_EQ(plus.order(), 3);
  EXPECT_EQ(plus.degree(2), 0);
}

TEST(GraphIo, EdgeListRoundTrip) {
  Graph g = make_graph(5, {{0, 1}, {1, 4}, {2, 3}});
  Graph back = from_edge_list_text(to_edge_list_text(g));
  EXPECT_EQ(g, back);

  Graph parsed = from_edge_list_text("# a comment\n4\n\n0 1\n2 3\n");
  EXPECT_EQ(parsed.order(), 4);
  EXPECT_EQ(parsed.size(), 2);

  EXPECT_THROW(from_edge_list_text(""), parse_error);
  EXPECT_THROW(from_edge_list_text("3\n0\n"), parse_error);
  EXPECT_THROW(from_edge_list_text("3\n0 zebra\n"), parse_error);
  EXPECT_THROW(from_edge_list_text("3\n0 1 2\n"), parse_error);
}

TEST(GraphIo, Graph6RoundTrip) {
  for (const Graph& g : {path_graph(5), cycle_graph(6), complete_graph(7), empty_graph(1),
                         make_graph(9, {{0, 8}, {3, 4}})}) {
    Graph back = from_graph6(to_graph6(g));
    EXPECT_EQ(g, back);
  }
  // Known encodings: K_1 is "@", P_2 is "A_", E_2 is "A?".
  EXPECT_EQ(to_graph6(complete_graph(1)), "@");
  EXPECT_EQ(to_graph6(path_graph(2)), "A_");
  EXPECT_EQ(to_graph6(empty_graph(2)), "A?");
  EXPECT_EQ(from_graph6(">>graph6<<A_"), path_graph(2));

  EXPECT_THROW(from_graph6(""), parse_error);
  EXPECT_THROW(from_graph6("A"), parse_error);     // truncated
  EXPECT_THROW(from_graph6("A_x"), parse_error);   // trailing garbage
  EXPECT_THROW(from_graph6("\x01_"), parse_error); // bad byte
}
