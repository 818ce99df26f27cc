#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sharptree/corpus.hpp"
#include "sharptree/errors.hpp"
#include "sharptree/tree.hpp"
#include "support.hpp"

using namespace sharptree;
using namespace sharptree::testing;

TEST(ParseTree, FixturesKeepFirstAppearanceOrder) {
  const WeightedTree t = t1();
  EXPECT_EQ(t.labels(), (std::vector<std::string>{"1", "4", "5", "2", "6", "3", "7"}));
  EXPECT_EQ(t.order(), 7U);
  EXPECT_EQ(t.edges().size(), 6U);
  EXPECT_EQ(t.edge(*t.edge_index(vertex(t, "1"), vertex(t, "5"))).weight, Rational(2));
}

TEST(ParseTree, HeaderDeclaresOrderAndSingleVertex) {
  const WeightedTree t = parse_tree("# vertices: c b a\na b 1/2\nb c 0.25\n");
  EXPECT_EQ(t.labels(), (std::vector<std::string>{"c", "b", "a"}));
  EXPECT_EQ(t.edge(*t.edge_index(1, 2)).weight, Rational(1, 2));
  EXPECT_EQ(t.edge(*t.edge_index(0, 1)).weight, Rational(1, 4));

  const WeightedTree single = parse_tree("# vertices: x\n");
  EXPECT_EQ(single.order(), 1U);
  EXPECT_TRUE(adjacency_matrix(single).is_zero());
}

TEST(ParseTree, Errors) {
  EXPECT_THROW(parse_tree("1 2 1\n1 3 1\n2 3 1"), NotATree);                  // triangle
  EXPECT_THROW(parse_tree("1 2 1\n3 4 1\n"), NotATree);                       // disconnected
  EXPECT_THROW(parse_tree("# vertices: 1 2 3 4\n1 2 1\n3 4 1\n2 1 1"), NotATree);  // duplicate
  EXPECT_THROW(parse_tree("1 1 1\n"), NotATree);                              // loop
  EXPECT_THROW(parse_tree("1 2 0\n"), ZeroWeight);
  EXPECT_THROW(parse_tree("1 2 0/5\n"), ZeroWeight);
  EXPECT_THROW(parse_tree("1 2\n"), ParseError);
  EXPECT_THROW(parse_tree("1 2 x\n"), ParseError);
  EXPECT_THROW(parse_tree("1 2 1 9\n"), ParseError);
  EXPECT_THROW(parse_tree("# only a comment\n"), ParseError);
  EXPECT_THROW(parse_tree("# vertices: a b\na c 1\n"), ParseError);
  EXPECT_THROW(parse_tree("a b 1\n# vertices: a b\n"), ParseError);
}

TEST(ParseTree, CommentsBlankLinesAndCrlf) {
  const WeightedTree t = parse_tree("# header\r\n\r\n  1 2 3 \r\n# x\n2\t3   -1/2\n");
  EXPECT_EQ(t.order(), 3U);
  EXPECT_EQ(t.edge(*t.edge_index(1, 2)).weight, Rational(-1, 2));
}

TEST(ParseGraph, FormatRoundTrip) {
  const WeightedGraph g = parse_graph("a b 1/3\nb c -2\na c 5\n");
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_EQ(parse_graph(format_edge_list(g)), g);
  EXPECT_THROW(parse_graph("a a 1\n"), InvalidGraph);
  EXPECT_THROW(parse_graph("a b 1\nb a 2\n"), InvalidGraph);
}

TEST(AdjacencyMatrix, FixturesTranscribeExactly) {
  EXPECT_EQ(adjacency_matrix(star12()), symmetric(3, {{1, 3, "1"}, {2, 3, "2"}}));
  EXPECT_EQ(adjacency_matrix(p5()),
            symmetric(5, {{1, 2, "1"}, {2, 3, "1"}, {3, 4, "1"}, {4, 5, "1"}}));
  EXPECT_EQ(adjacency_matrix(t6()),
            symmetric(6, {{1, 2, "1"}, {2, 3, "1"}, {3, 4, "1"}, {4, 5, "1"}, {4, 6, "1"}}));
}

TEST(Classify, Fixtures) {
  const WeightedTree t = t1();
  const ClassTProfile p = classify(t);
  EXPECT_TRUE(p.is_member);
  EXPECT_TRUE(p.is_caterpillar);
  EXPECT_FALSE(p.is_corona);
  EXPECT_FALSE(p.is_star);
  std::vector<std::string> inner;
  for (Vertex v : p.non_pendant_vertices) inner.push_back(t.label(v));
  EXPECT_EQ(inner, (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(p.pendant_counts, (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(p.pendant_vertex_count, 4U);

  EXPECT_FALSE(classify(t2()).is_member);

  const ClassTProfile s = classify(star12());
  EXPECT_TRUE(s.is_star);
  EXPECT_TRUE(s.is_member);
  ASSERT_EQ(s.non_pendant_vertices.size(), 1U);
  EXPECT_EQ(s.pendant_counts, (std::vector<std::size_t>{2}));

  const ClassTProfile single = classify(parse_tree("# vertices: a\n"));
  EXPECT_TRUE(single.non_pendant_vertices.empty());
  EXPECT_FALSE(single.is_member);
}

TEST(Classify, CoronaAndCaterpillarShapes) {
  EXPECT_TRUE(classify(corpus::corona(corpus::path(4))).is_corona);
  EXPECT_TRUE(classify(corpus::corona(corpus::path(4))).is_member);
  const WeightedTree spider = parse_tree("1 2 1\n2 3 1\n1 4 1\n4 5 1\n1 6 1\n6 7 1\n");
  EXPECT_FALSE(classify(spider).is_caterpillar);
  EXPECT_FALSE(classify(spider).is_member);
  const auto spine = caterpillar_spine(t1());
  ASSERT_TRUE(spine.has_value());
  EXPECT_EQ(spine->size(), 3U);
}

TEST(Classify, InvariantsOnRandomTrees) {
  corpus::Rng rng(3);
  for (int k = 0; k < 300; ++k) {
    const WeightedTree t = corpus::random_tree(3 + k % 10, rng, corpus::Weights::unit);
    const ClassTProfile p = classify(t);
    if (p.is_corona) EXPECT_TRUE(p.is_member);
    if (p.is_star) EXPECT_TRUE(p.is_member);
    if (p.is_member && !p.is_corona) {
      EXPECT_TRUE(std::any_of(p.pendant_counts.begin(), p.pendant_counts.end(),
                              [](std::size_t c) { return c >= 2; }));
    }
  }
}

TEST(IsSingular, Examples) {
  EXPECT_TRUE(is_singular(p5()));
  EXPECT_FALSE(is_singular(parse_tree("a b 5\n")));
  EXPECT_TRUE(is_singular(t1()));
  EXPECT_TRUE(is_singular(parse_tree("# vertices: a\n")));
}

TEST(IsSingular, RankIsTwiceMatchingNumber) {
  corpus::Rng rng(5);
  for (int k = 0; k < 400; ++k) {
    const WeightedTree t = corpus::random_tree(1 + k % 12, rng, corpus::Weights::signed_rational);
    const auto brute = oracle::all_maximum_matchings(t);
    EXPECT_EQ(rank(adjacency_matrix(t)), 2 * brute.matching_number);
    EXPECT_EQ(is_singular(t), 2 * brute.matching_number < t.order());
  }
}

TEST(Bipartition, Examples) {
  const auto labels_of = [](const WeightedTree& t, const std::vector<Vertex>& vs) {
    std::vector<std::string> out;
    for (Vertex v : vs) out.push_back(t.label(v));
    std::sort(out.begin(), out.end());
    return out;
  };
  {
    const WeightedTree t = p5();
    const auto b = bipartition(t);
    EXPECT_EQ(labels_of(t, b.part_a), (std::vector<std::string>{"1", "3", "5"}));
    EXPECT_EQ(labels_of(t, b.part_b), (std::vector<std::string>{"2", "4"}));
  }
  {
    const WeightedTree t = t6();
    const auto b = bipartition(t);
    EXPECT_EQ(labels_of(t, b.part_a), (std::vector<std::string>{"1", "3", "5", "6"}));
    EXPECT_EQ(labels_of(t, b.part_b), (std::vector<std::string>{"2", "4"}));
  }
  {
    const WeightedTree t = star12();
    const auto b = bipartition(t);
    EXPECT_EQ(labels_of(t, b.part_a), (std::vector<std::string>{"1", "2"}));
    EXPECT_EQ(labels_of(t, b.part_b), (std::vector<std::string>{"3"}));
  }
}

TEST(Bipartition, EveryEdgeCrosses) {
  corpus::Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const WeightedTree t = corpus::random_tree(2 + k % 11, rng, corpus::Weights::unit);
    const auto b = bipartition(t);
    for (const auto& e : t.edges()) EXPECT_NE(b.side[e.u], b.side[e.v]);
  }
}

TEST(TreePaths, MatchBreadthFirstSearch) {
  corpus::Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const WeightedTree t = corpus::random_tree(2 + k % 11, rng, corpus::Weights::unit);
    for (Vertex a = 0; a < t.order(); ++a) {
      for (Vertex b = 0; b < t.order(); ++b) {
        const auto path = t.path_edges(a, b);
        EXPECT_EQ(path, oracle::bfs_path(t, a, b));
        EXPECT_EQ(t.distance(a, b), path.size());
        EXPECT_EQ(t.path_vertices(a, b).size(), path.size() + 1);
      }
    }
  }
}
