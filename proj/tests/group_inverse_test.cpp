#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sharptree/corpus.hpp"
#include "sharptree/errors.hpp"
#include "sharptree/group_inverse.hpp"
#include "support.hpp"

using namespace sharptree;
using namespace sharptree::testing;

namespace {

// Expected values below were computed independently as the Moore-Penrose
// inverse (sympy Matrix.pinv) of each adjacency matrix.
ExactMatrix p5_sharp() {
  return symmetric(5, {{1, 2, "2/3"}, {2, 3, "1/3"}, {3, 4, "1/3"}, {4, 5, "2/3"}, {1, 4, "-1/3"}, {2, 5, "-1/3"}});
}

ExactMatrix t6_sharp() {
  return symmetric(6, {{1, 2, "3/5"}, {1, 4, "-1/5"}, {2, 3, "2/5"}, {2, 5, "-1/5"}, {2, 6, "-1/5"},
                       {3, 4, "1/5"}, {4, 5, "2/5"}, {4, 6, "2/5"}});
}

// T1 in labels 1..7; the fixture orders vertices 1 4 5 2 6 3 7.
ExactMatrix t1_sharp_in_fixture_order(const WeightedTree& t) {
  ExactMatrix x = ExactMatrix::zero(7);
  const auto set = [&](const char* a, const char* b, const char* w) {
    x(vertex(t, a), vertex(t, b)) = x(vertex(t, b), vertex(t, a)) = Rational::parse(w);
  };
  set("1", "4", "1/5");
  set("1", "5", "2/5");
  set("2", "6", "1");
  set("3", "7", "1");
  set("4", "6", "-1/5");
  set("5", "6", "-2/5");
  set("6", "7", "-2");
  return x;
}

}  // namespace

TEST(SharpCombinatorial, PathOnFive) {
  const auto w = sharp_combinatorial(p5());
  EXPECT_EQ(w.sharp_matrix, p5_sharp());
  EXPECT_EQ(w.m_value, Rational(3));
  EXPECT_EQ(w.sharp_graph.edge_count(), 6U);
  EXPECT_EQ(w.method, SharpMethod::combinatorial);
}

TEST(SharpCombinatorial, SixVertexCounterexample) {
  const auto w = sharp_combinatorial(t6());
  EXPECT_EQ(w.sharp_matrix, t6_sharp());
  EXPECT_EQ(w.m_value, Rational(5));
}

TEST(SharpCombinatorial, CaterpillarT1) {
  const WeightedTree t = t1();
  const auto w = sharp_combinatorial(t);
  EXPECT_EQ(w.sharp_matrix, t1_sharp_in_fixture_order(t));
  EXPECT_EQ(w.sharp_matrix, sharp_factorization(adjacency_matrix(t)));
}

TEST(SharpCombinatorial, SingleVertex) {
  const auto w = sharp_combinatorial(parse_tree("# vertices: a\n"));
  EXPECT_EQ(w.sharp_matrix, ExactMatrix::zero(1));
  EXPECT_EQ(w.sharp_graph.edge_count(), 0U);
  EXPECT_EQ(w.sharp_graph.order(), 1U);
}

TEST(SharpCombinatorial, EntriesMatchDefinitionOracle) {
  corpus::Rng rng(2);
  for (int k = 0; k < 150; ++k) {
    const WeightedTree t = corpus::random_tree(2 + k % 11, rng, corpus::Weights::signed_rational);
    const auto brute = oracle::all_maximum_matchings(t);
    const auto w = sharp_combinatorial(t);
    for (Vertex a = 0; a < t.order(); ++a) {
      EXPECT_TRUE(w.sharp_matrix(a, a).is_zero());
      for (Vertex b = a + 1; b < t.order(); ++b)
        EXPECT_EQ(w.sharp_matrix(a, b), oracle::mu(t, brute, a, b) / brute.m_value);
    }
  }
}

TEST(SharpFactorization, Examples) {
  EXPECT_EQ(sharp_factorization(adjacency_matrix(t6())), t6_sharp());
  EXPECT_EQ(sharp_factorization(ExactMatrix::zero(3)), ExactMatrix::zero(3));
  EXPECT_EQ(sharp_factorization(symmetric(2, {{1, 2, "5"}})), symmetric(2, {{1, 2, "1/5"}}));
}

TEST(SharpFactorization, NilpotentMatrixHasNoGroupInverse) {
  ExactMatrix n(2, 2);
  n(0, 1) = 1;
  EXPECT_THROW(sharp_factorization(n), SingularCore);
}

TEST(SharpFactorization, InvolutionOnTrees) {
  corpus::Rng rng(4);
  for (int k = 0; k < 150; ++k) {
    const WeightedTree t = corpus::random_tree(1 + k % 12, rng, corpus::Weights::signed_rational);
    const ExactMatrix a = adjacency_matrix(t);
    const ExactMatrix x = sharp_factorization(a);
    EXPECT_TRUE(verify_axioms(a, x));
    EXPECT_TRUE(x.is_symmetric());
    EXPECT_EQ(sharp_factorization(x), a);
  }
}

TEST(SharpBipartiteBlock, Examples) {
  const WeightedTree star = star12();
  EXPECT_EQ(sharp_bipartite_block(star), adjacency_matrix(star).scaled(Rational(1, 5)));
  EXPECT_EQ(sharp_bipartite_block(p5()), p5_sharp());
  EXPECT_EQ(sharp_bipartite_block(t6()), t6_sharp());
  EXPECT_EQ(sharp_bipartite_block(parse_tree("# vertices: a\n")), ExactMatrix::zero(1));
}

TEST(SharpStar, ClosedForm) {
  const auto w = sharp_star(star12());
  EXPECT_EQ(w.m_value, Rational(5));
  EXPECT_EQ(w.sharp_matrix, symmetric(3, {{1, 3, "1/5"}, {2, 3, "2/5"}}));
  EXPECT_TRUE(verify_axioms(adjacency_matrix(star12()), w.sharp_matrix));

  const WeightedTree k13 = corpus::star({1, 1, 1});
  const auto x = sharp_star(k13);
  EXPECT_EQ(x.sharp_matrix, adjacency_matrix(k13).scaled(Rational(1, 3)));
  EXPECT_EQ(x.sharp_matrix, sharp_factorization(adjacency_matrix(k13)));

  const WeightedTree k11 = parse_tree("a b -3/2\n");
  const auto y = sharp_star(k11);
  EXPECT_EQ(y.sharp_matrix, *inverse(adjacency_matrix(k11)));

  EXPECT_THROW(sharp_star(p5()), NotAStar);
}

TEST(SharpStar, EqualsCombinatorialOnRandomStars) {
  corpus::Rng rng(6);
  for (int k = 0; k < 50; ++k) {
    std::vector<Rational> weights;
    for (int i = 0; i < 1 + k % 8; ++i) weights.push_back(corpus::random_weight(rng));
    const WeightedTree t = corpus::shuffled(corpus::star(weights), rng);
    EXPECT_EQ(sharp_star(t).sharp_matrix, sharp_combinatorial(t).sharp_matrix);
  }
}

TEST(VerifyAxioms, Examples) {
  const ExactMatrix a = adjacency_matrix(p5());
  EXPECT_TRUE(verify_axioms(a, p5_sharp()));
  EXPECT_FALSE(verify_axioms(a, a));
  EXPECT_TRUE(verify_axioms(ExactMatrix::zero(3), ExactMatrix::zero(3)));
  EXPECT_FALSE(verify_axioms(a, ExactMatrix::zero(4)));
}

TEST(Differential, ThreeRoutesAgreeBitExactly) {
  corpus::Rng rng(1234);
  for (int k = 0; k < 200; ++k) {
    const WeightedTree t = corpus::random_tree(1 + k % 12, rng, corpus::Weights::signed_rational);
    const ExactMatrix a = adjacency_matrix(t);
    const ExactMatrix combinatorial = sharp_combinatorial(t).sharp_matrix;
    EXPECT_EQ(combinatorial, sharp_factorization(a));
    EXPECT_EQ(combinatorial, sharp_bipartite_block(t));
    EXPECT_TRUE(verify_axioms(a, combinatorial));
  }
}

TEST(ZeroNonzeroPattern, SameAsTreeExactlyForStars) {
  for (std::size_t n = 2; n <= 9; ++n) {
    for (const auto& t : corpus::free_trees(n)) {
      if (!is_singular(t)) continue;
      const auto w = sharp_combinatorial(t);
      const ExactMatrix a = adjacency_matrix(t);
      bool same = true;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) same = same && (a(i, j).is_zero() == w.sharp_matrix(i, j).is_zero());
      }
      EXPECT_EQ(same, is_star(t)) << corpus::canonical_form(t);
    }
  }
}
