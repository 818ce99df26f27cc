#include <gtest/gtest.h>

#include "sharptree/corpus.hpp"
#include "sharptree/errors.hpp"
#include "sharptree/group_inverse.hpp"
#include "sharptree/signature.hpp"
#include "support.hpp"

using namespace sharptree;
using namespace sharptree::testing;

TEST(BuildSignature, CaterpillarT1) {
  const WeightedTree t = t1();
  const SignatureVector s = build_signature_class_T(t);
  EXPECT_EQ(t.label(s.root), "4");
  const auto sign_of = [&](const char* label) { return s.signs[vertex(t, label)]; };
  for (const char* v : {"4", "1", "5", "3", "7"}) EXPECT_EQ(sign_of(v), 1) << v;
  for (const char* v : {"2", "6"}) EXPECT_EQ(sign_of(v), -1) << v;
  EXPECT_EQ(s.n_values[vertex(t, "7")], 2U);
  EXPECT_EQ(s.n_values[s.root], 0U);

  const ExactMatrix signed_sharp = apply_signature(sharp_combinatorial(t).sharp_matrix, s);
  EXPECT_TRUE(is_entrywise_nonnegative(signed_sharp));
  std::vector<Rational> nonzero;
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) {
      if (!signed_sharp(i, j).is_zero()) nonzero.push_back(signed_sharp(i, j));
    }
  }
  std::sort(nonzero.begin(), nonzero.end());
  EXPECT_EQ(nonzero, (std::vector<Rational>{Rational(1, 5), Rational(1, 5), Rational(2, 5), Rational(2, 5), 1, 1, 2}));
}

TEST(BuildSignature, StarAndCorona) {
  const SignatureVector s = build_signature_class_T(star12());
  EXPECT_EQ(s.signs, (std::vector<int>{1, 1, 1}));

  const WeightedTree corona = corpus::corona(corpus::path(2));  // spine 1-2, leaves 3, 4
  const SignatureVector c = build_signature_class_T(corona);
  EXPECT_EQ(corona.label(c.root), "3");
  // Root 3 hangs on spine vertex 1; crossing the spine edge flips the sign.
  EXPECT_EQ(c.signs, (std::vector<int>{1, -1, 1, -1}));
  EXPECT_TRUE(is_entrywise_nonnegative(apply_signature(sharp_combinatorial(corona).sharp_matrix, c)));
}

TEST(BuildSignature, Gates) {
  EXPECT_THROW(build_signature_class_T(t2()), NotInClassT);
  EXPECT_THROW(build_signature_class_T(parse_tree("1 3 1\n2 3 -1\n")), NonPositiveWeights);
}

TEST(ApplySignature, IdentityInvolutionAndMismatch) {
  const ExactMatrix m = symmetric(3, {{1, 2, "-3"}, {2, 3, "1/2"}, {1, 1, "4"}});
  const std::vector<int> ones{1, 1, 1};
  EXPECT_EQ(apply_signature(m, ones), m);
  const std::vector<int> s{1, -1, 1};
  EXPECT_EQ(apply_signature(apply_signature(m, s), s), m);
  EXPECT_EQ(apply_signature(m, s)(0, 1), Rational(3));
  EXPECT_EQ(apply_signature(m, s)(0, 0), Rational(4));
  EXPECT_THROW(apply_signature(m, std::vector<int>{1, 1}), DimensionMismatch);
}

TEST(ApplySignature, SixVertexSignFlips) {
  const ExactMatrix sharp = sharp_combinatorial(t6()).sharp_matrix;
  const ExactMatrix flipped = apply_signature(sharp, std::vector<int>{1, 1, 1, -1, -1, -1});
  EXPECT_EQ(flipped(0, 1), Rational(3, 5));
  EXPECT_EQ(flipped(2, 3), Rational(-1, 5));
  EXPECT_FALSE(is_entrywise_nonnegative(flipped));
}

TEST(SignatureSearch, Examples) {
  const auto none = exhaustive_signature_search(sharp_combinatorial(t6()).sharp_matrix);
  EXPECT_FALSE(none.signs.has_value());
  EXPECT_EQ(none.scanned, 32U);

  const ExactMatrix t1_sharp = sharp_combinatorial(t1()).sharp_matrix;
  const auto found = exhaustive_signature_search(t1_sharp);
  ASSERT_TRUE(found.signs.has_value());
  EXPECT_TRUE(is_entrywise_nonnegative(apply_signature(t1_sharp, *found.signs)));

  const auto pair = exhaustive_signature_search(symmetric(2, {{1, 2, "-3"}}));
  ASSERT_TRUE(pair.signs.has_value());
  EXPECT_EQ(*pair.signs, (std::vector<int>{1, -1}));

  EXPECT_THROW(exhaustive_signature_search(ExactMatrix::zero(25)), ResourceLimit);
}

TEST(SignatureSearch, ReturnsLexicographicallySmallest) {
  // Block diagonal: vertex 3 is free, so + is chosen for it.
  const ExactMatrix m = symmetric(3, {{1, 2, "-1"}});
  const auto found = exhaustive_signature_search(m);
  ASSERT_TRUE(found.signs.has_value());
  EXPECT_EQ(*found.signs, (std::vector<int>{1, -1, 1}));
  EXPECT_EQ(found.scanned, 3U);
}

TEST(SignatureSimilarity, RandomClassTMembers) {
  corpus::Rng rng(31);
  for (int k = 0; k < 150; ++k) {
    const WeightedTree t = corpus::random_class_t_tree(12, rng);
    const auto summary = maximum_matchings(t);
    const auto witness = sharp_combinatorial(t, summary);
    const SignatureVector s = build_signature_class_T(t, summary);
    const ExactMatrix signed_sharp = apply_signature(witness.sharp_matrix, s);
    EXPECT_TRUE(is_entrywise_nonnegative(signed_sharp));
    for (std::size_t i = 0; i < t.order(); ++i) {
      for (std::size_t j = 0; j < t.order(); ++j) {
        const bool matchable = i != j && matchable_pair(t, summary, i, j).matchable();
        EXPECT_EQ(signed_sharp(i, j).sign() > 0, matchable);
      }
    }
    for (const auto& e : witness.sharp_graph.edges()) {
      const std::size_t d = t.distance(e.u, e.v);
      ASSERT_TRUE(d == 1 || d == 3);
      EXPECT_EQ(e.weight.sign(), d == 1 ? 1 : -1);
    }
    EXPECT_TRUE(exhaustive_signature_search(witness.sharp_matrix).signs.has_value());
  }
}
