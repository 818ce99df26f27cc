#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "sharptree/rational.hpp"
#include "sharptree/tree.hpp"

// Tree families and random samplers used by the test suites and the
// acceptance harness. Vertices are labelled "1".."n".
namespace sharptree::corpus {

using Rng = std::mt19937_64;

/// One unit-weight representative of every unlabelled tree on n vertices.
std::vector<WeightedTree> free_trees(std::size_t n);

/// Number of rooted unlabelled trees on n vertices, by level sequences.
std::size_t count_rooted_trees(std::size_t n);

/// Canonical string of the unlabelled tree (centre-rooted AHU code).
std::string canonical_form(const WeightedTree& t);

/// p/q with q in 1..4 and 0 < |p/q| <= 5.
Rational random_weight(Rng& rng);
/// p/q with q in 1..4 and 0 < p/q <= 5.
Rational random_positive_weight(Rng& rng);

enum class Weights { unit, signed_rational, positive_rational };

Rational draw(Weights kind, Rng& rng);

/// Uniform labelled tree from a random Pruefer sequence.
WeightedTree random_tree(std::size_t n, Rng& rng, Weights weights);

/// Same shape with vertex v renamed to position perm[v].
WeightedTree relabel(const WeightedTree& t, const std::vector<Vertex>& perm);
WeightedTree shuffled(const WeightedTree& t, Rng& rng);

WeightedTree with_weights(const WeightedTree& t, Weights weights, Rng& rng);

/// Star with the centre as the last vertex and edge i weighted weights[i].
WeightedTree star(const std::vector<Rational>& weights);
/// Unit-weight path v1 - v2 - ... - vn.
WeightedTree path(std::size_t n);
/// Spine v1..vk followed by pendants; spine vertex i gets pendants[i] leaves.
WeightedTree caterpillar(const std::vector<std::size_t>& pendants);
/// Base tree with pendants[i] leaves attached to base vertex i.
WeightedTree attach_pendants(const WeightedTree& base, const std::vector<std::size_t>& pendants);
/// One new leaf per vertex of base.
WeightedTree corona(const WeightedTree& base);

/// Random member of the class (every non-pendant vertex has a pendant
/// neighbour) with at most max_order vertices and positive weights,
/// randomly relabelled.
WeightedTree random_class_t_tree(std::size_t max_order, Rng& rng);

}  // namespace sharptree::corpus
