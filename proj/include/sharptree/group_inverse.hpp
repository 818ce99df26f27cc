#pragma once

#include <string_view>

#include "sharptree/matching.hpp"
#include "sharptree/matrix.hpp"
#include "sharptree/tree.hpp"

namespace sharptree {

enum class SharpMethod { combinatorial, factorization, bipartite_block, star_closed_form };

std::string_view to_string(SharpMethod method);

/// A^# of a tree together with the graph it defines and how it was obtained.
struct GroupInverseWitness {
  WeightedTree source;
  ExactMatrix sharp_matrix;
  WeightedGraph sharp_graph;
  Rational m_value;
  SharpMethod method = SharpMethod::combinatorial;
};

/// Entry (i, j) = mu_T(v_i, v_j) / m(T) over maximally matchable pairs.
GroupInverseWitness sharp_combinatorial(const WeightedTree& t, const MatchingSummary& summary);
GroupInverseWitness sharp_combinatorial(const WeightedTree& t, EnumerationLimits limits = {});

/// Group inverse of a symmetric matrix from an exact full-rank factorization
/// A = F G (F = pivot columns, G = nonzero rows of the reduced echelon form):
/// A^# = F (G F)^{-2} G. Throws SingularCore if G F is singular, which means
/// A has index greater than one.
ExactMatrix sharp_factorization(const ExactMatrix& a);

/// A^# assembled from the bipartite blocks of A: with C the (smaller part) x
/// (larger part) block, the off-diagonal blocks are (C C^T)^# C and its
/// transpose.
ExactMatrix sharp_bipartite_block(const WeightedTree& t);

/// A^# = A / p with p the sum of squared weights. Throws NotAStar.
GroupInverseWitness sharp_star(const WeightedTree& t);

/// AXA = A, XAX = X and AX = XA, exactly.
bool verify_axioms(const ExactMatrix& a, const ExactMatrix& x);

}  // namespace sharptree
