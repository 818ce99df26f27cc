#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sharptree/matching.hpp"
#include "sharptree/matrix.hpp"
#include "sharptree/tree.hpp"

namespace sharptree {

struct SignatureVector {
  Vertex root = 0;                     // a pendant vertex
  std::vector<std::size_t> n_values;   // edges in no maximum matching on the root path
  std::vector<int> signs;              // (-1)^n_values
};

/// Signs that make S A^# S entrywise non-negative for positively weighted
/// trees of the class. Root is the lowest-indexed pendant vertex. Throws
/// NotInClassT or NonPositiveWeights.
SignatureVector build_signature_class_T(const WeightedTree& t, const MatchingSummary& summary);
SignatureVector build_signature_class_T(const WeightedTree& t);

/// Entry (i, j) becomes s_i s_j M(i, j). Throws DimensionMismatch.
ExactMatrix apply_signature(const ExactMatrix& m, std::span<const int> signs);
inline ExactMatrix apply_signature(const ExactMatrix& m, const SignatureVector& s) {
  return apply_signature(m, s.signs);
}

bool is_entrywise_nonnegative(const ExactMatrix& m);

inline constexpr std::size_t kSignatureSearchMaxOrder = 24;

struct SignatureSearchResult {
  std::optional<std::vector<int>> signs;  // lexicographically smallest, + before -
  std::uint64_t scanned = 0;              // sign vectors examined
};

/// Tries every sign vector with the first sign fixed to +1, in
/// lexicographic order. Throws ResourceLimit above max_order.
SignatureSearchResult exhaustive_signature_search(const ExactMatrix& m,
                                                  std::size_t max_order = kSignatureSearchMaxOrder);

}  // namespace sharptree
