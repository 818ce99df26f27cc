#pragma once

#include <cstddef>
#include <vector>

#include "sharptree/rational.hpp"
#include "sharptree/tree.hpp"

namespace sharptree {

inline constexpr std::size_t kDefaultMatchingCap = 1'000'000;

struct EnumerationLimits {
  std::size_t max_matchings = kDefaultMatchingCap;
};

/// Set of pairwise disjoint tree edges with the product of their weights.
struct Matching {
  std::vector<std::size_t> edges;  // sorted edge indices
  Rational weight_product{1};

  bool contains(std::size_t edge) const;
  friend bool operator==(const Matching&, const Matching&) = default;
};

struct MatchingSummary {
  std::size_t matching_number = 0;
  std::vector<Matching> all_max_matchings;  // lexicographic by edge indices
  Rational m_value;                         // sum of squared weight products
  std::vector<std::size_t> alternating_census;  // alternating paths per start vertex
};

/// Everything the group-inverse formula needs about one unordered pair.
struct MatchablePairRecord {
  Vertex first = 0;
  Vertex second = 0;
  std::vector<std::size_t> witnesses;  // indices into all_max_matchings
  Rational alpha_path;                 // signed product of the path weights
  std::vector<Rational> alpha_bars;    // off-path matching product per witness
  Rational mu;

  bool matchable() const { return !witnesses.empty(); }
};

struct AlternatingPath {
  Vertex first = 0;  // first < second
  Vertex second = 0;
  std::size_t length = 0;

  friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

/// Size of a maximum matching, by the usual rooted-tree recurrence.
std::size_t matching_number(const WeightedTree& t);

/// Enumerates every maximum matching. Throws ResourceLimit once more than
/// limits.max_matchings have been found.
MatchingSummary maximum_matchings(const WeightedTree& t, EnumerationLimits limits = {});

/// Whether the a-b tree path alternates in/out of M with both end edges in M.
bool is_alternating(const WeightedTree& t, const Matching& m, Vertex a, Vertex b);

/// A maximum matching containing the given edge. Pendant edges always lie
/// in one (the swap argument is applied to the first enumerated matching);
/// for other edges the enumeration is searched and NotApplicable is thrown
/// when none contains it.
Matching pendant_edge_in_some_matching(const WeightedTree& t, std::size_t edge,
                                       const MatchingSummary& summary);
Matching pendant_edge_in_some_matching(const WeightedTree& t, std::size_t edge);

/// Record for a pair, testing each maximum matching along the tree path.
MatchablePairRecord matchable_pair(const WeightedTree& t, const MatchingSummary& summary, Vertex i,
                                   Vertex j);
MatchablePairRecord matchable_pair(const WeightedTree& t, Vertex i, Vertex j);

/// Records for every maximally matchable pair (first < second), found by
/// walking alternating paths out of every start vertex of every maximum
/// matching. Ordered by (first, second).
std::vector<MatchablePairRecord> matchable_pairs(const WeightedTree& t,
                                                 const MatchingSummary& summary);

std::vector<AlternatingPath> alternating_paths(const WeightedTree& t,
                                               const MatchingSummary& summary);
std::vector<AlternatingPath> alternating_paths(const WeightedTree& t);

/// Edge indices that lie in no maximum matching.
std::vector<std::size_t> edges_in_no_maximum_matching(const WeightedTree& t,
                                                      const MatchingSummary& summary);

}  // namespace sharptree
