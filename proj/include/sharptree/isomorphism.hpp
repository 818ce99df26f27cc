#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sharptree/tree.hpp"

namespace sharptree {

inline constexpr std::size_t kIsomorphismMaxOrder = 12;

/// Isomorphism of the underlying unweighted graphs by colour refinement and
/// backtracking. Returns the vertex map a -> b when one exists. Throws
/// ResourceLimit when a search is needed on more than max_order vertices.
std::optional<std::vector<Vertex>> find_isomorphism(const WeightedGraph& a, const WeightedGraph& b,
                                                    std::size_t max_order = kIsomorphismMaxOrder);

inline bool underlying_isomorphic(const WeightedGraph& a, const WeightedGraph& b,
                                  std::size_t max_order = kIsomorphismMaxOrder) {
  return find_isomorphism(a, b, max_order).has_value();
}

}  // namespace sharptree
