#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "sharptree/group_inverse.hpp"
#include "sharptree/matching.hpp"
#include "sharptree/tree.hpp"

namespace sharptree {

/// The four statements that are equivalent for singular trees.
struct FourConditions {
  bool alt_path_count_is_n_minus_1 = false;
  bool sharp_is_tree = false;
  bool is_star = false;
  bool sharp_isomorphic_underlying = false;

  bool agree() const {
    return alt_path_count_is_n_minus_1 == sharp_is_tree && sharp_is_tree == is_star &&
           is_star == sharp_isomorphic_underlying;
  }
};

struct StructureReport {
  bool singular = false;
  bool sharp_connected = false;
  bool sharp_bipartite = false;  // every sharp edge crosses the tree's bipartition
  bool sharp_is_tree = false;
  std::size_t sharp_edge_count = 0;
  std::size_t alternating_path_count = 0;
  FourConditions four_conditions;
  bool has_four_cycle = false;
  std::vector<std::size_t> degree_table;  // degree in T# per vertex
};

/// Connected and exactly n - 1 edges.
bool is_tree_graph(const WeightedGraph& g);

StructureReport analyze_structure(const WeightedTree& t, const MatchingSummary& summary,
                                  const GroupInverseWitness& sharp);
StructureReport analyze_structure(const WeightedTree& t, EnumerationLimits limits = {});

using FourCycle = std::array<Vertex, 4>;

/// A 4-cycle (a, b, c, d) of T#. First tries the length-3 alternating path
/// a-b-c-d whose middle edge lies in another maximum matching; otherwise
/// searches T# for two vertices with two common neighbours.
std::optional<FourCycle> four_cycle_witness(const WeightedTree& t, const MatchingSummary& summary,
                                            const WeightedGraph& sharp);
std::optional<FourCycle> four_cycle_witness(const WeightedTree& t);

/// Any 4-cycle of g, smallest (a, c) pair first.
std::optional<FourCycle> find_four_cycle(const WeightedGraph& g);

struct OddPathReport {
  std::size_t half_length = 0;           // the path has 2 * half_length + 1 vertices
  bool path_is_spanning_subtree = false;  // every consecutive pair is a sharp edge
  bool sharp_edge_implies_odd_sum = false;
  bool odd_sum_implies_sharp_edge = false;
  std::optional<bool> no_pendant_vertex;  // only meaningful for half_length >= 2
  std::size_t min_sharp_degree = 0;

  bool parity_iff() const { return sharp_edge_implies_odd_sum && odd_sum_implies_sharp_edge; }
};

/// Positions i, j are 1-based along the path starting at its lower-indexed
/// end. Throws NotOddPath unless t is a path on an odd number >= 3 of vertices.
OddPathReport odd_path_report(const WeightedTree& t, const GroupInverseWitness& sharp);
OddPathReport odd_path_report(const WeightedTree& t);

/// (number of pendant vertices) + sum of t_i t_{i+1} along the spine.
/// Throws NotApplicable unless t is a caterpillar in the class, not a star.
std::size_t caterpillar_edge_count(const WeightedTree& t);

struct DegreeCheckRow {
  Vertex vertex = 0;
  std::size_t pendant_neighbours = 0;
  std::size_t sharp_degree = 0;

  bool holds() const { return pendant_neighbours == sharp_degree; }
};

/// Sharp degree against pendant-neighbour count for every non-pendant
/// vertex. Throws NotInClassT.
std::vector<DegreeCheckRow> degree_check_class_T(const WeightedTree& t, const WeightedGraph& sharp);
std::vector<DegreeCheckRow> degree_check_class_T(const WeightedTree& t);

}  // namespace sharptree
