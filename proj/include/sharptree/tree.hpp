#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sharptree/matrix.hpp"
#include "sharptree/rational.hpp"

namespace sharptree {

/// Dense vertex index, 0-based, in the order the vertices were declared.
using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  Rational weight;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

struct Incidence {
  Vertex to;
  std::size_t edge;  // index into edges()
};

/// Undirected loop-free weighted graph with nonzero weights. Edges are kept
/// sorted by (u, v); edge indices refer to that order.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  /// Throws InvalidGraph on loops, duplicate pairs, unknown vertices or
  /// repeated labels, and ZeroWeight on a zero weight.
  WeightedGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges);

  /// Graph of the off-diagonal nonzero pattern of a symmetric matrix.
  /// Throws InvalidGraph if the matrix is not symmetric or has a nonzero
  /// diagonal entry.
  static WeightedGraph from_matrix(std::vector<std::string> labels, const ExactMatrix& m);

  std::size_t order() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Vertex v) const { return labels_[v]; }
  std::optional<Vertex> find(std::string_view label) const;

  const std::vector<WeightedEdge>& edges() const { return edges_; }
  const WeightedEdge& edge(std::size_t index) const { return edges_[index]; }
  const std::vector<Incidence>& incident(Vertex v) const { return incidence_[v]; }
  std::size_t degree(Vertex v) const { return incidence_[v].size(); }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }

  bool is_connected() const;
  ExactMatrix adjacency_matrix() const;

  friend bool operator==(const WeightedGraph& lhs, const WeightedGraph& rhs) {
    return lhs.labels_ == rhs.labels_ && lhs.edges_ == rhs.edges_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
};

/// A weighted graph that is verified to be a tree, rooted internally at
/// vertex 0 so tree paths can be read off parent pointers.
class WeightedTree {
 public:
  /// Throws NotATree (loop, duplicate edge, cycle, disconnected, wrong edge
  /// count) or ZeroWeight.
  WeightedTree(std::vector<std::string> labels, std::vector<WeightedEdge> edges);

  /// Unlabelled convenience: vertices are named "1".."n" and the edges are
  /// given as 0-based (u, v, w) triples.
  static WeightedTree from_indexed(std::size_t order, const std::vector<WeightedEdge>& edges);

  const WeightedGraph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  const std::vector<WeightedEdge>& edges() const { return graph_.edges(); }
  const WeightedEdge& edge(std::size_t index) const { return graph_.edge(index); }
  const std::vector<std::string>& labels() const { return graph_.labels(); }
  const std::string& label(Vertex v) const { return graph_.label(v); }
  std::size_t degree(Vertex v) const { return graph_.degree(v); }
  const std::vector<Incidence>& incident(Vertex v) const { return graph_.incident(v); }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const { return graph_.edge_index(a, b); }

  bool is_pendant(Vertex v) const { return degree(v) == 1; }
  bool is_pendant_edge(std::size_t index) const;

  /// Edge indices of the unique a-b path, in order from a to b.
  std::vector<std::size_t> path_edges(Vertex a, Vertex b) const;
  /// Vertices of the unique a-b path, including both ends.
  std::vector<Vertex> path_vertices(Vertex a, Vertex b) const;
  std::size_t distance(Vertex a, Vertex b) const;
  std::size_t depth(Vertex v) const { return depth_[v]; }

  bool all_weights_positive() const;

  friend bool operator==(const WeightedTree& lhs, const WeightedTree& rhs) {
    return lhs.graph_ == rhs.graph_;
  }

 private:
  Vertex lowest_common_ancestor(Vertex a, Vertex b) const;

  WeightedGraph graph_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> parent_edge_;
  std::vector<std::size_t> depth_;
};

/// Parses the edge-list format: one `<u> <v> <w>` edge per line, `#` lines
/// ignored, weights as integer, `p/q` or finite decimal. A
/// `# vertices: a b c` line fixes the vertex order (and admits the
/// single-vertex tree); otherwise vertices are ordered by first appearance.
WeightedTree parse_tree(std::string_view text);
/// Same format, no tree requirement.
WeightedGraph parse_graph(std::string_view text);

/// Inverse of parse_tree/parse_graph: header line plus canonical edge list.
std::string format_edge_list(const WeightedGraph& g);

ExactMatrix adjacency_matrix(const WeightedTree& t);

struct ClassTProfile {
  std::vector<Vertex> non_pendant_vertices;
  std::vector<std::size_t> pendant_counts;  // aligned with non_pendant_vertices
  std::size_t pendant_vertex_count = 0;
  bool is_member = false;
  bool is_corona = false;
  bool is_caterpillar = false;
  bool is_star = false;
};

ClassTProfile classify(const WeightedTree& t);

/// One vertex adjacent to all others (K2 counts as K_{1,1}).
bool is_star(const WeightedTree& t);
std::optional<Vertex> star_center(const WeightedTree& t);

/// Non-pendant vertices in path order when they induce a path, the first
/// endpoint being the lower-indexed one. Empty optional when not a
/// caterpillar; an empty spine for trees with no non-pendant vertex.
std::optional<std::vector<Vertex>> caterpillar_spine(const WeightedTree& t);

/// Vertices in path order when the tree is a path (lower-indexed end first).
std::optional<std::vector<Vertex>> path_order(const WeightedTree& t);

/// Exact rank test. With SHARPTREE_CROSS_CHECKS the rank is compared against
/// twice the matching number and a mismatch throws std::logic_error.
bool is_singular(const WeightedTree& t);

struct Bipartition {
  std::vector<Vertex> part_a;  // even distance from vertex 0
  std::vector<Vertex> part_b;
  std::vector<int> side;       // 0 for part_a, 1 for part_b
};

Bipartition bipartition(const WeightedTree& t);

}  // namespace sharptree
