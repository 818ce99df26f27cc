#include "sharptree/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sharptree/errors.hpp"

namespace sharptree {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

void normalize(std::vector<WeightedEdge>& edges) {
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
}

std::string edge_name(const std::vector<std::string>& labels, Vertex u, Vertex v) {
  return "(" + labels[u] + "," + labels[v] + ")";
}

// Shared pre-validation; the graph constructor and the tree constructor
// report the same defects through different error types.
template <typename DefectError>
void validate_edges(const std::vector<std::string>& labels, std::vector<WeightedEdge>& edges) {
  {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end())
      throw InvalidGraph("repeated vertex label '" + *dup + "'");
  }
  for (const auto& e : edges) {
    if (e.u >= labels.size() || e.v >= labels.size())
      throw InvalidGraph("edge endpoint out of range");
    if (e.u == e.v) throw DefectError("self-loop at " + labels[e.u]);
    if (e.weight.is_zero()) throw ZeroWeight("edge " + edge_name(labels, e.u, e.v));
  }
  normalize(edges);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw DefectError("duplicate edge " + edge_name(labels, edges[i].u, edges[i].v));
  }
}

struct EdgeListDocument {
  std::vector<std::string> labels;
  std::vector<WeightedEdge> edges;
};

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

EdgeListDocument read_edge_list(std::string_view text) {
  EdgeListDocument doc;
  std::map<std::string, Vertex, std::less<>> index;
  bool declared = false;
  const auto vertex_of = [&](const std::string& label, std::size_t line_no) -> Vertex {
    if (auto it = index.find(label); it != index.end()) return it->second;
    if (declared)
      throw ParseError("line " + std::to_string(line_no) + ": undeclared vertex '" + label + "'");
    index.emplace(label, doc.labels.size());
    doc.labels.push_back(label);
    return doc.labels.size() - 1;
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (line[first] == '#') {
      constexpr std::string_view kHeader = "vertices:";
      auto body = line.substr(first + 1);
      body.remove_prefix(std::min(body.find_first_not_of(" \t"), body.size()));
      if (body.substr(0, kHeader.size()) != kHeader) continue;
      if (declared || !doc.edges.empty())
        throw ParseError("line " + std::to_string(line_no) +
                         ": vertex header must come once, before any edge");
      declared = true;
      for (const auto& label : split_ws(body.substr(kHeader.size()))) {
        if (!index.emplace(label, doc.labels.size()).second)
          throw ParseError("line " + std::to_string(line_no) + ": repeated label '" + label + "'");
        doc.labels.push_back(label);
      }
      continue;
    }

    const auto tokens = split_ws(line);
    if (tokens.size() != 3)
      throw ParseError("line " + std::to_string(line_no) + ": expected '<u> <v> <w>'");
    Rational w;
    try {
      w = Rational::parse(tokens[2]);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.detail());
    }
    const Vertex u = vertex_of(tokens[0], line_no);
    const Vertex v = vertex_of(tokens[1], line_no);
    doc.edges.push_back({u, v, std::move(w)});
  }
  if (doc.labels.empty()) throw ParseError("document declares no vertices");
  return doc;
}

}  // namespace

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph::WeightedGraph(std::vector<std::string> labels, std::vector<WeightedEdge> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  validate_edges<InvalidGraph>(labels_, edges_);
  incidence_.resize(labels_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    incidence_[edges_[i].u].push_back({edges_[i].v, i});
    incidence_[edges_[i].v].push_back({edges_[i].u, i});
  }
  for (auto& list : incidence_) {
    std::sort(list.begin(), list.end(),
              [](const Incidence& a, const Incidence& b) { return a.to < b.to; });
  }
}

WeightedGraph WeightedGraph::from_matrix(std::vector<std::string> labels, const ExactMatrix& m) {
  if (!m.is_square() || m.order() != labels.size())
    throw InvalidGraph("matrix order does not match the label count");
  if (!m.is_symmetric()) throw InvalidGraph("matrix is not symmetric");
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (!m(i, i).is_zero()) throw InvalidGraph("nonzero diagonal entry at " + labels[i]);
    for (std::size_t j = i + 1; j < m.order(); ++j) {
      if (!m(i, j).is_zero()) edges.push_back({i, j, m(i, j)});
    }
  }
  return WeightedGraph(std::move(labels), std::move(edges));
}

std::optional<Vertex> WeightedGraph::find(std::string_view label) const {
  for (Vertex v = 0; v < labels_.size(); ++v) {
    if (labels_[v] == label) return v;
  }
  return std::nullopt;
}

std::optional<std::size_t> WeightedGraph::edge_index(Vertex a, Vertex b) const {
  const auto& list = incidence_[a];
  auto it = std::lower_bound(list.begin(), list.end(), b,
                             [](const Incidence& inc, Vertex x) { return inc.to < x; });
  if (it == list.end() || it->to != b) return std::nullopt;
  return it->edge;
}

bool WeightedGraph::is_connected() const {
  if (labels_.empty()) return true;
  std::vector<bool> seen(order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const auto& inc : incidence_[v]) {
      if (!seen[inc.to]) {
        seen[inc.to] = true;
        ++reached;
        stack.push_back(inc.to);
      }
    }
  }
  return reached == order();
}

ExactMatrix WeightedGraph::adjacency_matrix() const {
  ExactMatrix a = ExactMatrix::zero(order());
  for (const auto& e : edges_) {
    a(e.u, e.v) = e.weight;
    a(e.v, e.u) = e.weight;
  }
  return a;
}

// ---------------------------------------------------------------------------
// WeightedTree

WeightedTree::WeightedTree(std::vector<std::string> labels, std::vector<WeightedEdge> edges) {
  validate_edges<NotATree>(labels, edges);
  if (edges.size() + 1 != labels.size())
    throw NotATree(std::to_string(labels.size()) + " vertices but " +
                   std::to_string(edges.size()) + " edges");
  graph_ = WeightedGraph(std::move(labels), std::move(edges));
  if (!graph_.is_connected()) throw NotATree("graph is disconnected (so it contains a cycle)");

  const std::size_t n = order();
  parent_.assign(n, kNone);
  parent_edge_.assign(n, kNone);
  depth_.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<Vertex> queue;
  queue.push(0);
  seen[0] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop();
    for (const auto& inc : graph_.incident(v)) {
      if (seen[inc.to]) continue;
      seen[inc.to] = true;
      parent_[inc.to] = v;
      parent_edge_[inc.to] = inc.edge;
      depth_[inc.to] = depth_[v] + 1;
      queue.push(inc.to);
    }
  }
}

WeightedTree WeightedTree::from_indexed(std::size_t order, const std::vector<WeightedEdge>& edges) {
  std::vector<std::string> labels(order);
  for (std::size_t i = 0; i < order; ++i) labels[i] = std::to_string(i + 1);
  return WeightedTree(std::move(labels), edges);
}

bool WeightedTree::is_pendant_edge(std::size_t index) const {
  const auto& e = edge(index);
  return is_pendant(e.u) || is_pendant(e.v);
}

Vertex WeightedTree::lowest_common_ancestor(Vertex a, Vertex b) const {
  while (depth_[a] > depth_[b]) a = parent_[a];
  while (depth_[b] > depth_[a]) b = parent_[b];
  while (a != b) {
    a = parent_[a];
    b = parent_[b];
  }
  return a;
}

std::vector<Vertex> WeightedTree::path_vertices(Vertex a, Vertex b) const {
  const Vertex top = lowest_common_ancestor(a, b);
  std::vector<Vertex> up;
  for (Vertex x = a; x != top; x = parent_[x]) up.push_back(x);
  up.push_back(top);
  std::vector<Vertex> down;
  for (Vertex x = b; x != top; x = parent_[x]) down.push_back(x);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::vector<std::size_t> WeightedTree::path_edges(Vertex a, Vertex b) const {
  const Vertex top = lowest_common_ancestor(a, b);
  std::vector<std::size_t> up;
  for (Vertex x = a; x != top; x = parent_[x]) up.push_back(parent_edge_[x]);
  std::vector<std::size_t> down;
  for (Vertex x = b; x != top; x = parent_[x]) down.push_back(parent_edge_[x]);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

std::size_t WeightedTree::distance(Vertex a, Vertex b) const {
  const Vertex top = lowest_common_ancestor(a, b);
  return depth_[a] + depth_[b] - 2 * depth_[top];
}

bool WeightedTree::all_weights_positive() const {
  return std::all_of(edges().begin(), edges().end(),
                     [](const WeightedEdge& e) { return e.weight.sign() > 0; });
}

// ---------------------------------------------------------------------------
// Parsing and formatting

WeightedTree parse_tree(std::string_view text) {
  auto doc = read_edge_list(text);
  return WeightedTree(std::move(doc.labels), std::move(doc.edges));
}

WeightedGraph parse_graph(std::string_view text) {
  auto doc = read_edge_list(text);
  return WeightedGraph(std::move(doc.labels), std::move(doc.edges));
}

std::string format_edge_list(const WeightedGraph& g) {
  std::string out = "# vertices:";
  for (const auto& label : g.labels()) out += " " + label;
  out += "\n";
  for (const auto& e : g.edges()) {
    out += g.label(e.u) + " " + g.label(e.v) + " " + e.weight.str() + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classification

ExactMatrix adjacency_matrix(const WeightedTree& t) { return t.graph().adjacency_matrix(); }

std::optional<Vertex> star_center(const WeightedTree& t) {
  const std::size_t n = t.order();
  if (n < 2) return std::nullopt;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) == n - 1) return v;
  }
  return std::nullopt;
}

bool is_star(const WeightedTree& t) { return star_center(t).has_value(); }

std::optional<std::vector<Vertex>> caterpillar_spine(const WeightedTree& t) {
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) >= 2) inner.push_back(v);
  }
  if (inner.empty()) return inner;
  // Removing the leaves of a tree leaves a tree; it is a path iff no inner
  // vertex has more than two inner neighbours.
  std::vector<std::size_t> inner_degree(t.order(), 0);
  for (Vertex v : inner) {
    for (const auto& inc : t.incident(v)) {
      if (t.degree(inc.to) >= 2) ++inner_degree[v];
    }
    if (inner_degree[v] > 2) return std::nullopt;
  }
  Vertex start = inner.front();
  for (Vertex v : inner) {
    if (inner_degree[v] <= 1) {
      start = v;
      break;
    }
  }
  std::vector<Vertex> spine{start};
  Vertex prev = start;
  Vertex cur = start;
  while (true) {
    std::optional<Vertex> next;
    for (const auto& inc : t.incident(cur)) {
      if (inc.to != prev && t.degree(inc.to) >= 2) next = inc.to;
    }
    if (!next || *next == start) break;
    prev = cur;
    cur = *next;
    spine.push_back(cur);
  }
  return spine;
}

std::optional<std::vector<Vertex>> path_order(const WeightedTree& t) {
  const std::size_t n = t.order();
  if (n == 1) return std::vector<Vertex>{0};
  std::optional<Vertex> start;
  for (Vertex v = 0; v < n; ++v) {
    if (t.degree(v) > 2) return std::nullopt;
    if (t.degree(v) == 1 && !start) start = v;
  }
  std::vector<Vertex> order{*start};
  Vertex prev = *start;
  Vertex cur = *start;
  while (order.size() < n) {
    for (const auto& inc : t.incident(cur)) {
      if (inc.to != prev) {
        prev = cur;
        cur = inc.to;
        break;
      }
    }
    order.push_back(cur);
  }
  return order;
}

ClassTProfile classify(const WeightedTree& t) {
  ClassTProfile p;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_pendant(v)) {
      ++p.pendant_vertex_count;
      continue;
    }
    if (t.degree(v) == 0) continue;  // the single-vertex tree
    std::size_t pendants = 0;
    for (const auto& inc : t.incident(v)) {
      if (t.is_pendant(inc.to)) ++pendants;
    }
    p.non_pendant_vertices.push_back(v);
    p.pendant_counts.push_back(pendants);
  }
  const std::size_t k = p.non_pendant_vertices.size();
  p.is_member = k >= 1 && std::all_of(p.pendant_counts.begin(), p.pendant_counts.end(),
                                      [](std::size_t c) { return c >= 1; });
  p.is_corona = t.order() == 2 ||
                (k >= 1 && t.order() == 2 * k &&
                 std::all_of(p.pendant_counts.begin(), p.pendant_counts.end(),
                             [](std::size_t c) { return c == 1; }));
  p.is_caterpillar = caterpillar_spine(t).has_value();
  p.is_star = is_star(t);
  return p;
}

#ifdef SHARPTREE_CROSS_CHECKS
namespace {

// Greedy leaf matching, deepest vertices first; optimal on trees.
std::size_t greedy_matching_number(const WeightedTree& t) {
  std::vector<Vertex> by_depth(t.order());
  std::iota(by_depth.begin(), by_depth.end(), Vertex{0});
  std::stable_sort(by_depth.begin(), by_depth.end(),
                   [&](Vertex a, Vertex b) { return t.depth(a) > t.depth(b); });
  std::vector<bool> matched(t.order(), false);
  std::size_t size = 0;
  for (Vertex v : by_depth) {
    if (matched[v] || t.depth(v) == 0) continue;
    for (const auto& inc : t.incident(v)) {
      if (t.depth(inc.to) + 1 == t.depth(v) && !matched[inc.to]) {
        matched[v] = matched[inc.to] = true;
        ++size;
      }
    }
  }
  return size;
}

}  // namespace
#endif

bool is_singular(const WeightedTree& t) {
  const std::size_t r = rank(adjacency_matrix(t));
#ifdef SHARPTREE_CROSS_CHECKS
  if (r != 2 * greedy_matching_number(t))
    throw std::logic_error("rank of a tree adjacency matrix differs from twice its matching number");
#endif
  return r < t.order();
}

Bipartition bipartition(const WeightedTree& t) {
  Bipartition b;
  b.side.resize(t.order());
  for (Vertex v = 0; v < t.order(); ++v) {
    b.side[v] = static_cast<int>(t.depth(v) % 2);
    (b.side[v] == 0 ? b.part_a : b.part_b).push_back(v);
  }
  return b;
}

}  // namespace sharptree
