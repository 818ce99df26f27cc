#include "sharptree/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

#include "sharptree/errors.hpp"

namespace sharptree {

namespace {

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

Rational signed_path_weight(const WeightedTree& t, const std::vector<std::size_t>& path) {
  Rational product{1};
  for (std::size_t e : path) product *= t.edge(e).weight;
  return path.size() % 4 == 3 ? -product : product;
}

// partner_edge[v] = index of the matching edge covering v, or kUnmatched.
std::vector<std::size_t> cover(const WeightedTree& t, const Matching& m) {
  std::vector<std::size_t> partner_edge(t.order(), kUnmatched);
  for (std::size_t e : m.edges) {
    partner_edge[t.edge(e).u] = e;
    partner_edge[t.edge(e).v] = e;
  }
  return partner_edge;
}

Vertex other_end(const WeightedEdge& e, Vertex v) { return e.u == v ? e.v : e.u; }

// Walks every alternating path starting at `start` and reports each far
// endpoint together with the product of the matching weights on the path.
void walk_alternating(const WeightedTree& t, const std::vector<std::size_t>& partner_edge,
                      Vertex start,
                      const std::function<void(Vertex, std::size_t, const Rational&)>& visit) {
  if (partner_edge[start] == kUnmatched) return;
  struct Frame {
    Vertex at;      // endpoint just reached through a matching edge
    Vertex before;  // vertex on the other side of that matching edge
    std::size_t length;
    Rational on_path;
  };
  const auto& first = t.edge(partner_edge[start]);
  std::vector<Frame> stack{{other_end(first, start), start, 1, first.weight}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    visit(f.at, f.length, f.on_path);
    for (const auto& inc : t.incident(f.at)) {
      if (inc.to == f.before || inc.edge == partner_edge[f.at]) continue;
      const std::size_t next_edge = partner_edge[inc.to];
      if (next_edge == kUnmatched) continue;
      const auto& matched = t.edge(next_edge);
      stack.push_back({other_end(matched, inc.to), inc.to, f.length + 2, f.on_path * matched.weight});
    }
  }
}

}  // namespace

bool Matching::contains(std::size_t edge) const {
  return std::binary_search(edges.begin(), edges.end(), edge);
}

std::size_t matching_number(const WeightedTree& t) {
  const std::size_t n = t.order();
  // Children are processed before parents when vertices are visited by
  // decreasing depth.
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return t.depth(a) > t.depth(b); });
  std::vector<std::size_t> best(n, 0);  // max matching inside the subtree
  std::vector<std::size_t> free(n, 0);  // same, with the subtree root unmatched
  for (Vertex v : order) {
    std::size_t unmatched_root = 0;
    for (const auto& inc : t.incident(v)) {
      if (t.depth(inc.to) == t.depth(v) + 1) unmatched_root += best[inc.to];
    }
    std::size_t with_root = unmatched_root;
    for (const auto& inc : t.incident(v)) {
      if (t.depth(inc.to) == t.depth(v) + 1)
        with_root = std::max(with_root, unmatched_root - best[inc.to] + free[inc.to] + 1);
    }
    free[v] = unmatched_root;
    best[v] = with_root;
  }
  return n == 0 ? 0 : best[0];
}

MatchingSummary maximum_matchings(const WeightedTree& t, EnumerationLimits limits) {
  MatchingSummary summary;
  const std::size_t n = t.order();
  summary.matching_number = matching_number(t);
  const std::size_t spare = n - 2 * summary.matching_number;

  // Branch on the lowest undecided vertex: match it to a higher free
  // neighbour, or leave it exposed while the exposure budget allows.
  std::vector<bool> matched(n, false);
  std::vector<std::size_t> chosen;
  std::size_t exposed = 0;
  std::function<void(Vertex)> branch = [&](Vertex v) {
    while (v < n && matched[v]) ++v;
    if (v == n) {
      Matching m;
      m.edges = chosen;
      std::sort(m.edges.begin(), m.edges.end());
      for (std::size_t e : m.edges) m.weight_product *= t.edge(e).weight;
      summary.all_max_matchings.push_back(std::move(m));
      if (summary.all_max_matchings.size() > limits.max_matchings)
        throw ResourceLimit("more than " + std::to_string(limits.max_matchings) +
                            " maximum matchings");
      return;
    }
    matched[v] = true;
    for (const auto& inc : t.incident(v)) {
      if (inc.to < v || matched[inc.to]) continue;
      matched[inc.to] = true;
      chosen.push_back(inc.edge);
      branch(v + 1);
      chosen.pop_back();
      matched[inc.to] = false;
    }
    if (exposed < spare) {
      ++exposed;
      branch(v + 1);
      --exposed;
    }
    matched[v] = false;
  };
  branch(0);

  std::sort(summary.all_max_matchings.begin(), summary.all_max_matchings.end(),
            [](const Matching& a, const Matching& b) { return a.edges < b.edges; });
  summary.m_value = 0;
  for (const auto& m : summary.all_max_matchings) summary.m_value += m.weight_product * m.weight_product;

  summary.alternating_census.assign(n, 0);
  for (const auto& record : matchable_pairs(t, summary)) {
    ++summary.alternating_census[record.first];
    ++summary.alternating_census[record.second];
  }
  return summary;
}

bool is_alternating(const WeightedTree& t, const Matching& m, Vertex a, Vertex b) {
  if (a == b) return false;
  const auto path = t.path_edges(a, b);
  if (path.size() % 2 == 0) return false;
  for (std::size_t k = 0; k < path.size(); ++k) {
    if (m.contains(path[k]) != (k % 2 == 0)) return false;
  }
  return true;
}

Matching pendant_edge_in_some_matching(const WeightedTree& t, std::size_t edge,
                                       const MatchingSummary& summary) {
  const auto& all = summary.all_max_matchings;
  if (!t.is_pendant_edge(edge)) {
    auto it = std::find_if(all.begin(), all.end(), [&](const Matching& m) { return m.contains(edge); });
    if (it == all.end()) throw NotApplicable("edge lies in no maximum matching");
    return *it;
  }
  const Matching& base = all.front();
  if (base.contains(edge)) return base;
  const auto& e = t.edge(edge);
  const Vertex inner = t.is_pendant(e.u) && t.order() > 2 ? e.v : e.u;
  const auto partner_edge = cover(t, base);
  if (partner_edge[inner] == kUnmatched)
    throw std::logic_error("maximum matching leaves both ends of a pendant edge exposed");
  Matching swapped;
  for (std::size_t f : base.edges) {
    if (f != partner_edge[inner]) swapped.edges.push_back(f);
  }
  swapped.edges.push_back(edge);
  std::sort(swapped.edges.begin(), swapped.edges.end());
  auto it = std::find_if(all.begin(), all.end(),
                         [&](const Matching& m) { return m.edges == swapped.edges; });
  if (it == all.end()) throw std::logic_error("swapped matching missing from the enumeration");
  return *it;
}

Matching pendant_edge_in_some_matching(const WeightedTree& t, std::size_t edge) {
  return pendant_edge_in_some_matching(t, edge, maximum_matchings(t));
}

MatchablePairRecord matchable_pair(const WeightedTree& t, const MatchingSummary& summary, Vertex i,
                                   Vertex j) {
  MatchablePairRecord record;
  record.first = std::min(i, j);
  record.second = std::max(i, j);
  record.alpha_path = 0;
  record.mu = 0;
  if (i == j) return record;
  const auto path = t.path_edges(record.first, record.second);
  Rational sum_of_squares{0};
  for (std::size_t w = 0; w < summary.all_max_matchings.size(); ++w) {
    const Matching& m = summary.all_max_matchings[w];
    if (!is_alternating(t, m, record.first, record.second)) continue;
    Rational off_path{1};
    for (std::size_t e : m.edges) {
      if (std::find(path.begin(), path.end(), e) == path.end()) off_path *= t.edge(e).weight;
    }
    record.witnesses.push_back(w);
    sum_of_squares += off_path * off_path;
    record.alpha_bars.push_back(std::move(off_path));
  }
  if (record.matchable()) {
    record.alpha_path = signed_path_weight(t, path);
    record.mu = record.alpha_path * sum_of_squares;
  }
  return record;
}

MatchablePairRecord matchable_pair(const WeightedTree& t, Vertex i, Vertex j) {
  return matchable_pair(t, maximum_matchings(t), i, j);
}

std::vector<MatchablePairRecord> matchable_pairs(const WeightedTree& t,
                                                 const MatchingSummary& summary) {
  std::map<std::pair<Vertex, Vertex>, MatchablePairRecord> found;
  for (std::size_t w = 0; w < summary.all_max_matchings.size(); ++w) {
    const Matching& m = summary.all_max_matchings[w];
    const auto partner_edge = cover(t, m);
    for (Vertex start = 0; start < t.order(); ++start) {
      walk_alternating(t, partner_edge, start,
                       [&](Vertex end, std::size_t, const Rational& on_path) {
                         if (end < start) return;
                         auto& record = found[{start, end}];
                         record.first = start;
                         record.second = end;
                         record.witnesses.push_back(w);
                         record.alpha_bars.push_back(m.weight_product / on_path);
                       });
    }
  }
  std::vector<MatchablePairRecord> out;
  out.reserve(found.size());
  for (auto& [key, record] : found) {
    record.alpha_path = signed_path_weight(t, t.path_edges(record.first, record.second));
    Rational sum_of_squares{0};
    for (const auto& bar : record.alpha_bars) sum_of_squares += bar * bar;
    record.mu = record.alpha_path * sum_of_squares;
    out.push_back(std::move(record));
  }
  return out;
}

std::vector<AlternatingPath> alternating_paths(const WeightedTree& t,
                                               const MatchingSummary& summary) {
  std::vector<AlternatingPath> out;
  for (const auto& record : matchable_pairs(t, summary)) {
    out.push_back({record.first, record.second, t.distance(record.first, record.second)});
  }
  return out;
}

std::vector<AlternatingPath> alternating_paths(const WeightedTree& t) {
  return alternating_paths(t, maximum_matchings(t));
}

std::vector<std::size_t> edges_in_no_maximum_matching(const WeightedTree& t,
                                                      const MatchingSummary& summary) {
  std::vector<bool> used(t.edges().size(), false);
  for (const auto& m : summary.all_max_matchings) {
    for (std::size_t e : m.edges) used[e] = true;
  }
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < used.size(); ++e) {
    if (!used[e]) out.push_back(e);
  }
  return out;
}

}  // namespace sharptree
