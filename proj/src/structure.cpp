#include "sharptree/structure.hpp"

#include "sharptree/errors.hpp"
#include "sharptree/isomorphism.hpp"

namespace sharptree {

bool is_tree_graph(const WeightedGraph& g) {
  return g.is_connected() && g.edge_count() + 1 == g.order();
}

StructureReport analyze_structure(const WeightedTree& t, const MatchingSummary& summary,
                                  const GroupInverseWitness& sharp) {
  const WeightedGraph& g = sharp.sharp_graph;
  StructureReport r;
  r.singular = is_singular(t);
  r.sharp_connected = g.is_connected();
  const Bipartition parts = bipartition(t);
  r.sharp_bipartite = true;
  for (const auto& e : g.edges()) {
    if (parts.side[e.u] == parts.side[e.v]) r.sharp_bipartite = false;
  }
  r.sharp_is_tree = is_tree_graph(g);
  r.sharp_edge_count = g.edge_count();
  r.alternating_path_count = alternating_paths(t, summary).size();
  r.four_conditions.alt_path_count_is_n_minus_1 = r.alternating_path_count + 1 == t.order();
  r.four_conditions.sharp_is_tree = r.sharp_is_tree;
  r.four_conditions.is_star = is_star(t);
  r.four_conditions.sharp_isomorphic_underlying = underlying_isomorphic(t.graph(), g);
  r.has_four_cycle = find_four_cycle(g).has_value();
  r.degree_table.resize(t.order());
  for (Vertex v = 0; v < t.order(); ++v) r.degree_table[v] = g.degree(v);
  return r;
}

StructureReport analyze_structure(const WeightedTree& t, EnumerationLimits limits) {
  const MatchingSummary summary = maximum_matchings(t, limits);
  return analyze_structure(t, summary, sharp_combinatorial(t, summary));
}

std::optional<FourCycle> find_four_cycle(const WeightedGraph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      std::optional<Vertex> first;
      for (const auto& inc : g.incident(a)) {
        if (inc.to == c || !g.adjacent(inc.to, c)) continue;
        if (!first) {
          first = inc.to;
        } else {
          return FourCycle{a, *first, c, inc.to};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<FourCycle> four_cycle_witness(const WeightedTree& t, const MatchingSummary& summary,
                                            const WeightedGraph& sharp) {
  const auto unused = edges_in_no_maximum_matching(t, summary);
  std::vector<bool> in_some(t.edges().size(), true);
  for (std::size_t e : unused) in_some[e] = false;

  for (const auto& m : summary.all_max_matchings) {
    std::vector<std::optional<Vertex>> partner(t.order());
    for (std::size_t e : m.edges) {
      partner[t.edge(e).u] = t.edge(e).v;
      partner[t.edge(e).v] = t.edge(e).u;
    }
    for (std::size_t e = 0; e < t.edges().size(); ++e) {
      if (m.contains(e) || !in_some[e]) continue;
      const Vertex b = t.edge(e).u;
      const Vertex c = t.edge(e).v;
      if (!partner[b] || !partner[c]) continue;
      const FourCycle cycle{*partner[b], b, c, *partner[c]};
      // Confirm the cycle in the sharp graph itself.
      if (sharp.adjacent(cycle[0], cycle[1]) && sharp.adjacent(cycle[1], cycle[2]) &&
          sharp.adjacent(cycle[2], cycle[3]) && sharp.adjacent(cycle[3], cycle[0]))
        return cycle;
    }
  }
  return find_four_cycle(sharp);
}

std::optional<FourCycle> four_cycle_witness(const WeightedTree& t) {
  const MatchingSummary summary = maximum_matchings(t);
  return four_cycle_witness(t, summary, sharp_combinatorial(t, summary).sharp_graph);
}

OddPathReport odd_path_report(const WeightedTree& t, const GroupInverseWitness& sharp) {
  const auto order = path_order(t);
  if (!order || t.order() < 3 || t.order() % 2 == 0)
    throw NotOddPath("tree is not a path on an odd number (>= 3) of vertices");
  const WeightedGraph& g = sharp.sharp_graph;
  const std::size_t n = t.order();
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[(*order)[k]] = k + 1;

  OddPathReport r;
  r.half_length = (n - 1) / 2;
  r.path_is_spanning_subtree = true;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!g.adjacent((*order)[k], (*order)[k + 1])) r.path_is_spanning_subtree = false;
  }
  r.sharp_edge_implies_odd_sum = true;
  for (const auto& e : g.edges()) {
    if ((position[e.u] + position[e.v]) % 2 == 0) r.sharp_edge_implies_odd_sum = false;
  }
  r.odd_sum_implies_sharp_edge = true;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if ((position[a] + position[b]) % 2 == 1 && !g.adjacent(a, b))
        r.odd_sum_implies_sharp_edge = false;
    }
  }
  r.min_sharp_degree = n;
  for (Vertex v = 0; v < n; ++v) r.min_sharp_degree = std::min(r.min_sharp_degree, g.degree(v));
  if (r.half_length >= 2) r.no_pendant_vertex = r.min_sharp_degree >= 2;
  return r;
}

OddPathReport odd_path_report(const WeightedTree& t) {
  if (!path_order(t) || t.order() < 3 || t.order() % 2 == 0)
    throw NotOddPath("tree is not a path on an odd number (>= 3) of vertices");
  return odd_path_report(t, sharp_combinatorial(t));
}

std::size_t caterpillar_edge_count(const WeightedTree& t) {
  const ClassTProfile profile = classify(t);
  if (!profile.is_member) throw NotApplicable("tree is not in the class");
  if (profile.is_star) throw NotApplicable("tree is a star");
  const auto spine = caterpillar_spine(t);
  if (!spine) throw NotApplicable("tree is not a caterpillar");

  std::vector<std::size_t> pendants(t.order(), 0);
  for (std::size_t k = 0; k < profile.non_pendant_vertices.size(); ++k)
    pendants[profile.non_pendant_vertices[k]] = profile.pendant_counts[k];
  std::size_t count = profile.pendant_vertex_count;
  for (std::size_t k = 0; k + 1 < spine->size(); ++k)
    count += pendants[(*spine)[k]] * pendants[(*spine)[k + 1]];
  return count;
}

std::vector<DegreeCheckRow> degree_check_class_T(const WeightedTree& t, const WeightedGraph& sharp) {
  const ClassTProfile profile = classify(t);
  if (!profile.is_member) throw NotInClassT("some non-pendant vertex has no pendant neighbour");
  std::vector<DegreeCheckRow> rows;
  for (std::size_t k = 0; k < profile.non_pendant_vertices.size(); ++k) {
    const Vertex v = profile.non_pendant_vertices[k];
    rows.push_back({v, profile.pendant_counts[k], sharp.degree(v)});
  }
  return rows;
}

std::vector<DegreeCheckRow> degree_check_class_T(const WeightedTree& t) {
  if (!classify(t).is_member) throw NotInClassT("some non-pendant vertex has no pendant neighbour");
  return degree_check_class_T(t, sharp_combinatorial(t).sharp_graph);
}

}  // namespace sharptree
