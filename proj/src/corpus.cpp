#include "sharptree/corpus.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sharptree::corpus {

namespace {

std::vector<WeightedEdge> unit_edges_from_parents(const std::vector<std::size_t>& parent) {
  std::vector<WeightedEdge> edges;
  for (std::size_t v = 1; v < parent.size(); ++v) edges.push_back({parent[v], v, Rational(1)});
  return edges;
}

// Beyer-Hedetniemi successor on level sequences (root at level 1). Calls
// visit with the parent array of each rooted tree.
void for_each_rooted_tree(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (n == 0) return;
  std::vector<std::size_t> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = i + 1;
  std::vector<std::size_t> parent(n, 0);
  while (true) {
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t j = i - 1;
      while (level[j] != level[i] - 1) --j;
      parent[i] = j;
    }
    visit(parent);
    std::size_t p = n;
    for (std::size_t i = n; i-- > 1;) {
      if (level[i] > 2) {
        p = i;
        break;
      }
    }
    if (p == n) break;
    std::size_t q = p - 1;
    while (level[q] != level[p] - 1) --q;
    for (std::size_t i = p; i < n; ++i) level[i] = level[i - (p - q)];
  }
}

std::string ahu(const WeightedTree& t, Vertex v, Vertex from) {
  std::vector<std::string> children;
  for (const auto& inc : t.incident(v)) {
    if (inc.to != from) children.push_back(ahu(t, inc.to, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  return out + ")";
}

std::vector<Vertex> centres(const WeightedTree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (const auto& inc : t.incident(leaf)) {
        if (--degree[inc.to] == 1) next.push_back(inc.to);
      }
      degree[leaf] = 0;
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::size_t count_rooted_trees(std::size_t n) {
  std::size_t count = 0;
  for_each_rooted_tree(n, [&](const std::vector<std::size_t>&) { ++count; });
  return count;
}

std::string canonical_form(const WeightedTree& t) {
  std::string best;
  for (Vertex c : centres(t)) {
    std::string code = ahu(t, c, c);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

std::vector<WeightedTree> free_trees(std::size_t n) {
  std::vector<WeightedTree> out;
  std::set<std::string> seen;
  for_each_rooted_tree(n, [&](const std::vector<std::size_t>& parent) {
    WeightedTree t = WeightedTree::from_indexed(n, unit_edges_from_parents(parent));
    if (seen.insert(canonical_form(t)).second) out.push_back(std::move(t));
  });
  return out;
}

Rational random_weight(Rng& rng) {
  const long q = std::uniform_int_distribution<long>(1, 4)(rng);
  long p = 0;
  while (p == 0) p = std::uniform_int_distribution<long>(-5 * q, 5 * q)(rng);
  return Rational(p, q);
}

Rational random_positive_weight(Rng& rng) {
  const long q = std::uniform_int_distribution<long>(1, 4)(rng);
  const long p = std::uniform_int_distribution<long>(1, 5 * q)(rng);
  return Rational(p, q);
}

Rational draw(Weights kind, Rng& rng) {
  switch (kind) {
    case Weights::unit: return Rational(1);
    case Weights::signed_rational: return random_weight(rng);
    case Weights::positive_rational: return random_positive_weight(rng);
  }
  return Rational(1);
}

WeightedTree random_tree(std::size_t n, Rng& rng, Weights weights) {
  if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
  std::vector<WeightedEdge> edges;
  if (n == 2) edges.push_back({0, 1, draw(weights, rng)});
  if (n > 2) {
    std::vector<std::size_t> code(n - 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (auto& c : code) c = pick(rng);
    std::vector<std::size_t> degree(n, 1);
    for (std::size_t c : code) ++degree[c];
    std::set<std::size_t> leaves;
    for (std::size_t v = 0; v < n; ++v) {
      if (degree[v] == 1) leaves.insert(v);
    }
    for (std::size_t c : code) {
      const std::size_t leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({leaf, c, draw(weights, rng)});
      if (--degree[c] == 1) leaves.insert(c);
    }
    const std::size_t a = *leaves.begin();
    const std::size_t b = *std::next(leaves.begin());
    edges.push_back({a, b, draw(weights, rng)});
  }
  return WeightedTree::from_indexed(n, edges);
}

WeightedTree relabel(const WeightedTree& t, const std::vector<Vertex>& perm) {
  std::vector<WeightedEdge> edges;
  for (const auto& e : t.edges()) edges.push_back({perm[e.u], perm[e.v], e.weight});
  return WeightedTree::from_indexed(t.order(), edges);
}

WeightedTree shuffled(const WeightedTree& t, Rng& rng) {
  std::vector<Vertex> perm(t.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return relabel(t, perm);
}

WeightedTree with_weights(const WeightedTree& t, Weights weights, Rng& rng) {
  std::vector<WeightedEdge> edges = t.edges();
  for (auto& e : edges) e.weight = draw(weights, rng);
  return WeightedTree(t.labels(), std::move(edges));
}

WeightedTree star(const std::vector<Rational>& weights) {
  const std::size_t centre = weights.size();
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i < weights.size(); ++i) edges.push_back({i, centre, weights[i]});
  return WeightedTree::from_indexed(weights.size() + 1, edges);
}

WeightedTree path(std::size_t n) {
  std::vector<WeightedEdge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Rational(1)});
  return WeightedTree::from_indexed(n, edges);
}

WeightedTree attach_pendants(const WeightedTree& base, const std::vector<std::size_t>& pendants) {
  std::vector<WeightedEdge> edges = base.edges();
  std::size_t next = base.order();
  for (std::size_t v = 0; v < pendants.size(); ++v) {
    for (std::size_t k = 0; k < pendants[v]; ++k) edges.push_back({v, next++, Rational(1)});
  }
  return WeightedTree::from_indexed(next, edges);
}

WeightedTree caterpillar(const std::vector<std::size_t>& pendants) {
  return attach_pendants(path(pendants.size()), pendants);
}

WeightedTree corona(const WeightedTree& base) {
  return attach_pendants(base, std::vector<std::size_t>(base.order(), 1));
}

WeightedTree random_class_t_tree(std::size_t max_order, Rng& rng) {
  if (max_order < 3) throw std::invalid_argument("the smallest member has three vertices");
  const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_order / 2)(rng);
  std::vector<std::size_t> pendants(k, 1);
  if (k == 1) pendants[0] = 2;
  const std::size_t used = k + std::accumulate(pendants.begin(), pendants.end(), std::size_t{0});
  const std::size_t extra = std::uniform_int_distribution<std::size_t>(0, max_order - used)(rng);
  std::uniform_int_distribution<std::size_t> slot(0, k - 1);
  for (std::size_t i = 0; i < extra; ++i) ++pendants[slot(rng)];
  const WeightedTree base = random_tree(k, rng, Weights::unit);
  return shuffled(with_weights(attach_pendants(base, pendants), Weights::positive_rational, rng), rng);
}

}  // namespace sharptree::corpus
