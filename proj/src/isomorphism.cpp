#include "sharptree/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "sharptree/errors.hpp"

namespace sharptree {

namespace {

// Stable colouring of the disjoint union of a and b, so colours are
// comparable across the two graphs. Colours of b follow those of a.
std::vector<std::size_t> refine(const WeightedGraph& a, const WeightedGraph& b) {
  const std::size_t na = a.order();
  const std::size_t n = na + b.order();
  const auto neighbours = [&](std::size_t v) {
    std::vector<std::size_t> out;
    if (v < na) {
      for (const auto& inc : a.incident(v)) out.push_back(inc.to);
    } else {
      for (const auto& inc : b.incident(v - na)) out.push_back(inc.to + na);
    }
    return out;
  };
  std::vector<std::size_t> colour(n, 0);
  std::size_t classes = 1;
  while (true) {
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> signature_ids;
    std::vector<std::size_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::size_t> seen;
      for (std::size_t u : neighbours(v)) seen.push_back(colour[u]);
      std::sort(seen.begin(), seen.end());
      auto key = std::make_pair(colour[v], std::move(seen));
      auto it = signature_ids.try_emplace(std::move(key), signature_ids.size()).first;
      next[v] = it->second;
    }
    colour = std::move(next);
    if (signature_ids.size() == classes) break;
    classes = signature_ids.size();
  }
  return colour;
}

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const WeightedGraph& a, const WeightedGraph& b,
                                                    std::size_t max_order) {
  const std::size_t n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (n > max_order)
    throw ResourceLimit("isomorphism search is capped at " + std::to_string(max_order) + " vertices");

  const auto colour = refine(a, b);
  std::vector<std::size_t> ca(colour.begin(), colour.begin() + static_cast<std::ptrdiff_t>(n));
  std::vector<std::size_t> cb(colour.begin() + static_cast<std::ptrdiff_t>(n), colour.end());
  {
    auto sa = ca;
    auto sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  // Map the vertices of a in order of rarest colour first.
  std::map<std::size_t, std::size_t> frequency;
  for (std::size_t c : ca) ++frequency[c];
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](Vertex x, Vertex y) {
    return frequency[ca[x]] < frequency[ca[y]];
  });

  std::vector<Vertex> map(n, n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) {
    if (depth == n) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || cb[w] != ca[v]) continue;
      bool consistent = true;
      for (std::size_t k = 0; k < depth && consistent; ++k) {
        const Vertex u = order[k];
        consistent = a.adjacent(u, v) == b.adjacent(map[u], w);
      }
      if (!consistent) continue;
      map[v] = w;
      used[w] = true;
      if (extend(depth + 1)) return true;
      used[w] = false;
    }
    map[v] = n;
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

}  // namespace sharptree
