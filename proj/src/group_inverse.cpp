#include "sharptree/group_inverse.hpp"

#include "sharptree/errors.hpp"

namespace sharptree {

std::string_view to_string(SharpMethod method) {
  switch (method) {
    case SharpMethod::combinatorial: return "combinatorial";
    case SharpMethod::factorization: return "factorization";
    case SharpMethod::bipartite_block: return "bipartite_block";
    case SharpMethod::star_closed_form: return "star_closed_form";
  }
  return "unknown";
}

GroupInverseWitness sharp_combinatorial(const WeightedTree& t, const MatchingSummary& summary) {
  ExactMatrix x = ExactMatrix::zero(t.order());
  for (const auto& record : matchable_pairs(t, summary)) {
    const Rational w = record.mu / summary.m_value;
    x(record.first, record.second) = w;
    x(record.second, record.first) = w;
  }
  WeightedGraph graph = WeightedGraph::from_matrix(t.labels(), x);
  return {t, std::move(x), std::move(graph), summary.m_value, SharpMethod::combinatorial};
}

GroupInverseWitness sharp_combinatorial(const WeightedTree& t, EnumerationLimits limits) {
  return sharp_combinatorial(t, maximum_matchings(t, limits));
}

ExactMatrix sharp_factorization(const ExactMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("group inverse of a non-square matrix");
  const std::size_t n = a.order();
  const RowEchelonForm form = reduced_row_echelon(a);
  const std::size_t r = form.rank();
  if (r == 0) return ExactMatrix::zero(n);

  std::vector<std::size_t> all_rows(n);
  for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;
  std::vector<std::size_t> leading_rows(r);
  for (std::size_t i = 0; i < r; ++i) leading_rows[i] = i;

  const ExactMatrix f = a.select(all_rows, form.pivots);
  const ExactMatrix g = form.reduced.select(leading_rows, all_rows);
  const auto core_inverse = inverse(g * f);
  if (!core_inverse) throw SingularCore("G F is singular; the matrix has no group inverse");
  return f * (*core_inverse * *core_inverse) * g;
}

ExactMatrix sharp_bipartite_block(const WeightedTree& t) {
  const Bipartition parts = bipartition(t);
  const bool a_smaller = parts.part_a.size() <= parts.part_b.size();
  const auto& rows = a_smaller ? parts.part_a : parts.part_b;
  const auto& cols = a_smaller ? parts.part_b : parts.part_a;

  const ExactMatrix adjacency = adjacency_matrix(t);
  const ExactMatrix c = adjacency.select(rows, cols);
  const ExactMatrix upper = sharp_factorization(c * c.transpose()) * c;

  ExactMatrix x = ExactMatrix::zero(t.order());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      x(rows[i], cols[j]) = upper(i, j);
      x(cols[j], rows[i]) = upper(i, j);
    }
  }
  return x;
}

GroupInverseWitness sharp_star(const WeightedTree& t) {
  if (!is_star(t)) throw NotAStar("tree has no vertex adjacent to all others");
  Rational p{0};
  for (const auto& e : t.edges()) p += e.weight * e.weight;
  ExactMatrix x = adjacency_matrix(t).scaled(Rational(1) / p);
  WeightedGraph graph = WeightedGraph::from_matrix(t.labels(), x);
  return {t, std::move(x), std::move(graph), p, SharpMethod::star_closed_form};
}

bool verify_axioms(const ExactMatrix& a, const ExactMatrix& x) {
  if (!a.is_square() || !x.is_square() || a.order() != x.order()) return false;
  const ExactMatrix ax = a * x;
  const ExactMatrix xa = x * a;
  return ax == xa && ax * a == a && x * ax == x;
}

}  // namespace sharptree
