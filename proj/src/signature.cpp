#include "sharptree/signature.hpp"

#include <algorithm>

#include "sharptree/errors.hpp"

namespace sharptree {

SignatureVector build_signature_class_T(const WeightedTree& t, const MatchingSummary& summary) {
  if (!classify(t).is_member) throw NotInClassT("some non-pendant vertex has no pendant neighbour");
  if (!t.all_weights_positive()) throw NonPositiveWeights("construction needs positive weights");

  std::vector<bool> never_matched(t.edges().size(), false);
  for (std::size_t e : edges_in_no_maximum_matching(t, summary)) never_matched[e] = true;

  SignatureVector s;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.is_pendant(v)) {
      s.root = v;
      break;
    }
  }
  s.n_values.resize(t.order());
  s.signs.resize(t.order());
  for (Vertex v = 0; v < t.order(); ++v) {
    const auto path = t.path_edges(s.root, v);
    s.n_values[v] = static_cast<std::size_t>(
        std::count_if(path.begin(), path.end(), [&](std::size_t e) { return never_matched[e]; }));
    s.signs[v] = s.n_values[v] % 2 == 0 ? 1 : -1;
  }
  return s;
}

SignatureVector build_signature_class_T(const WeightedTree& t) {
  if (!classify(t).is_member) throw NotInClassT("some non-pendant vertex has no pendant neighbour");
  if (!t.all_weights_positive()) throw NonPositiveWeights("construction needs positive weights");
  return build_signature_class_T(t, maximum_matchings(t));
}

ExactMatrix apply_signature(const ExactMatrix& m, std::span<const int> signs) {
  if (!m.is_square() || m.order() != signs.size())
    throw DimensionMismatch("signature of length " + std::to_string(signs.size()) +
                            " for a matrix of order " + std::to_string(m.rows()));
  ExactMatrix out = m;
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      if (signs[i] * signs[j] < 0) out(i, j) = -out(i, j);
    }
  }
  return out;
}

bool is_entrywise_nonnegative(const ExactMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).sign() < 0) return false;
    }
  }
  return true;
}

SignatureSearchResult exhaustive_signature_search(const ExactMatrix& m, std::size_t max_order) {
  if (!m.is_square()) throw DimensionMismatch("signature search on a non-square matrix");
  const std::size_t n = m.order();
  if (n > max_order)
    throw ResourceLimit("signature search is capped at " + std::to_string(max_order) + " vertices");
  SignatureSearchResult result;
  if (n == 0) {
    result.signs = std::vector<int>{};
    return result;
  }

  struct Entry {
    std::size_t i, j;
    int sign;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    if (m(i, i).sign() < 0) return result;  // no signature changes a diagonal entry
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && m(i, j).sign() != 0) entries.push_back({i, j, m(i, j).sign()});
    }
  }

  // Bit (n - 1 - k) of the counter is the sign of vertex k, so counting up
  // walks the vectors in lexicographic order with +1 < -1.
  const std::uint64_t total = std::uint64_t{1} << (n - 1);
  std::vector<int> signs(n, 1);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t k = 1; k < n; ++k) signs[k] = (mask >> (n - 1 - k)) & 1U ? -1 : 1;
    ++result.scanned;
    const bool ok = std::all_of(entries.begin(), entries.end(), [&](const Entry& e) {
      return signs[e.i] * signs[e.j] * e.sign >= 0;
    });
    if (ok) {
      result.signs = signs;
      return result;
    }
  }
  return result;
}

}  // namespace sharptree
