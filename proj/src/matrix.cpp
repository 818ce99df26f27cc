#include "sharptree/matrix.hpp"

#include <ostream>
#include <string>
#include <utility>

#include "sharptree/errors.hpp"

namespace sharptree {

namespace {

std::string shape(const ExactMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
    throw DimensionMismatch(shape(lhs) + " vs " + shape(rhs));
}

}  // namespace

ExactMatrix ExactMatrix::identity(std::size_t order) {
  ExactMatrix m(order, order);
  for (std::size_t i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

ExactMatrix ExactMatrix::scaled(const Rational& factor) const {
  ExactMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

ExactMatrix ExactMatrix::select(const std::vector<std::size_t>& row_ids,
                                const std::vector<std::size_t>& col_ids) const {
  ExactMatrix out(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i) {
    for (std::size_t j = 0; j < col_ids.size(); ++j) out(i, j) = (*this)(row_ids[i], col_ids[j]);
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw DimensionMismatch(shape(lhs) + " * " + shape(rhs));
  ExactMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const Rational& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols(); ++j) {
        if (!rhs(k, j).is_zero()) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

ExactMatrix operator+(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_shape(lhs, rhs);
  ExactMatrix out = lhs;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) += rhs(i, j);
  }
  return out;
}

ExactMatrix operator-(const ExactMatrix& lhs, const ExactMatrix& rhs) {
  require_same_shape(lhs, rhs);
  ExactMatrix out = lhs;
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) out(i, j) -= rhs(i, j);
  }
  return out;
}

RowEchelonForm reduced_row_echelon(const ExactMatrix& m) {
  RowEchelonForm result{m, {}};
  ExactMatrix& r = result.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(row, j), r(pivot, j));
    }
    const Rational inv = Rational(1) / r(row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const Rational factor = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) {
        if (!r(row, j).is_zero()) r(i, j) -= factor * r(row, j);
      }
    }
    result.pivots.push_back(col);
    ++row;
  }
  return result;
}

std::size_t rank(const ExactMatrix& m) { return reduced_row_echelon(m).rank(); }

std::optional<ExactMatrix> inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of " + shape(m));
  const std::size_t n = m.order();
  ExactMatrix augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = m(i, j);
    augmented(i, n + i) = 1;
  }
  const RowEchelonForm form = reduced_row_echelon(augmented);
  if (form.rank() < n || (n > 0 && form.pivots[n - 1] != n - 1)) return std::nullopt;
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = form.reduced(i, n + j);
  }
  return out;
}

}  // namespace sharptree

namespace sharptree {

std::ostream& operator<<(std::ostream& os, const ExactMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? " [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace sharptree
