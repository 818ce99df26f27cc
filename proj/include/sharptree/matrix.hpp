#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sharptree/rational.hpp"

namespace sharptree {

/// Dense row-major matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExactMatrix zero(std::size_t order) { return ExactMatrix(order, order); }
  static ExactMatrix identity(std::size_t order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  /// Order of a square matrix.
  std::size_t order() const { return rows_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;
  ExactMatrix transpose() const;
  ExactMatrix scaled(const Rational& factor) const;

  /// Submatrix picking the given rows and columns, in the given order.
  ExactMatrix select(const std::vector<std::size_t>& row_ids,
                     const std::vector<std::size_t>& col_ids) const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Throws DimensionMismatch when the shapes are incompatible.
ExactMatrix operator*(const ExactMatrix& lhs, const ExactMatrix& rhs);
ExactMatrix operator+(const ExactMatrix& lhs, const ExactMatrix& rhs);
ExactMatrix operator-(const ExactMatrix& lhs, const ExactMatrix& rhs);

/// Rows in brackets, entries as exact rationals.
std::ostream& operator<<(std::ostream& os, const ExactMatrix& m);

struct RowEchelonForm {
  ExactMatrix reduced;              // reduced row echelon form, zero rows last
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination over the rationals.
RowEchelonForm reduced_row_echelon(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

/// Empty when the matrix is singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& m);

}  // namespace sharptree
