#pragma once

#include "ferrand/field.hpp"

#include <vector>

namespace ferrand {

using Vec = std::vector<Scalar>;

/// Dense exact matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Vec row(int r) const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  std::vector<Vec> rows;    // reduced row echelon form, non-zero rows only
  std::vector<int> pivots;  // pivot column of each row
};

Echelon row_reduce(const Matrix& m, const Field& field);
int rank(const Matrix& m, const Field& field);
/// Basis of {v : m v = 0}.
std::vector<Vec> nullspace(const Matrix& m, const Field& field);

/// Incrementally built semi-echelon basis of a subspace of K^n.
class EchelonBasis {
 public:
  EchelonBasis(int dim, Field field) : dim_(dim), field_(field) {}

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  /// Reduces v against the basis; the result is zero iff v lies in the span.
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  /// Adds v if independent; returns whether the rank grew.
  bool insert(Vec v);
  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

 private:
  int dim_;
  Field field_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

bool is_zero(const Vec& v);

}  // namespace ferrand
