#pragma once

#include <optional>
#include <string>
#include <vector>

#include "necklace/scalar.hpp"

namespace necklace {

/// Dense matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  Matrix operator*(const Matrix& o) const;
  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Rref {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;  // in pivot-row order
  std::size_t rank() const { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination. Columns are visited in `column_order` (all
/// columns, natural order when empty), so earlier columns become pivots first.
Rref rref(const Matrix& m, const std::vector<std::size_t>& column_order = {});

std::size_t rank(const Matrix& m);

/// Basis of the kernel, one vector per free column.
std::vector<std::vector<Scalar>> nullspace(const Matrix& m);

/// Some x with m x = b, free unknowns set to zero; pivots are chosen in
/// `column_order`. Empty when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b,
                                         const std::vector<std::size_t>& column_order = {});

/// Matrix whose columns are the given vectors (all of length `dim`).
Matrix from_columns(const std::vector<std::vector<Scalar>>& columns, std::size_t dim);

/// Greedily picks candidates that are independent of `base` and of each other.
std::vector<std::vector<Scalar>> extend_independent(const std::vector<std::vector<Scalar>>& base,
                                                    const std::vector<std::vector<Scalar>>& candidates,
                                                    std::size_t dim);

}  // namespace necklace
