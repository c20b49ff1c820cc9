#include "necklace/linalg.hpp"

#include <numeric>

#include "necklace/error.hpp"

namespace necklace {

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::InvalidArgument, "matrix-vector size mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!at(r, c).is_zero() && !x[c].is_zero()) out[r] += at(r, c) * x[c];
    }
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product size mismatch");
  Matrix out(rows_, o.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < o.cols_; ++c) {
        if (!o.at(k, c).is_zero()) out.at(r, c) += at(r, k) * o.at(k, c);
      }
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

std::string Matrix::str() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += "[";
    for (std::size_t c = 0; c < cols_; ++c) out += (c ? ", " : "") + at(r, c).pretty();
    out += "]\n";
  }
  return out;
}

Rref rref(const Matrix& m, const std::vector<std::size_t>& column_order) {
  std::vector<std::size_t> order = column_order;
  if (order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != m.cols()) throw Error(ErrorCode::InvalidArgument, "column order must list every column");
  Rref out{m, {}};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col : order) {
    if (row == a.rows()) break;
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(piv, c), a.at(row, c));
    }
    const Scalar inv = a.at(row, col).inverse();
    for (std::size_t c = 0; c < a.cols(); ++c) a.at(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      const Scalar f = a.at(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) {
        if (!a.at(row, c).is_zero()) a.at(r, c) -= f * a.at(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

std::vector<std::vector<Scalar>> nullspace(const Matrix& m) {
  const Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivot_columns) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = Scalar(1);
    for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) v[r.pivot_columns[i]] = -r.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b,
                                         const std::vector<std::size_t>& column_order) {
  if (b.size() != m.rows()) throw Error(ErrorCode::InvalidArgument, "right-hand side has the wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  std::vector<std::size_t> order = column_order;
  if (order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), 0);
  }
  order.push_back(m.cols());
  const Rref r = rref(aug, order);
  std::vector<Scalar> x(m.cols());
  for (std::size_t i = 0; i < r.pivot_columns.size(); ++i) {
    if (r.pivot_columns[i] == m.cols()) return std::nullopt;
    x[r.pivot_columns[i]] = r.reduced.at(i, m.cols());
  }
  return x;
}

Matrix from_columns(const std::vector<std::vector<Scalar>>& columns, std::size_t dim) {
  Matrix m(dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != dim) throw Error(ErrorCode::InvalidArgument, "column has the wrong length");
    for (std::size_t r = 0; r < dim; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

std::vector<std::vector<Scalar>> extend_independent(const std::vector<std::vector<Scalar>>& base,
                                                    const std::vector<std::vector<Scalar>>& candidates,
                                                    std::size_t dim) {
  std::vector<std::vector<Scalar>> span = base;
  std::size_t current = rank(from_columns(span, dim));
  std::vector<std::vector<Scalar>> picked;
  for (const auto& v : candidates) {
    span.push_back(v);
    const std::size_t next = rank(from_columns(span, dim));
    if (next > current) {
      picked.push_back(v);
      current = next;
    } else {
      span.pop_back();
    }
  }
  return picked;
}

}  // namespace necklace
