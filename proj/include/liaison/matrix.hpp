#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "liaison/polynomial.hpp"

namespace liaison {

/// Dense rectangular matrix of polynomials over one ring.
class PolyMatrix {
public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(rows * cols, Polynomial::zero(ring_)) {
    if (rows == 0 || cols == 0) throw value_error("matrix needs positive dimensions");
  }

  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Polynomial& at(std::size_t i, std::size_t j) const {
    bounds(i, j);
    return data_[i * cols_ + j];
  }

  void set(std::size_t i, std::size_t j, Polynomial p) {
    bounds(i, j);
    if (!p.ring()->same_structure(*ring_)) throw value_error("matrix entry ring mismatch");
    data_[i * cols_ + j] = std::move(p);
  }

  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const {
    if (rows.empty() || cols.empty()) throw value_error("empty submatrix selection");
    PolyMatrix s(ring_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) s.set(i, j, at(rows[i], cols[j]));
    return s;
  }

private:
  void bounds(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw value_error("matrix index out of range");
  }

  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Polynomial> data_;
};

namespace detail {

inline Polynomial det_recursive(const PolyMatrix& a, std::vector<std::size_t> rows,
                                std::vector<std::size_t> cols) {
  std::size_t n = rows.size();
  if (n == 1) return a.at(rows[0], cols[0]);
  Polynomial acc = Polynomial::zero(a.ring());
  // Laplace expansion along the first remaining row.
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial& e = a.at(rows[0], cols[j]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(n - 1);
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    Polynomial term = e * det_recursive(a, sub_rows, sub_cols);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline Polynomial pfaffian_recursive(const PolyMatrix& a, std::vector<std::size_t> idx) {
  if (idx.empty()) return Polynomial::constant(a.ring(), 1);
  if (idx.size() == 2) return a.at(idx[0], idx[1]);
  Polynomial acc = Polynomial::zero(a.ring());
  // Pf(A) = sum_{j>=2} (-1)^j a_{1j} Pf(A with rows/cols 1,j removed),
  // indices 1-based within the current selection.
  for (std::size_t j = 1; j < idx.size(); ++j) {
    const Polynomial& e = a.at(idx[0], idx[j]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t k = 1; k < idx.size(); ++k)
      if (k != j) rest.push_back(idx[k]);
    Polynomial term = e * pfaffian_recursive(a, std::move(rest));
    acc = (j % 2 == 1) ? acc + term : acc - term;  // (-1)^(j+1) with 0-based j
  }
  return acc;
}

}  // namespace detail

inline Polynomial determinant(const PolyMatrix& a) {
  if (a.rows() != a.cols()) throw value_error("determinant of a non-square matrix");
  std::vector<std::size_t> rows(a.rows()), cols(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) rows[i] = i;
  for (std::size_t j = 0; j < a.cols(); ++j) cols[j] = j;
  return detail::det_recursive(a, rows, cols);
}

/// Determinant of the submatrix on the given rows and columns.
inline Polynomial minor_determinant(const PolyMatrix& a, const std::vector<std::size_t>& rows,
                                    const std::vector<std::size_t>& cols) {
  if (rows.size() != cols.size()) throw value_error("minor needs equally many rows and columns");
  return determinant(a.submatrix(rows, cols));
}

inline bool is_alternating(const PolyMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (!a.at(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a.at(i, j) != -a.at(j, i)) return false;
  }
  return true;
}

/// Pfaffian of an alternating matrix on the given (sorted) principal index
/// subset; defaults to the full matrix. Pf of the empty matrix is 1.
inline Polynomial pfaffian(const PolyMatrix& a, std::vector<std::size_t> idx = {}) {
  if (!is_alternating(a)) throw value_error("pfaffian of a non-alternating matrix");
  if (idx.empty()) {
    idx.resize(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) idx[i] = i;
  }
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (idx[i] >= a.rows()) throw value_error("pfaffian index out of range");
    if (i + 1 < idx.size() && idx[i] >= idx[i + 1])
      throw value_error("pfaffian index subset must be strictly increasing");
  }
  if (idx.size() % 2 != 0) throw value_error("pfaffian needs an even index set");
  return detail::pfaffian_recursive(a, std::move(idx));
}

}  // namespace liaison
