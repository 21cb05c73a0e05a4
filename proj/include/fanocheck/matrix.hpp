#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fanocheck/rational.hpp"

namespace fanocheck {

/// Division that is known to be exact; for field elements this is plain
/// division. Polynomial rings provide their own overload.
template <ExactScalar S>
S exact_quotient(const S &a, const S &b) {
  return a / b;
}

/// Dense row-major matrix over an exact ring. `zero` fixes the domain so
/// empty and all-zero matrices still know their scalars.
template <class T>
class ExactMatrix {
public:
  ExactMatrix(std::size_t rows, std::size_t cols, const T &like)
      : rows_(rows), cols_(cols), zero_(like.zero_like()), data_(rows * cols, zero_) {}

  /// Builds from nested rows; all rows must have equal length.
  ExactMatrix(const std::vector<std::vector<T>> &rows, const T &like)
      : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()), zero_(like.zero_like()) {
    data_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
      if (r.size() != cols_)
        throw std::invalid_argument("ragged matrix rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static ExactMatrix identity(std::size_t n, const T &like) {
    ExactMatrix m(n, n, like);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = like.one_like();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T &zero() const { return zero_; }

  T &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<long>(i * cols_),
                          data_.begin() + static_cast<long>((i + 1) * cols_));
  }

  ExactMatrix transpose() const {
    ExactMatrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        t(j, i) = (*this)(i, j);
    return t;
  }

  /// Submatrix on the given row and column indices.
  ExactMatrix select(const std::vector<std::size_t> &rs, const std::vector<std::size_t> &cs) const {
    ExactMatrix s(rs.size(), cs.size(), zero_);
    for (std::size_t i = 0; i < rs.size(); ++i)
      for (std::size_t j = 0; j < cs.size(); ++j)
        s(i, j) = (*this)(rs[i], cs[j]);
    return s;
  }

  friend ExactMatrix operator*(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix product dimension mismatch");
    ExactMatrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T &x = a(i, k);
        if (x.is_zero())
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          c(i, j) = c(i, j) + x * b(k, j);
      }
    return c;
  }

  friend bool operator==(const ExactMatrix &a, const ExactMatrix &b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i]))
        return false;
    return true;
  }

  bool is_symmetric() const {
    if (rows_ != cols_)
      return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = i + 1; j < cols_; ++j)
        if (!((*this)(i, j) == (*this)(j, i)))
          return false;
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      out += "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j > 0)
          out += ", ";
        out += (*this)(i, j).to_string();
      }
      out += "]\n";
    }
    return out;
  }

private:
  std::size_t rows_;
  std::size_t cols_;
  T zero_;
  std::vector<T> data_;
};

/// Result of fraction-free (Bareiss) elimination.
template <class T>
struct BareissResult {
  std::size_t rank;
  /// Determinant for square matrices (zero when singular).
  T determinant;
};

/// Fraction-free Gaussian elimination. Every intermediate entry is a minor
/// of the input, so each division is exact in the entry ring.
template <class T>
BareissResult<T> bareiss(ExactMatrix<T> a) {
  const std::size_t n = a.rows(), m = a.cols();
  T prev = a.zero().one_like();
  bool negate = false;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c).is_zero())
      ++p;
    if (p == n)
      continue;
    if (p != r) {
      for (std::size_t j = c; j < m; ++j)
        std::swap(a(p, j), a(r, j));
      negate = !negate;
    }
    const T pivot = a(r, c);
    for (std::size_t i = r + 1; i < n; ++i) {
      const T lead = a(i, c);
      for (std::size_t j = c + 1; j < m; ++j)
        a(i, j) = exact_quotient(pivot * a(i, j) - lead * a(r, j), prev);
      a(i, c) = a.zero();
    }
    prev = pivot;
    ++r;
  }
  T det = a.zero();
  if (n == m && r == n)
    det = negate ? -a(n - 1, n - 1) : a(n - 1, n - 1);
  if (n == 0 && m == 0)
    det = a.zero().one_like();
  return {r, det};
}

template <class T>
std::size_t rank(const ExactMatrix<T> &a) {
  return bareiss(a).rank;
}

template <class T>
T determinant(const ExactMatrix<T> &a) {
  if (a.rows() != a.cols())
    throw std::invalid_argument("determinant of a non-square matrix");
  return bareiss(a).determinant;
}

/// Reduced row echelon form over a field, with the pivot column of each
/// nonzero row.
template <ExactScalar S>
struct RowEchelon {
  ExactMatrix<S> matrix;
  std::vector<std::size_t> pivots;
};

template <ExactScalar S>
RowEchelon<S> rref(ExactMatrix<S> a) {
  const std::size_t n = a.rows(), m = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a(p, c).is_zero())
      ++p;
    if (p == n)
      continue;
    for (std::size_t j = 0; j < m; ++j)
      std::swap(a(p, j), a(r, j));
    const S inv = a(r, c).one_like() / a(r, c);
    for (std::size_t j = c; j < m; ++j)
      a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || a(i, c).is_zero())
        continue;
      const S f = a(i, c);
      for (std::size_t j = c; j < m; ++j)
        a(i, j) = a(i, j) - f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

/// Basis of the right kernel. Vector k has entry 1 at free_columns[k] and 0
/// at every other free column, so coordinates of a kernel vector in this
/// basis are its entries at the free columns.
template <ExactScalar S>
struct KernelBasis {
  std::vector<std::vector<S>> vectors;
  std::vector<std::size_t> free_columns;
};

template <ExactScalar S>
KernelBasis<S> kernel_basis(const ExactMatrix<S> &a) {
  const auto [e, pivots] = rref(a);
  KernelBasis<S> out;
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots)
    is_pivot[c] = true;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f])
      continue;
    std::vector<S> v(a.cols(), a.zero());
    v[f] = a.zero().one_like();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -e(r, f);
    out.vectors.push_back(std::move(v));
    out.free_columns.push_back(f);
  }
  return out;
}

} // namespace fanocheck
