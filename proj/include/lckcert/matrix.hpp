#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lckcert/rational.hpp"

namespace lckcert {

template <class F>
using Vec = std::vector<F>;

/// Dense row-major matrix over an exact field (Rational or Gauss).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> column(std::size_t c) const {
    Vec<F> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_column(std::size_t c, const Vec<F>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vec<F>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!lckcert::is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix adjoint() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = conj((*this)(r, c));
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (lckcert::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& bkj = b(k, j);
          if (!lckcert::is_zero(bkj)) add_product(c(i, j), aik, bkj);
        }
      }
    return c;
  }

  friend Vec<F> operator*(const Matrix& a, const Vec<F>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: vector shape mismatch");
    Vec<F> out(a.rows_);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (lckcert::is_zero(v[k])) continue;
      for (std::size_t i = 0; i < a.rows_; ++i) {
        const F& aik = a(i, k);
        if (!lckcert::is_zero(aik)) add_product(out[i], aik, v[k]);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Matrix: shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using QMatrix = Matrix<Rational>;
using GMatrix = Matrix<Gauss>;

template <class F>
bool is_zero_vector(const Vec<F>& v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

template <class F>
F dot(const Vec<F>& a, const Vec<F>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  F s{};
  for (std::size_t i = 0; i < a.size(); ++i) add_product(s, a[i], b[i]);
  return s;
}

GMatrix to_gauss(const QMatrix& m);
Vec<Gauss> to_gauss(const Vec<Rational>& v);

template <class F>
struct Echelon {
  Matrix<F> reduced;              // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; pivots chosen as the first nonzero entry, so the result is canonical.
template <class F>
Echelon<F> rref(Matrix<F> m) {
  Echelon<F> out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(piv, c), m(row, c));
    const F inv = F(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const F f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).rank();
}

/// Basis of the null space, one vector per free column (free variable set to 1, others 0).
template <class F>
std::vector<Vec<F>> nullspace(const Matrix<F>& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols());
    v[free] = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Reduced basis of the column space (rows of rref of the transpose).
template <class F>
std::vector<Vec<F>> column_space(const Matrix<F>& m) {
  const auto e = rref(m.transpose());
  std::vector<Vec<F>> basis;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    Vec<F> v(m.rows());
    for (std::size_t c = 0; c < m.rows(); ++c) v[c] = e.reduced(r, c);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Some solution of m x = b (free variables zero), or nullopt when inconsistent.
template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs size mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vec<F> x(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = F(1);
  }
  const auto e = rref(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<F> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m(piv, col))) ++piv;
    if (piv == n) return F(0);
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(piv, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const F inv = F(1) / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m(r, col))) continue;
      const F f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

/// Least-norm solution of m x = b for real rational systems: x = mᵀ z with (m mᵀ) z = b.
std::optional<Vec<Rational>> least_norm_solve(const QMatrix& m, const Vec<Rational>& b);

/// Orthogonal projection of x onto span(basis) for the inner product diag(weights).
Vec<Rational> project_onto_span(const std::vector<Vec<Rational>>& basis, const Vec<Rational>& weights,
                                const Vec<Rational>& x);

}  // namespace lckcert
