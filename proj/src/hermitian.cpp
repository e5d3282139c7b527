#include "lckcert/hermitian.hpp"

#include <Eigen/Dense>
#include <bit>
#include <stdexcept>

namespace lckcert {

bool is_hermitian(const GMatrix& h) { return h.rows() == h.cols() && h == h.adjoint(); }

GradedForm from_hermitian(const HermitianMatrix& h, const ComplexFrame& frame) {
  const int n = frame.n();
  if (static_cast<int>(h.rows()) != n || !is_hermitian(h))
    throw std::invalid_argument("from_hermitian: expected an n×n Hermitian matrix");
  const auto& basis = ExteriorBasis::get(frame.dim());
  Vec<Gauss> w(basis.size(2));
  const Gauss half_i(0, Rational(1, 2));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) w[basis.index(frame.mixed_mask(a, b))] = half_i * h(a, b);
  return frame.from_frame_coords(2, w);
}

HermitianMatrix to_hermitian(const GradedForm& w, const ComplexFrame& frame) {
  if (!w.is_homogeneous(2) || !w.is_real())
    throw std::invalid_argument("to_hermitian: form must be a real 2-form");
  const auto coords = frame.to_frame_coords(w, 2);
  const auto& basis = ExteriorBasis::get(frame.dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (!coords[i].is_zero() && frame.type(basis.mask(2, i)) != Bidegree{1, 1})
      throw std::invalid_argument("to_hermitian: form is not of pure bidegree (1,1)");
  const int n = frame.n();
  HermitianMatrix h(n, n);
  const Gauss minus_two_i(0, -2);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) h(a, b) = minus_two_i * coords[basis.index(frame.mixed_mask(a, b))];
  return h;
}

std::vector<HermitianMatrix> hermitian_basis(int n) {
  std::vector<HermitianMatrix> out;
  for (int a = 0; a < n; ++a) {
    HermitianMatrix e(n, n);
    e(a, a) = Gauss(1);
    out.push_back(std::move(e));
  }
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      HermitianMatrix s(n, n), t(n, n);
      s(a, b) = Gauss(1);
      s(b, a) = Gauss(1);
      t(a, b) = Gauss(0, 1);
      t(b, a) = Gauss(0, -1);
      out.push_back(std::move(s));
      out.push_back(std::move(t));
    }
  return out;
}

Vec<Rational> hermitian_gram_weights(int n) {
  Vec<Rational> w(n * n, Rational(2));
  for (int a = 0; a < n; ++a) w[a] = 1;
  return w;
}

Vec<Rational> hermitian_coordinates(const HermitianMatrix& h) {
  if (!is_hermitian(h)) throw std::invalid_argument("hermitian_coordinates: matrix is not Hermitian");
  const int n = static_cast<int>(h.rows());
  Vec<Rational> x;
  x.reserve(n * n);
  for (int a = 0; a < n; ++a) x.push_back(h(a, a).re());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      x.push_back(h(a, b).re());
      x.push_back(h(a, b).im());
    }
  return x;
}

HermitianMatrix hermitian_from_coordinates(int n, const Vec<Rational>& x) {
  if (static_cast<int>(x.size()) != n * n) throw std::invalid_argument("hermitian_from_coordinates: size");
  HermitianMatrix h(n, n);
  std::size_t k = 0;
  for (int a = 0; a < n; ++a) h(a, a) = Gauss(x[k++]);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      h(a, b) = Gauss(x[k], x[k + 1]);
      h(b, a) = Gauss(x[k], -x[k + 1]);
      k += 2;
    }
  return h;
}

Gauss trace_product(const GMatrix& a, const GMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) throw std::invalid_argument("trace_product: shapes");
  Gauss s;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s.add_product(a(i, j), b(j, i));
  return s;
}

namespace {

GMatrix principal_submatrix(const GMatrix& h, unsigned subset) {
  const auto idx = mask_indices(subset);
  GMatrix s(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = h(idx[i], idx[j]);
  return s;
}

Eigen::MatrixXcd to_eigen(const GMatrix& h) {
  Eigen::MatrixXcd m(h.rows(), h.cols());
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < h.cols(); ++j) m(i, j) = h(i, j).to_complex();
  return m;
}

}  // namespace

bool is_positive_semidefinite(const HermitianMatrix& h) {
  if (!is_hermitian(h)) throw std::invalid_argument("is_positive_semidefinite: matrix is not Hermitian");
  const unsigned n = static_cast<unsigned>(h.rows());
  if (n > 16) throw std::invalid_argument("is_positive_semidefinite: matrix too large");
  for (unsigned subset = 1; subset < (1u << n); ++subset) {
    const Gauss det = determinant(principal_submatrix(h, subset));
    if (sgn(det.re()) < 0) return false;
  }
  return true;
}

bool is_positive_definite(const HermitianMatrix& h) {
  if (!is_hermitian(h)) throw std::invalid_argument("is_positive_definite: matrix is not Hermitian");
  const unsigned n = static_cast<unsigned>(h.rows());
  for (unsigned k = 1; k <= n; ++k) {
    const Gauss det = determinant(principal_submatrix(h, (1u << k) - 1));
    if (sgn(det.re()) <= 0) return false;
  }
  return n > 0;
}

std::vector<double> eigenvalues(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double min_eigenvalue(const HermitianMatrix& h) {
  const auto ev = eigenvalues(h);
  return ev.empty() ? 0.0 : ev.front();
}

std::vector<std::complex<double>> min_eigenvector(const HermitianMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(h));
  const Eigen::VectorXcd v = es.eigenvectors().col(0);
  return {v.data(), v.data() + v.size()};
}

}  // namespace lckcert
