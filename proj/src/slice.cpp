#include "lckcert/slice.hpp"

#include <stdexcept>

#include "lckcert/hermitian.hpp"

namespace lckcert {

namespace {

Rational top_coefficient_of_volume(const ComplexFrame& frame) {
  const int dim = frame.dim();
  const auto& basis = ExteriorBasis::get(dim);
  GradedForm vol = GradedForm::scalar(dim, Gauss(1));
  for (int a = 0; a < frame.n(); ++a) {
    Vec<Gauss> w(basis.size(2));
    w[basis.index(frame.mixed_mask(a, a))] = Gauss(0, Rational(1, 2));
    vol = wedge(vol, frame.from_frame_coords(2, w));
  }
  const Gauss top = vol.coefficient(dim, 0);
  if (!top.is_real() || sgn(top.re()) == 0) throw std::logic_error("volume form is degenerate");
  return top.re();
}

}  // namespace

HermitianSlice::HermitianSlice(const TwistedComplex& tc, int p)
    : HermitianSlice(tc, p, p == 1 ? Avatar::Direct : Avatar::WedgeDual) {}

HermitianSlice::HermitianSlice(const TwistedComplex& tc, int p, Avatar kind) : tc_(&tc), p_(p), kind_(kind) {
  const int n = tc.n();
  const int dim = tc.dim();
  if (kind == Avatar::Direct && p != 1) throw std::invalid_argument("HermitianSlice: direct avatar needs p = 1");
  if (kind == Avatar::WedgeDual && p != n - 1)
    throw std::invalid_argument("HermitianSlice: wedge-dual avatar needs p = n - 1");
  if (p < 1) throw std::invalid_argument("HermitianSlice: p must be positive");

  const auto& frame = tc.frame();
  const auto& basis = ExteriorBasis::get(dim);
  const int deg = 2 * p;
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  avatar_map_ = GMatrix(nn, basis.size(deg));

  if (kind == Avatar::Direct) {
    const auto& to = frame.to_frame(2);
    const Gauss minus_two_i(0, -2);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const auto row = basis.index(frame.mixed_mask(a, b));
        for (std::size_t c = 0; c < to.cols(); ++c)
          if (!to(row, c).is_zero()) avatar_map_(a * n + b, c) = minus_two_i * to(row, c);
      }
  } else {
    // M(Ω)_dc = [Ω ∧ (i/2) Z^c ∧ Z̄^d]_top / vol_top.
    const Rational vol = top_coefficient_of_volume(frame);
    const Mask full = (Mask{1} << dim) - 1;
    for (int c = 0; c < n; ++c)
      for (int d = 0; d < n; ++d) {
        Vec<Gauss> w(basis.size(2));
        w[basis.index(frame.mixed_mask(c, d))] = Gauss(0, Rational(1, 2));
        const auto beta = frame.from_frame(2) * w;
        for (std::size_t i = 0; i < basis.size(deg); ++i) {
          const Mask mi = basis.mask(deg, i);
          const Mask rest = full & ~mi;
          const Gauss& bc = beta[basis.index(rest)];
          if (bc.is_zero()) continue;
          Gauss v = bc / Gauss(vol);
          if (wedge_sign(mi, rest) < 0) v = -v;
          avatar_map_(d * n + c, i) = v;
        }
      }
  }

  pp_positions_ = frame.positions(p, p);
  if (pp_positions_.size() != nn) throw std::logic_error("HermitianSlice: (p,p) space is not n²-dimensional");
  GMatrix frame_avatar(nn, nn);
  const auto& from = frame.from_frame(deg);
  for (std::size_t j = 0; j < nn; ++j) {
    const auto col = avatar_map_ * from.column(pp_positions_[j]);
    for (std::size_t r = 0; r < nn; ++r) frame_avatar(r, j) = col[r];
  }
  auto inv = inverse(frame_avatar);
  if (!inv) throw std::logic_error("HermitianSlice: avatar map is not invertible on (p,p)-forms");
  frame_avatar_inv_ = std::move(*inv);

  for (const auto& k : hermitian_basis(n)) {
    Vec<Gauss> vec_k(nn);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) vec_k[a * n + b] = k(a, b);
    const auto w_pp = frame_avatar_inv_ * vec_k;
    Vec<Gauss> w(basis.size(deg));
    for (std::size_t j = 0; j < nn; ++j) w[pp_positions_[j]] = w_pp[j];
    const auto e = from * w;
    Vec<Rational> real;
    for (const auto& c : e) {
      if (!c.is_real()) throw std::logic_error("HermitianSlice: basis form is not real");
      real.push_back(c.re());
    }
    basis_forms_.push_back(std::move(real));
  }

  constraint_ = tc.d_theta(deg) * QMatrix::from_columns(basis.size(deg), basis_forms_);
  kernel_ = nullspace(constraint_);
  weights_ = hermitian_gram_weights(n);
  QMatrix scaled = constraint_.transpose();
  for (std::size_t r = 0; r < scaled.rows(); ++r)
    for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(r, c) /= weights_[r];
  boundary_ = column_space(scaled);
}

GradedForm HermitianSlice::form_from_coordinates(const Vec<Rational>& x) const {
  if (x.size() != basis_forms_.size()) throw std::invalid_argument("form_from_coordinates: size mismatch");
  const auto& basis = ExteriorBasis::get(tc_->dim());
  Vec<Rational> e(basis.size(degree()));
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) == 0) continue;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (sgn(basis_forms_[j][i]) != 0) e[i] += x[j] * basis_forms_[j][i];
  }
  return GradedForm::homogeneous(tc_->dim(), degree(), e);
}

GradedForm HermitianSlice::form_from_avatar(const HermitianMatrix& m) const {
  return form_from_coordinates(hermitian_coordinates(m));
}

GMatrix HermitianSlice::avatar_of_coords(const Vec<Gauss>& e_coords) const {
  const int n = tc_->n();
  const auto v = avatar_map_ * e_coords;
  GMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) m(a, b) = v[a * n + b];
  return m;
}

HermitianMatrix HermitianSlice::avatar(const GradedForm& form) const {
  if (form.dim() != tc_->dim() || !form.is_homogeneous(degree()) || !form.is_real())
    throw std::invalid_argument("avatar: expected a real form of degree 2p");
  if (!is_pure_bidegree(form, tc_->frame(), p_, p_))
    throw std::invalid_argument("avatar: form is not of pure bidegree (p,p)");
  auto m = avatar_of_coords(form.component(degree()));
  if (!is_hermitian(m)) throw std::logic_error("avatar: real (p,p)-form produced a non-Hermitian avatar");
  return m;
}

Current HermitianSlice::current_from_avatar(const GMatrix& a) const {
  const int n = tc_->n();
  if (static_cast<int>(a.rows()) != n || static_cast<int>(a.cols()) != n)
    throw std::invalid_argument("current_from_avatar: expected an n×n matrix");
  const auto& frame = tc_->frame();
  const auto& from = frame.from_frame(degree());
  Vec<Gauss> coeffs(from.cols());
  for (auto pos : pp_positions_) {
    const auto m = avatar_of_coords(from.column(pos));
    coeffs[pos] = trace_product(a, m);
  }
  return Current(tc_->dim(), degree(), std::move(coeffs));
}

GMatrix HermitianSlice::current_avatar(const Current& t) const {
  if (t.degree() != degree()) throw std::invalid_argument("current_avatar: degree mismatch");
  const int n = tc_->n();
  const std::size_t nn = pp_positions_.size();
  Vec<Gauss> restricted(nn);
  for (std::size_t j = 0; j < nn; ++j) restricted[j] = t.coeffs()[pp_positions_[j]];
  const auto alpha = frame_avatar_inv_.transpose() * restricted;
  GMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) a(s, r) = alpha[r * n + s];
  return a;
}

Current HermitianSlice::boundary_current(const Vec<Rational>& source) const {
  const auto& frame = tc_->frame();
  const Current s = Current::from_real_functional(frame, degree() + 1, source);
  Current dt(tc_->dim(), degree(), tc_->d_theta_frame(degree()).transpose() * s.coeffs());
  return dt.project(frame, p_, p_);
}

Vec<Rational> HermitianSlice::boundary_coordinates(const Vec<Rational>& source) const {
  auto y = constraint_.transpose() * source;
  for (std::size_t j = 0; j < y.size(); ++j) y[j] /= weights_[j];
  return y;
}

}  // namespace lckcert
