#include "lckcert/current.hpp"

#include <stdexcept>

namespace lckcert {

Current::Current(int dim, int degree, Vec<Gauss> coeffs) : dim_(dim), degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ExteriorBasis::get(dim).size(degree))
    throw std::invalid_argument("Current: coefficient count does not match degree");
}

Current Current::zero(int dim, int degree) {
  return Current(dim, degree, Vec<Gauss>(ExteriorBasis::get(dim).size(degree)));
}

Current Current::from_real_functional(const ComplexFrame& frame, int degree, const Vec<Rational>& t) {
  // t · a = t · from_frame w, hence frame coefficients are from_frameᵀ t.
  return Current(frame.dim(), degree, frame.from_frame(degree).transpose() * to_gauss(t));
}

std::optional<Bidegree> Current::bidegree(const ComplexFrame& frame) const {
  const auto& basis = ExteriorBasis::get(dim_);
  std::optional<Bidegree> found;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const auto t = frame.type(basis.mask(degree_, i));
    if (found && !(*found == t)) return std::nullopt;
    found = t;
  }
  return found;
}

Vec<Gauss> Current::real_basis_functional(const ComplexFrame& frame) const {
  return frame.to_frame(degree_).transpose() * coeffs_;
}

bool Current::is_real(const ComplexFrame& frame) const {
  for (const auto& c : real_basis_functional(frame))
    if (!c.is_real()) return false;
  return true;
}

Current Current::project(const ComplexFrame& frame, int p, int q) const {
  Current out = zero(dim_, degree_);
  for (auto i : frame.positions(p, q))
    if (p + q == degree_) out.coeffs_[i] = coeffs_[i];
  return out;
}

Current& Current::operator+=(const Current& o) {
  if (dim_ != o.dim_ || degree_ != o.degree_) throw std::invalid_argument("Current: shape mismatch");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Current& Current::operator*=(const Gauss& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Gauss pair(const Current& t, const GradedForm& a, const ComplexFrame& frame) {
  if (t.dim() != a.dim() || t.dim() != frame.dim()) throw std::invalid_argument("pair: dimension mismatch");
  return dot(t.coeffs(), frame.to_frame_coords(a, t.degree()));
}

GMatrix current_avatar(const Current& t, const ComplexFrame& frame) {
  if (t.degree() != 2) throw std::invalid_argument("current_avatar: expected a 2-current");
  const int n = frame.n();
  const auto& basis = ExteriorBasis::get(frame.dim());
  GMatrix a(n, n);
  const Gauss half_i(0, Rational(1, 2));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) a(s, r) = half_i * t.coeffs()[basis.index(frame.mixed_mask(r, s))];
  return a;
}

Current current_from_avatar(const GMatrix& a, const ComplexFrame& frame) {
  const int n = frame.n();
  if (static_cast<int>(a.rows()) != n || static_cast<int>(a.cols()) != n)
    throw std::invalid_argument("current_from_avatar: expected an n×n matrix");
  const auto& basis = ExteriorBasis::get(frame.dim());
  Vec<Gauss> c(basis.size(2));
  const Gauss minus_two_i(0, -2);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) c[basis.index(frame.mixed_mask(r, s))] = minus_two_i * a(s, r);
  return Current(frame.dim(), 2, std::move(c));
}

Current positive_generator(const Vec<Gauss>& v, const ComplexFrame& frame) {
  const int n = frame.n();
  if (static_cast<int>(v.size()) != n) throw std::invalid_argument("positive_generator: vector length must be n");
  GMatrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) a(r, s) = v[r] * v[s].conj();
  return current_from_avatar(a, frame);
}

PositivityResult is_positive(const Current& t, const ComplexFrame& frame) {
  if (t.degree() != 2) throw std::invalid_argument("is_positive: expected a (1,1)-current");
  const auto b = t.bidegree(frame);
  if (b && !(*b == Bidegree{1, 1})) throw std::invalid_argument("is_positive: expected a (1,1)-current");
  if (!t.is_real(frame)) throw std::invalid_argument("is_positive: current is not real");
  const auto a = current_avatar(t, frame);
  return {is_positive_semidefinite(a), min_eigenvalue(a)};
}

}  // namespace lckcert
