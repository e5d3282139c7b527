#pragma once

#include <complex>
#include <optional>

#include "lckcert/hermitian.hpp"

namespace lckcert {

/// Linear functional on Λ^k, stored as coefficients over the frame multivector basis dual to W^I:
/// ⟨T, α⟩ = Σ_I T_I · w_I(α), where w(α) are the frame coordinates of α. No conjugation.
class Current {
 public:
  Current() = default;
  Current(int dim, int degree, Vec<Gauss> coeffs);
  static Current zero(int dim, int degree);

  /// Real current given by a real functional t on e-coordinates: ⟨T, α⟩ = Σ_I t_I a_I.
  static Current from_real_functional(const ComplexFrame& frame, int degree, const Vec<Rational>& t);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const Vec<Gauss>& coeffs() const { return coeffs_; }

  bool is_zero() const { return is_zero_vector(coeffs_); }
  /// Pure bidegree, if the support has one.
  std::optional<Bidegree> bidegree(const ComplexFrame& frame) const;
  /// Functional on e-coordinates; real iff the current is real.
  Vec<Gauss> real_basis_functional(const ComplexFrame& frame) const;
  bool is_real(const ComplexFrame& frame) const;

  /// Keeps the (p,q) part (current-side Π_{p,q}).
  Current project(const ComplexFrame& frame, int p, int q) const;

  Current& operator+=(const Current& o);
  Current& operator*=(const Gauss& s);
  friend Current operator+(Current a, const Current& b) { return a += b; }
  friend Current operator*(Current a, const Gauss& s) { return a *= s; }
  friend bool operator==(const Current& a, const Current& b) {
    return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

 private:
  int dim_ = 0;
  int degree_ = 0;
  Vec<Gauss> coeffs_;
};

Gauss pair(const Current& t, const GradedForm& a, const ComplexFrame& frame);

/// Hermitian avatar A of a (1,1)-current: ⟨T, ω⟩ = tr(A H(ω)).
GMatrix current_avatar(const Current& t, const ComplexFrame& frame);
Current current_from_avatar(const GMatrix& a, const ComplexFrame& frame);

/// Current with avatar v v*; pairs ω to v* H(ω) v.
Current positive_generator(const Vec<Gauss>& v, const ComplexFrame& frame);

struct PositivityResult {
  bool positive = false;
  double min_eigenvalue = 0.0;
};

/// Exact PSD test of the avatar of a real (1,1)-current; throws for other inputs.
PositivityResult is_positive(const Current& t, const ComplexFrame& frame);

}  // namespace lckcert
