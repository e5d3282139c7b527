#pragma once

#include <vector>

#include "lckcert/operators.hpp"

namespace lckcert {

/// Real (p,p)-forms whose positivity is a Hermitian matrix condition: p = 1 (avatar H with
/// ω = (i/2)ΣH_ab Z^a∧Z̄^b) or p = n-1 (avatar M with Ω ∧ ω_H = tr(M H)·vol). In both cases the
/// strongly positive cone is {M ⪰ 0}, transverse forms are {M ≻ 0}, and a (p,p)-current T has an
/// avatar A with ⟨T, Ω⟩ = tr(A M(Ω)), positive iff A ⪰ 0.
///
/// Coordinates x ∈ ℚ^{n²} refer to hermitian_basis(n); basis_forms()[j] is the form with avatar
/// hermitian_basis(n)[j].
class HermitianSlice {
 public:
  enum class Avatar { Direct, WedgeDual };

  /// Avatar::Direct requires p = 1, Avatar::WedgeDual requires p = n-1.
  HermitianSlice(const TwistedComplex& tc, int p, Avatar kind);
  /// Direct for p = 1, WedgeDual for p = n-1 (> 1).
  HermitianSlice(const TwistedComplex& tc, int p);

  const TwistedComplex& complex() const { return *tc_; }
  int p() const { return p_; }
  int n() const { return tc_->n(); }
  int degree() const { return 2 * p_; }
  Avatar kind() const { return kind_; }

  const std::vector<Vec<Rational>>& basis_forms() const { return basis_forms_; }
  /// d_θ restricted to the slice, in coordinates: columns d_θ F_j.
  const QMatrix& constraint() const { return constraint_; }
  /// Exact basis of ker d_θ in coordinates.
  const std::vector<Vec<Rational>>& kernel_basis() const { return kernel_; }
  /// Exact basis (avatar coordinates) of the (p,p)-components of d_θ-boundaries, the
  /// Frobenius-orthogonal complement of the kernel.
  const std::vector<Vec<Rational>>& boundary_basis() const { return boundary_; }
  /// Frobenius Gram weights of the coordinates.
  const Vec<Rational>& weights() const { return weights_; }

  GradedForm form_from_coordinates(const Vec<Rational>& x) const;
  GradedForm form_from_avatar(const HermitianMatrix& m) const;
  /// Avatar of a (p,p)-form; throws unless the form is real of pure bidegree (p,p).
  HermitianMatrix avatar(const GradedForm& form) const;

  Current current_from_avatar(const GMatrix& a) const;
  GMatrix current_avatar(const Current& t) const;

  /// Π_{p,p} of the adjoint twisted differential applied to a real source current given on
  /// e-coordinates of degree 2p+1.
  Current boundary_current(const Vec<Rational>& source) const;
  /// Avatar coordinates y of the boundary current of a source: G y = Lᵀ t.
  Vec<Rational> boundary_coordinates(const Vec<Rational>& source) const;

 private:
  GMatrix avatar_of_coords(const Vec<Gauss>& e_coords) const;

  const TwistedComplex* tc_;
  int p_;
  Avatar kind_;
  GMatrix avatar_map_;        // n² × dim Λ^{2p}, e-coordinates → vec(M), row a*n+b = M_ab
  GMatrix frame_avatar_inv_;  // inverse of avatar_map restricted to frame (p,p) positions
  std::vector<std::size_t> pp_positions_;
  std::vector<Vec<Rational>> basis_forms_;
  QMatrix constraint_;
  std::vector<Vec<Rational>> kernel_, boundary_;
  Vec<Rational> weights_;
};

}  // namespace lckcert
