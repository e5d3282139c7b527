#pragma once

#include <memory>
#include <vector>

#include "lckcert/model.hpp"

namespace lckcert {

/// All operator matrices of a validated model, built once at construction.
///
/// Real-basis matrices (d, θ∧, d_θ) act on e-coordinates. Frame matrices act on W-coordinates;
/// there ∂_θ and ∂̄_θ are the (+1,0) and (0,+1) blocks of d_θ, which is exactly ∂ - θ^{1,0}∧ and
/// ∂̄ - θ^{0,1}∧ when J is integrable.
class TwistedComplex {
 public:
  /// Throws ValidationError unless validate(model) passes.
  explicit TwistedComplex(LieModel model);

  const LieModel& model() const { return model_; }
  const ComplexFrame& frame() const { return *frame_; }
  int dim() const { return model_.dim; }
  int n() const { return model_.n(); }
  const Vec<Rational>& theta() const { return model_.theta; }

  const QMatrix& d(int k) const { return d_.at(k); }
  const QMatrix& theta_wedge(int k) const { return theta_wedge_.at(k); }
  const QMatrix& d_theta(int k) const { return d_theta_.at(k); }

  const GMatrix& d_theta_frame(int k) const { return d_theta_frame_.at(k); }
  const GMatrix& partial_frame(int k) const { return partial_.at(k); }
  const GMatrix& partialbar_frame(int k) const { return partialbar_.at(k); }
  /// d_θ^c = i(∂_θ - ∂̄_θ) in frame coordinates.
  GMatrix dc_frame(int k) const;

  /// Same model with another θ; reuses the frame.
  TwistedComplex with_theta(const Vec<Rational>& theta) const;

 private:
  TwistedComplex(LieModel model, std::shared_ptr<const ComplexFrame> frame, std::vector<QMatrix> d);
  void build_twisted();

  LieModel model_;
  std::shared_ptr<const ComplexFrame> frame_;
  std::vector<QMatrix> d_, theta_wedge_, d_theta_;
  std::vector<GMatrix> d_theta_frame_, partial_, partialbar_;
};

GradedForm twisted_d(const TwistedComplex& tc, const GradedForm& a);
GradedForm untwisted_d(const TwistedComplex& tc, const GradedForm& a);
GradedForm partial_t(const TwistedComplex& tc, const GradedForm& a);
GradedForm partialbar_t(const TwistedComplex& tc, const GradedForm& a);
GradedForm dc_t(const TwistedComplex& tc, const GradedForm& a);

/// d_θ v + d_θ^c u for constant functions u, v; zero iff u + iv is ∂̄_θ-closed.
GradedForm theta_pluriharmonic_defect(const TwistedComplex& tc, const Rational& u, const Rational& v);

/// Closed invariant 1-forms (kernel of d on Λ¹), reduced-echelon basis.
std::vector<Vec<Rational>> closed_one_forms(const LieModel& m);

}  // namespace lckcert
