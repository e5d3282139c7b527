#include "lckcert/operators.hpp"

namespace lckcert {

namespace {

std::vector<QMatrix> all_differentials(const LieModel& m) {
  std::vector<QMatrix> d;
  for (int k = 0; k <= m.dim; ++k) d.push_back(ce_differential(m, k));
  return d;
}

const LieModel& validated(const LieModel& m) {
  const auto report = validate(m);
  if (!report.ok()) throw ValidationError(report);
  return m;
}

}  // namespace

TwistedComplex::TwistedComplex(LieModel model) : model_(validated(model)) {
  frame_ = std::make_shared<const ComplexFrame>(model_.J);
  d_ = all_differentials(model_);
  build_twisted();
}

TwistedComplex::TwistedComplex(LieModel model, std::shared_ptr<const ComplexFrame> frame, std::vector<QMatrix> d)
    : model_(std::move(model)), frame_(std::move(frame)), d_(std::move(d)) {
  build_twisted();
}

TwistedComplex TwistedComplex::with_theta(const Vec<Rational>& theta) const {
  return TwistedComplex(validated(model_.with_theta(theta)), frame_, d_);
}

void TwistedComplex::build_twisted() {
  const int dim = model_.dim;
  const auto& basis = ExteriorBasis::get(dim);
  for (int k = 0; k <= dim; ++k) {
    theta_wedge_.push_back(left_wedge_matrix(model_.theta, k));
    d_theta_.push_back(d_[k] - theta_wedge_[k]);
  }
  for (int k = 0; k <= dim; ++k) {
    if (k == dim) {
      d_theta_frame_.emplace_back(0, basis.size(k));
      partial_.emplace_back(0, basis.size(k));
      partialbar_.emplace_back(0, basis.size(k));
      continue;
    }
    GMatrix df = frame_->to_frame(k + 1) * (to_gauss(d_theta_[k]) * frame_->from_frame(k));
    GMatrix pa(df.rows(), df.cols()), pb(df.rows(), df.cols());
    for (std::size_t c = 0; c < df.cols(); ++c) {
      const auto tc = frame_->type(basis.mask(k, c));
      for (std::size_t r = 0; r < df.rows(); ++r) {
        if (df(r, c).is_zero()) continue;
        const auto tr = frame_->type(basis.mask(k + 1, r));
        if (tr.p == tc.p + 1) pa(r, c) = df(r, c);
        else if (tr.q == tc.q + 1) pb(r, c) = df(r, c);
      }
    }
    d_theta_frame_.push_back(std::move(df));
    partial_.push_back(std::move(pa));
    partialbar_.push_back(std::move(pb));
  }
}

GMatrix TwistedComplex::dc_frame(int k) const { return (partial_.at(k) - partialbar_.at(k)) * Gauss::i(); }

namespace {

template <class Op>
GradedForm apply_frame(const TwistedComplex& tc, const GradedForm& a, Op op) {
  GradedForm out(tc.dim());
  const auto& fr = tc.frame();
  for (int k : a.degrees()) {
    if (k >= tc.dim()) continue;
    out += fr.from_frame_coords(k + 1, op(k) * fr.to_frame_coords(a, k));
  }
  return out;
}

}  // namespace

GradedForm twisted_d(const TwistedComplex& tc, const GradedForm& a) {
  GradedForm out(tc.dim());
  for (int k : a.degrees()) {
    if (k >= tc.dim()) continue;
    out += GradedForm::homogeneous(tc.dim(), k + 1, to_gauss(tc.d_theta(k)) * a.component(k));
  }
  return out;
}

GradedForm untwisted_d(const TwistedComplex& tc, const GradedForm& a) {
  GradedForm out(tc.dim());
  for (int k : a.degrees()) {
    if (k >= tc.dim()) continue;
    out += GradedForm::homogeneous(tc.dim(), k + 1, to_gauss(tc.d(k)) * a.component(k));
  }
  return out;
}

GradedForm partial_t(const TwistedComplex& tc, const GradedForm& a) {
  return apply_frame(tc, a, [&](int k) -> const GMatrix& { return tc.partial_frame(k); });
}

GradedForm partialbar_t(const TwistedComplex& tc, const GradedForm& a) {
  return apply_frame(tc, a, [&](int k) -> const GMatrix& { return tc.partialbar_frame(k); });
}

GradedForm dc_t(const TwistedComplex& tc, const GradedForm& a) {
  return (partial_t(tc, a) - partialbar_t(tc, a)) * Gauss::i();
}

GradedForm theta_pluriharmonic_defect(const TwistedComplex& tc, const Rational& u, const Rational& v) {
  return twisted_d(tc, GradedForm::scalar(tc.dim(), Gauss(v))) + dc_t(tc, GradedForm::scalar(tc.dim(), Gauss(u)));
}

std::vector<Vec<Rational>> closed_one_forms(const LieModel& m) { return nullspace(ce_differential(m, 1)); }

}  // namespace lckcert
