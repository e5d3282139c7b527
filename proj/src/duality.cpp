#include "lckcert/duality.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "conic.hpp"
#include "lckcert/cohomology.hpp"

namespace lckcert {

namespace {

using conic::Cone;

Eigen::MatrixXd scaled_basis(const std::vector<Vec<Rational>>& basis, const Vec<Rational>& weights) {
  Eigen::MatrixXd m(weights.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < weights.size(); ++i)
      m(i, j) = basis[j][i].get_d() * std::sqrt(weights[i].get_d());
  return conic::orthonormal_basis(m);
}

Vec<double> unscale(const Eigen::VectorXd& y, const Vec<Rational>& weights) {
  Vec<double> x(weights.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = y(i) / std::sqrt(weights[i].get_d());
  return x;
}

std::vector<std::int64_t> denominator_ladder(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d < bound; d *= 10) out.push_back(d);
  out.push_back(std::max<std::int64_t>(bound, 1));
  return out;
}

Vec<Rational> rationalize_all(const Vec<double>& x, std::int64_t den) {
  Vec<Rational> out;
  out.reserve(x.size());
  for (double v : x) out.push_back(rationalize(v, den));
  return out;
}

std::optional<Vec<Rational>> rationalize_primal(const HermitianSlice& slice, const Vec<double>& x,
                                                std::int64_t bound) {
  for (auto den : denominator_ladder(bound)) {
    const auto q = project_onto_span(slice.kernel_basis(), slice.weights(), rationalize_all(x, den));
    if (is_positive_definite(hermitian_from_coordinates(slice.n(), q))) return q;
  }
  return std::nullopt;
}

// Float Gauss-Jordan on the rows, then rounding: exact vectors spanning (approximately) the same space.
std::vector<Vec<Gauss>> rationalize_span(Eigen::MatrixXcd rows, std::int64_t den) {
  const Eigen::Index r_count = rows.rows();
  const Eigen::Index c_count = rows.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < c_count && row < r_count; ++col) {
    Eigen::Index piv = row;
    for (Eigen::Index r = row + 1; r < r_count; ++r)
      if (std::abs(rows(r, col)) > std::abs(rows(piv, col))) piv = r;
    if (std::abs(rows(piv, col)) < 1e-9) continue;
    rows.row(piv).swap(rows.row(row));
    rows.row(row) /= rows(row, col);
    for (Eigen::Index r = 0; r < r_count; ++r)
      if (r != row) rows.row(r) -= rows(r, col) * rows.row(row);
    ++row;
  }
  std::vector<Vec<Gauss>> out;
  for (Eigen::Index r = 0; r < row; ++r) {
    Vec<Gauss> v;
    for (Eigen::Index c = 0; c < c_count; ++c)
      v.emplace_back(rationalize(rows(r, c).real(), den), rationalize(rows(r, c).imag(), den));
    out.push_back(std::move(v));
  }
  return out;
}

// Elements of span(basis) (Hermitian coordinates) annihilating each of the given vectors.
std::vector<Vec<Rational>> annihilating_subspace(int n, const std::vector<Vec<Rational>>& basis,
                                                 const std::vector<Vec<Gauss>>& nulls) {
  if (nulls.empty()) return basis;
  std::vector<GMatrix> mats;
  for (const auto& b : basis) mats.push_back(hermitian_from_coordinates(n, b));
  QMatrix eqs(2 * n * nulls.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t k = 0; k < nulls.size(); ++k) {
      const auto image = mats[j] * nulls[k];
      for (int a = 0; a < n; ++a) {
        eqs(2 * (k * n + a), j) = image[a].re();
        eqs(2 * (k * n + a) + 1, j) = image[a].im();
      }
    }
  std::vector<Vec<Rational>> out;
  for (const auto& c : nullspace(eqs)) {
    Vec<Rational> v(basis.front().size());
    for (std::size_t j = 0; j < basis.size(); ++j)
      if (sgn(c[j]) != 0)
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c[j] * basis[j][i];
    out.push_back(std::move(v));
  }
  return out;
}

// Positive semidefinite nonzero element of the boundary space near the floating dual point.
std::optional<Vec<Rational>> snap_dual(const HermitianSlice& slice, const Vec<double>& x, std::int64_t bound) {
  const int n = slice.n();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(n, n);
  {
    const auto basis = hermitian_basis(n);
    for (std::size_t j = 0; j < x.size(); ++j)
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) += x[j] * basis[j](r, c).to_complex();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  for (double threshold : {1e-6, 1e-4, 1e-8, 1e-3}) {
    Eigen::Index nulls = 0;
    while (nulls < n && es.eigenvalues()(nulls) < threshold * scale) ++nulls;
    if (nulls == n) continue;
    const Eigen::MatrixXcd null_rows = es.eigenvectors().leftCols(nulls).transpose();
    for (auto den : denominator_ladder(bound)) {
      const auto exact_nulls = nulls > 0 ? rationalize_span(null_rows, den) : std::vector<Vec<Gauss>>{};
      if (static_cast<Eigen::Index>(exact_nulls.size()) != nulls) continue;
      const auto sub = annihilating_subspace(n, slice.boundary_basis(), exact_nulls);
      if (sub.empty()) continue;
      const auto q = project_onto_span(sub, slice.weights(), rationalize_all(x, den));
      if (is_zero_vector(q)) continue;
      if (is_positive_semidefinite(hermitian_from_coordinates(n, q))) return q;
    }
  }
  return std::nullopt;
}

std::optional<Vec<Rational>> solve_source(const HermitianSlice& slice, const Vec<Rational>& y) {
  Vec<Rational> gy(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) gy[i] = slice.weights()[i] * y[i];
  return least_norm_solve(slice.constraint().transpose(), gy);
}

CheckResult fail(std::string reason) { return {false, std::move(reason)}; }

}  // namespace

std::string verdict_name(const Verdict& v) {
  if (std::holds_alternative<Feasible>(v)) return "feasible";
  if (std::holds_alternative<Infeasible>(v)) return "infeasible";
  return "undecided";
}

SdpResult sdp_feasibility(const QMatrix& constraint, const SolverConfig& cfg) {
  const auto nn = constraint.cols();
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(nn))));
  if (static_cast<std::size_t>(n) * n != nn || n == 0)
    throw std::invalid_argument("sdp_feasibility: constraint must have n² columns");
  if (!(cfg.tolerance > 0)) throw std::invalid_argument("sdp_feasibility: tolerance must be positive");
  const auto weights = hermitian_gram_weights(n);
  const auto kernel = nullspace(constraint);
  QMatrix scaled = constraint.transpose();
  for (std::size_t r = 0; r < scaled.rows(); ++r)
    for (std::size_t c = 0; c < scaled.cols(); ++c) scaled(r, c) /= weights[r];
  const auto boundary = column_space(scaled);

  const conic::Options opts{cfg.tolerance / 10, cfg.max_iterations};
  SdpResult out;
  out.n = n;
  const auto primal = conic::maximize_margin({Cone::Psd, n, scaled_basis(kernel, weights), double(n)}, opts);
  const auto dual = conic::maximize_margin({Cone::Psd, n, scaled_basis(boundary, weights), double(n)}, opts);
  out.t_star = primal.t_star;
  out.primal_empty = primal.empty;
  if (!primal.empty) out.primal = unscale(primal.x, weights);
  out.dual_t_star = dual.t_star;
  out.dual_empty = dual.empty;
  if (!dual.empty) out.dual = unscale(dual.x, weights);
  out.hit_iteration_limit = primal.hit_iteration_limit || dual.hit_iteration_limit;
  out.iterations = primal.iterations + dual.iterations;
  return out;
}

SliceOutcome solve_slice(const HermitianSlice& slice, const SolverConfig& cfg, const HermitianMatrix& psi) {
  const auto sdp = sdp_feasibility(slice.constraint(), cfg);
  SliceOutcome out;
  out.t_star = sdp.t_star;
  out.dual_t_star = sdp.dual_t_star;

  std::optional<Vec<Rational>> primal, dual;
  if (!sdp.primal_empty) primal = rationalize_primal(slice, sdp.primal, cfg.denominator_bound);
  if (!sdp.dual_empty) dual = snap_dual(slice, sdp.dual, cfg.denominator_bound);

  // Weak duality: a PD kernel element pairs positively with every nonzero PSD boundary element,
  // yet boundaries annihilate the kernel.
  if (primal && dual) throw std::logic_error("solver produced both a verified metric and a verified certificate");

  if (primal) {
    out.kind = SliceOutcome::Kind::Feasible;
    out.coordinates = *primal;
    out.eig_margin = min_eigenvalue(hermitian_from_coordinates(slice.n(), *primal));
    return out;
  }
  if (dual) {
    auto a = hermitian_from_coordinates(slice.n(), *dual);
    const Gauss s = trace_product(a, psi);
    if (!s.is_real() || sgn(s.re()) <= 0) throw std::logic_error("certificate pairs non-positively with psi");
    a *= Gauss(1 / s.re());
    const auto y = hermitian_coordinates(a);
    auto t = solve_source(slice, y);
    if (!t) throw std::logic_error("boundary element has no source");
    out.kind = SliceOutcome::Kind::Infeasible;
    out.dual_avatar = std::move(a);
    out.source = std::move(*t);
    return out;
  }
  out.kind = SliceOutcome::Kind::Undecided;
  out.reason = sdp.hit_iteration_limit ? "iteration_limit" : "rationalization_failed";
  return out;
}

Current current_d_theta(const TwistedComplex& tc, const Current& t) {
  if (t.dim() != tc.dim()) throw std::invalid_argument("current_d_theta: dimension mismatch");
  if (t.degree() == 0) return t;
  return Current(tc.dim(), t.degree() - 1, tc.d_theta_frame(t.degree() - 1).transpose() * t.coeffs());
}

Current d_theta_pq(const TwistedComplex& tc, const Current& t, int p, int q) {
  return current_d_theta(tc, t).project(tc.frame(), p, q);
}

HermitianMatrix psi_avatar(const TwistedComplex& tc, const SolverConfig& cfg) {
  if (!cfg.psi) return GMatrix::identity(tc.n());
  const auto h = to_hermitian(*cfg.psi, tc.frame());
  if (!is_positive_definite(h)) throw std::invalid_argument("psi must be positive definite");
  return h;
}

Verdict find_lck(const TwistedComplex& tc, const SolverConfig& cfg) {
  const HermitianSlice slice(tc, 1, HermitianSlice::Avatar::Direct);
  const auto out = solve_slice(slice, cfg, psi_avatar(tc, cfg));
  switch (out.kind) {
    case SliceOutcome::Kind::Feasible: {
      Feasible f{slice.form_from_coordinates(out.coordinates), out.eig_margin, true, out.t_star};
      if (!verify_metric(tc, f.metric)) throw std::logic_error("metric failed exact verification");
      return f;
    }
    case SliceOutcome::Kind::Infeasible: {
      Certificate cert{slice.current_from_avatar(out.dual_avatar),
                       Current::from_real_functional(tc.frame(), 3, out.source)};
      if (!verify_certificate(tc, cert)) throw std::logic_error("certificate failed exact verification");
      return Infeasible{std::move(cert), out.t_star};
    }
    default:
      return Undecided{out.t_star, out.reason};
  }
}

Verdict find_lck(const LieModel& m, const Vec<Rational>& theta, const SolverConfig& cfg) {
  return find_lck(TwistedComplex(m.with_theta(theta)), cfg);
}

CheckResult verify_metric(const TwistedComplex& tc, const GradedForm& w) {
  if (w.dim() != tc.dim()) return fail("wrong_dimension");
  if (w.is_zero()) return fail("not_positive_definite");
  if (!w.is_homogeneous(2)) return fail("wrong_degree");
  if (!w.is_real()) return fail("not_real");
  if (!is_pure_bidegree(w, tc.frame(), 1, 1)) return fail("not_pure_11");
  if (!is_zero_vector(tc.d_theta(2) * w.real_component(2))) return fail("not_closed");
  if (!is_positive_definite(to_hermitian(w, tc.frame()))) return fail("not_positive_definite");
  return {true, "ok"};
}

CheckResult verify_metric(const LieModel& m, const Vec<Rational>& theta, const GradedForm& w) {
  try {
    return verify_metric(TwistedComplex(m.with_theta(theta)), w);
  } catch (const std::exception&) {
    return fail("invalid_model");
  }
}

CertificateCheck verify_certificate(const TwistedComplex& tc, const Certificate& cert) {
  CertificateCheck out;
  auto reject = [&](const char* reason) {
    out.ok = false;
    out.reason = reason;
    return out;
  };
  const auto& frame = tc.frame();
  const Current& t = cert.T;
  if (t.dim() != tc.dim() || t.degree() != 2) return reject("wrong_degree");
  if (!t.is_real(frame)) return reject("not_real");
  if (!(t.project(frame, 1, 1) == t)) return reject("not_pure_11");
  if (t.is_zero()) return reject("zero");
  if (!is_positive_semidefinite(current_avatar(t, frame))) return reject("not_positive");

  if (cert.S) {
    const Current& s = *cert.S;
    if (s.dim() != tc.dim() || s.degree() != 3) return reject("wrong_degree");
    if (!s.is_real(frame)) return reject("not_real");
    if (!(d_theta_pq(tc, s, 1, 1) == t)) return reject("not_boundary");
    out.S = s;
  } else {
    const HermitianSlice slice(tc, 1, HermitianSlice::Avatar::Direct);
    const auto y = hermitian_coordinates(slice.current_avatar(t));
    const auto src = solve_source(slice, y);
    if (!src) return reject("not_boundary");
    Current s = Current::from_real_functional(frame, 3, *src);
    if (!(d_theta_pq(tc, s, 1, 1) == t)) return reject("not_boundary");
    out.S = std::move(s);
  }
  if (!annihilator_check(ker_d_theta_11(tc), t, frame)) return reject("annihilator_failed");
  out.ok = true;
  out.reason = "ok";
  return out;
}

CertificateCheck verify_certificate(const LieModel& m, const Vec<Rational>& theta, const Certificate& cert) {
  try {
    return verify_certificate(TwistedComplex(m.with_theta(theta)), cert);
  } catch (const std::exception&) {
    CertificateCheck out;
    out.reason = "invalid_model";
    return out;
  }
}

WirtingerReport wirtinger_pairing_audit(const TwistedComplex& tc, const GradedForm& w, std::size_t samples,
                                        std::uint64_t seed) {
  const auto& frame = tc.frame();
  const int n = tc.n();
  const auto h = to_hermitian(w, frame);
  WirtingerReport report;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-10, 10);

  auto probe = [&](const Vec<Gauss>& v) {
    const Gauss value = pair(positive_generator(v, frame), w, frame);
    if (!value.is_real()) throw std::logic_error("pairing of real currents is not real");
    if (report.samples == 0 || value.re() < report.min_value) {
      report.min_value = value.re();
      report.min_sample = v;
    }
    if (sgn(value.re()) <= 0) {
      ++report.violations;
      if (!report.violation) report.violation = v;
    }
    ++report.samples;
  };

  if (samples > 0) {
    Vec<Gauss> v;
    for (const auto& z : min_eigenvector(h))
      v.emplace_back(rationalize(z.real() * 1000, 1), rationalize(z.imag() * 1000, 1));
    if (is_zero_vector(v)) v.assign(n, Gauss(1));
    probe(v);
  }
  while (report.samples < samples) {
    Vec<Gauss> v;
    for (int a = 0; a < n; ++a) v.emplace_back(Rational(coord(rng)), Rational(coord(rng)));
    if (is_zero_vector(v)) continue;
    probe(v);
  }
  return report;
}

}  // namespace lckcert
