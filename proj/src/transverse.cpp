#include "lckcert/transverse.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "conic.hpp"
#include "lckcert/cohomology.hpp"

namespace lckcert {

namespace {

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<std::int64_t> ladder(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d < bound; d *= 10) out.push_back(d);
  out.push_back(std::max<std::int64_t>(bound, 1));
  return out;
}

Eigen::MatrixXd to_eigen_columns(const std::vector<Vec<Rational>>& basis, std::size_t rows) {
  Eigen::MatrixXd m(rows, basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = basis[j][i].get_d();
  return conic::orthonormal_basis(m);
}

Vec<Rational> rounded(const Eigen::VectorXd& x, std::int64_t den) {
  Vec<Rational> out;
  for (Eigen::Index i = 0; i < x.size(); ++i) out.push_back(rationalize(x(i), den));
  return out;
}

GradedForm psi_form(const TwistedComplex& tc, const SolverConfig& cfg) {
  return cfg.psi ? *cfg.psi : from_hermitian(GMatrix::identity(tc.n()), tc.frame());
}

GradedForm power(const GradedForm& a, int k) {
  GradedForm out = GradedForm::scalar(a.dim(), Gauss(1));
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

CheckResult fail(std::string reason) { return {false, std::move(reason)}; }

TransverseVerdict from_lck(const Verdict& v) {
  if (const auto* f = std::get_if<Feasible>(&v)) return TransverseFeasible{f->metric, f->eig_margin, Guarantee::Exact, {}};
  if (const auto* i = std::get_if<Infeasible>(&v))
    return TransverseInfeasible{i->certificate.T, i->certificate.S, Guarantee::Exact, {}};
  const auto& u = std::get<Undecided>(v);
  return TransverseUndecided{u.best_margin, u.reason};
}

TransverseVerdict solve_wedge_dual(const TwistedComplex& tc, int p, const SolverConfig& cfg) {
  const HermitianSlice slice(tc, p, HermitianSlice::Avatar::WedgeDual);
  const auto psi = slice.avatar(power(psi_form(tc, cfg), p));
  const auto out = solve_slice(slice, cfg, psi);
  switch (out.kind) {
    case SliceOutcome::Kind::Feasible: {
      TransverseFeasible f{slice.form_from_coordinates(out.coordinates), out.eig_margin, Guarantee::Exact, {}};
      if (!verify_transverse_form(tc, p, f.form)) throw std::logic_error("transverse form failed exact verification");
      return f;
    }
    case SliceOutcome::Kind::Infeasible: {
      TransverseInfeasible i{slice.current_from_avatar(out.dual_avatar),
                             Current::from_real_functional(tc.frame(), 2 * p + 1, out.source), Guarantee::Exact, {}};
      if (!verify_transverse_certificate(tc, p, i.T, *i.S))
        throw std::logic_error("transverse certificate failed exact verification");
      return i;
    }
    default:
      return TransverseUndecided{out.t_star, out.reason};
  }
}

TransverseVerdict solve_sampled(const TwistedComplex& tc, int p, const SolverConfig& cfg,
                                const std::vector<Decomposable>& gens) {
  const auto& frame = tc.frame();
  const int deg = 2 * p;
  const std::size_t k_count = gens.size();
  std::vector<Vec<Rational>> forms;
  for (const auto& g : gens) forms.push_back(decomposable_form(g, frame).real_component(deg));
  const QMatrix c = tc.d_theta(deg) * QMatrix::from_columns(ExteriorBasis::get(tc.dim()).size(deg), forms);
  const QMatrix ct = c.transpose();
  const Vec<Rational> ones(k_count, Rational(1));

  const auto kernel = nullspace(c);
  const auto range = column_space(ct);
  const conic::Options opts{cfg.tolerance / 10, cfg.max_iterations};
  const double level = static_cast<double>(k_count);
  const auto primal =
      conic::maximize_margin({conic::Cone::Orthant, int(k_count), to_eigen_columns(kernel, k_count), level}, opts);
  const auto dual =
      conic::maximize_margin({conic::Cone::Orthant, int(k_count), to_eigen_columns(range, k_count), level}, opts);

  std::optional<Vec<Rational>> lambda;
  if (!primal.empty && primal.t_star > 0)
    for (auto den : ladder(cfg.denominator_bound)) {
      auto q = project_onto_span(kernel, ones, rounded(primal.x, den));
      bool positive = true;
      for (const auto& v : q) positive = positive && sgn(v) > 0;
      if (positive) {
        lambda = std::move(q);
        break;
      }
    }

  std::optional<Vec<Rational>> y;
  if (!dual.empty) {
    const double scale = std::max(1.0, dual.x.cwiseAbs().maxCoeff());
    for (double threshold : {1e-6, 1e-4, 1e-8, 1e-3}) {
      std::vector<std::size_t> zeros;
      for (std::size_t k = 0; k < k_count; ++k)
        if (dual.x(k) < threshold * scale) zeros.push_back(k);
      if (zeros.size() == k_count) continue;
      QMatrix eqs(zeros.size(), range.size());
      for (std::size_t r = 0; r < zeros.size(); ++r)
        for (std::size_t j = 0; j < range.size(); ++j) eqs(r, j) = range[j][zeros[r]];
      std::vector<Vec<Rational>> sub;
      for (const auto& coef : nullspace(eqs)) {
        Vec<Rational> v(k_count);
        for (std::size_t j = 0; j < range.size(); ++j)
          if (sgn(coef[j]) != 0)
            for (std::size_t k = 0; k < k_count; ++k) v[k] += coef[j] * range[j][k];
        sub.push_back(std::move(v));
      }
      if (sub.empty()) continue;
      for (auto den : ladder(cfg.denominator_bound)) {
        auto q = project_onto_span(sub, ones, rounded(dual.x, den));
        bool nonneg = !is_zero_vector(q);
        for (const auto& v : q) nonneg = nonneg && sgn(v) >= 0;
        if (nonneg) {
          y = std::move(q);
          break;
        }
      }
      if (y) break;
    }
  }

  if (lambda && y) throw std::logic_error("sampled solver produced both a form and a certificate");
  if (lambda) {
    Vec<Rational> e(forms.front().size());
    Rational min_weight = (*lambda)[0];
    for (std::size_t k = 0; k < k_count; ++k) {
      min_weight = std::min(min_weight, (*lambda)[k]);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (sgn(forms[k][i]) != 0) e[i] += (*lambda)[k] * forms[k][i];
    }
    TransverseFeasible f{GradedForm::homogeneous(tc.dim(), deg, e), min_weight.get_d(), Guarantee::Inner, *lambda};
    if (!verify_sampled_form(tc, gens, f.weights, f.form)) throw std::logic_error("sampled form failed verification");
    return f;
  }
  if (y) {
    Rational total = 0;
    for (const auto& v : *y) total += v;
    for (auto& v : *y) v /= total;
    const auto s = least_norm_solve(ct, *y);
    if (!s) throw std::logic_error("sampled certificate has no source");
    Current src = Current::from_real_functional(frame, deg + 1, *s);
    TransverseInfeasible i{d_theta_pq(tc, src, p, p), src, Guarantee::Outer, *y};
    if (!verify_sampled_certificate(tc, p, gens, i.T, src))
      throw std::logic_error("sampled certificate failed verification");
    return i;
  }
  return TransverseUndecided{primal.t_star, "sampling_exhausted"};
}

void check_p(const TwistedComplex& tc, int p) {
  if (p < 1 || p > tc.n() - 1) throw std::invalid_argument("transverse: p must satisfy 1 <= p <= n-1");
}

}  // namespace

GradedForm decomposable_form(const Decomposable& g, const ComplexFrame& frame) {
  const int n = frame.n();
  GradedForm out = GradedForm::scalar(frame.dim(), Gauss(1));
  for (const auto& alpha : g.alphas) {
    if (static_cast<int>(alpha.size()) != n) throw std::invalid_argument("decomposable_form: alpha must have n entries");
    Vec<Gauss> a(frame.dim()), abar(frame.dim());
    for (int i = 0; i < n; ++i) {
      a[i] = alpha[i];
      abar[n + i] = alpha[i].conj();
    }
    const auto factor = wedge(frame.from_frame_coords(1, a), frame.from_frame_coords(1, abar));
    out = wedge(out, factor * Gauss(0, Rational(1, 2)));
  }
  return out;
}

std::vector<Decomposable> strongly_positive_sample(int n, int p, std::size_t count, std::uint64_t seed) {
  if (n < 1 || p < 1 || p > n) throw std::invalid_argument("strongly_positive_sample: need 1 <= p <= n");
  std::vector<Decomposable> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (std::popcount(m) != p) continue;
    Decomposable g;
    for (int a = 0; a < n; ++a)
      if (m & (Mask{1} << a)) {
        Vec<Gauss> v(n);
        v[a] = Gauss(1);
        g.alphas.push_back(std::move(v));
      }
    out.push_back(std::move(g));
  }
  // Masks enumerate in numeric order; make the axis list lexicographic in the index sets.
  std::sort(out.begin(), out.end(), [n](const Decomposable& x, const Decomposable& y) {
    auto key = [n](const Decomposable& d) {
      std::vector<int> idx;
      for (const auto& v : d.alphas)
        for (int a = 0; a < n; ++a)
          if (!v[a].is_zero()) idx.push_back(a);
      return idx;
    };
    return key(x) < key(y);
  });
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-2, 2);
  while (out.size() < count) {
    Decomposable g;
    while (static_cast<int>(g.alphas.size()) < p) {
      Vec<Gauss> v;
      for (int a = 0; a < n; ++a) v.emplace_back(Rational(coord(rng)), Rational(coord(rng)));
      if (!is_zero_vector(v)) g.alphas.push_back(std::move(v));
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::string to_string(ConeMode m) {
  switch (m) {
    case ConeMode::ExactPsd: return "exact_psd";
    case ConeMode::ExactDualPsd: return "exact_dual_psd";
    default: return "sampled";
  }
}

std::string to_string(Guarantee g) {
  switch (g) {
    case Guarantee::Exact: return "exact";
    case Guarantee::Inner: return "inner";
    default: return "outer";
  }
}

std::string verdict_name(const TransverseVerdict& v) {
  if (std::holds_alternative<TransverseFeasible>(v)) return "feasible";
  if (std::holds_alternative<TransverseInfeasible>(v)) return "infeasible";
  return "undecided";
}

PositiveConeModel cone_model(int n, int p, const SolverConfig& cfg, const TransverseOptions& opts) {
  PositiveConeModel model;
  model.p = p;
  model.seed = cfg.seed;
  if (opts.mode) {
    model.mode = *opts.mode;
  } else if (p == 1) {
    model.mode = ConeMode::ExactPsd;
  } else if (p == n - 1) {
    model.mode = ConeMode::ExactDualPsd;
  } else {
    model.mode = ConeMode::Sampled;
  }
  if (model.mode == ConeMode::ExactPsd && p != 1) throw std::invalid_argument("exact_psd mode needs p = 1");
  if (model.mode == ConeMode::ExactDualPsd && p != n - 1) throw std::invalid_argument("exact_dual_psd mode needs p = n-1");
  if (model.mode == ConeMode::Sampled) {
    const std::size_t axis = binomial(n, p);
    const std::size_t count = opts.sample_count ? opts.sample_count : 2 * axis * axis + axis;
    model.generators = strongly_positive_sample(n, p, count, cfg.seed);
  }
  return model;
}

TransverseVerdict find_transverse(const TwistedComplex& tc, int p, const SolverConfig& cfg,
                                  const TransverseOptions& opts) {
  check_p(tc, p);
  const auto model = cone_model(tc.n(), p, cfg, opts);
  switch (model.mode) {
    case ConeMode::ExactPsd: return from_lck(find_lck(tc, cfg));
    case ConeMode::ExactDualPsd: return solve_wedge_dual(tc, p, cfg);
    default: return solve_sampled(tc, p, cfg, model.generators);
  }
}

CheckResult verify_transverse_form(const TwistedComplex& tc, int p, const GradedForm& form) {
  check_p(tc, p);
  if (p == 1) return verify_metric(tc, form);
  if (p != tc.n() - 1) throw std::invalid_argument("exact transverse verification needs p = 1 or p = n-1");
  const int deg = 2 * p;
  if (form.dim() != tc.dim()) return fail("wrong_dimension");
  if (form.is_zero()) return fail("not_positive_definite");
  if (!form.is_homogeneous(deg)) return fail("wrong_degree");
  if (!form.is_real()) return fail("not_real");
  if (!is_pure_bidegree(form, tc.frame(), p, p)) return fail("not_pure_pp");
  if (!is_zero_vector(tc.d_theta(deg) * form.real_component(deg))) return fail("not_closed");
  const HermitianSlice slice(tc, p, HermitianSlice::Avatar::WedgeDual);
  if (!is_positive_definite(slice.avatar(form))) return fail("not_positive_definite");
  return {true, "ok"};
}

CheckResult verify_transverse_certificate(const TwistedComplex& tc, int p, const Current& t, const Current& s) {
  check_p(tc, p);
  if (p == 1) return verify_certificate(tc, Certificate{t, s});
  if (p != tc.n() - 1) throw std::invalid_argument("exact transverse verification needs p = 1 or p = n-1");
  const auto& frame = tc.frame();
  const int deg = 2 * p;
  if (t.dim() != tc.dim() || t.degree() != deg || s.dim() != tc.dim() || s.degree() != deg + 1)
    return fail("wrong_degree");
  if (!t.is_real(frame) || !s.is_real(frame)) return fail("not_real");
  if (!(t.project(frame, p, p) == t)) return fail("not_pure_pp");
  if (t.is_zero()) return fail("zero");
  const HermitianSlice slice(tc, p, HermitianSlice::Avatar::WedgeDual);
  const auto a = slice.current_avatar(t);
  if (!is_hermitian(a) || !is_positive_semidefinite(a)) return fail("not_positive");
  if (!(d_theta_pq(tc, s, p, p) == t)) return fail("not_boundary");
  for (const auto& x : slice.kernel_basis())
    if (!pair(t, slice.form_from_coordinates(x), frame).is_zero()) return fail("annihilator_failed");
  return {true, "ok"};
}

CheckResult verify_sampled_form(const TwistedComplex& tc, const std::vector<Decomposable>& gens,
                                const Vec<Rational>& weights, const GradedForm& form) {
  if (weights.size() != gens.size() || gens.empty()) return fail("weight_count");
  GradedForm sum = GradedForm::zero(tc.dim());
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (sgn(weights[k]) <= 0) return fail("nonpositive_weight");
    sum += decomposable_form(gens[k], tc.frame()) * Gauss(weights[k]);
  }
  if (sum != form) return fail("not_conic_combination");
  if (!twisted_d(tc, form).is_zero()) return fail("not_closed");
  return {true, "ok"};
}

CheckResult verify_sampled_certificate(const TwistedComplex& tc, int p, const std::vector<Decomposable>& gens,
                                       const Current& t, const Current& s) {
  const auto& frame = tc.frame();
  if (t.dim() != tc.dim() || t.degree() != 2 * p || s.degree() != 2 * p + 1) return fail("wrong_degree");
  if (!s.is_real(frame)) return fail("not_real");
  if (t.is_zero()) return fail("zero");
  if (!(d_theta_pq(tc, s, p, p) == t)) return fail("not_boundary");
  bool some_positive = false;
  for (const auto& g : gens) {
    const Gauss v = pair(t, decomposable_form(g, frame), frame);
    if (!v.is_real() || sgn(v.re()) < 0) return fail("negative_on_generator");
    some_positive = some_positive || sgn(v.re()) > 0;
  }
  if (!some_positive) return fail("zero_on_generators");
  return {true, "ok"};
}

}  // namespace lckcert
