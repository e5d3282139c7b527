#include "conic.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace lckcert::conic {

namespace {

const double kSqrt2 = std::sqrt(2.0);

Eigen::VectorXd project_cone(Cone cone, int n, const Eigen::VectorXd& y) {
  if (cone == Cone::Orthant) return y.cwiseMax(0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_matrix(n, y));
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  const Eigen::MatrixXcd v = es.eigenvectors();
  return from_matrix(v * ev.cast<std::complex<double>>().asDiagonal() * v.adjoint());
}

struct Affine {
  const Eigen::MatrixXd& q;
  Eigen::VectorXd pu;  // projection of unit onto V
  double pu_norm2;
  double level;

  Eigen::VectorXd project(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const {
    Eigen::VectorXd px = q * (q.transpose() * x);
    return px + ((level - u.dot(px)) / pu_norm2) * pu;
  }
};

enum class Test { Feasible, Infeasible, Limit };

}  // namespace

int coordinate_count(Cone cone, int n) { return cone == Cone::Psd ? n * n : n; }

Eigen::VectorXd unit(Cone cone, int n) {
  Eigen::VectorXd u = Eigen::VectorXd::Zero(coordinate_count(cone, n));
  if (cone == Cone::Orthant) return Eigen::VectorXd::Ones(n);
  u.head(n).setOnes();
  return u;
}

Eigen::MatrixXcd to_matrix(int n, const Eigen::VectorXd& y) {
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int a = 0; a < n; ++a) h(a, a) = y(a);
  int k = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const std::complex<double> z(y(k) / kSqrt2, y(k + 1) / kSqrt2);
      h(a, b) = z;
      h(b, a) = std::conj(z);
      k += 2;
    }
  return h;
}

Eigen::VectorXd from_matrix(const Eigen::MatrixXcd& h) {
  const int n = static_cast<int>(h.rows());
  Eigen::VectorXd y(n * n);
  for (int a = 0; a < n; ++a) y(a) = h(a, a).real();
  int k = n;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const auto z = 0.5 * (h(a, b) + std::conj(h(b, a)));
      y(k) = kSqrt2 * z.real();
      y(k + 1) = kSqrt2 * z.imag();
      k += 2;
    }
  return y;
}

double margin(Cone cone, int n, const Eigen::VectorXd& x) {
  if (cone == Cone::Orthant) return x.minCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_matrix(n, x), Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& columns) {
  if (columns.cols() == 0) return Eigen::MatrixXd(columns.rows(), 0);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double cutoff = 1e-10 * std::max(1.0, s(0));
  int r = 0;
  while (r < s.size() && s(r) > cutoff) ++r;
  return svd.matrixU().leftCols(r);
}

Result maximize_margin(const Problem& problem, const Options& options) {
  const Cone cone = problem.cone;
  const int n = problem.n;
  const Eigen::VectorXd u = unit(cone, n);
  Result result;
  const Eigen::MatrixXd& q = problem.subspace;
  if (q.cols() == 0) {
    result.empty = true;
    result.t_star = -std::numeric_limits<double>::infinity();
    return result;
  }
  Eigen::VectorXd pu = q * (q.transpose() * u);
  const double pu_norm2 = pu.squaredNorm();
  if (pu_norm2 < 1e-14 * u.squaredNorm()) {
    result.empty = true;
    result.t_star = -std::numeric_limits<double>::infinity();
    return result;
  }
  const Affine affine{q, pu, pu_norm2, problem.level};

  // Any point of the affine set gives a lower bound; ⟨unit, x - t·unit⟩ ≥ 0 gives the upper one.
  Eigen::VectorXd best = (problem.level / pu_norm2) * pu;
  double lo = margin(cone, n, best);
  double hi = problem.level / u.squaredNorm();
  Eigen::VectorXd start = best;

  auto test = [&](double t, Eigen::VectorXd& x) {
    const double target = t + options.tolerance;
    double prev_gap = std::numeric_limits<double>::infinity();
    int slow = 0;
    for (int it = 0; it < options.max_iterations; ++it) {
      ++result.iterations;
      const Eigen::VectorXd c = target * u + project_cone(cone, n, x - target * u);
      const Eigen::VectorXd next = affine.project(c, u);
      const double gap = (next - c).norm();
      x = next;
      if (margin(cone, n, x) >= t) return Test::Feasible;
      // Alternating projections between disjoint sets settle at a fixed positive gap.
      if (gap > prev_gap * (1.0 - 1e-7)) {
        if (++slow > 20) return Test::Infeasible;
      } else {
        slow = 0;
      }
      prev_gap = gap;
    }
    return Test::Limit;
  };

  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    Eigen::VectorXd x = start;
    const Test outcome = test(mid, x);
    if (outcome == Test::Feasible) {
      lo = std::max(mid, margin(cone, n, x));
      best = x;
      start = x;
    } else {
      if (outcome == Test::Limit) result.hit_iteration_limit = true;
      hi = mid;
    }
  }
  result.t_star = lo;
  result.x = best;
  return result;
}

}  // namespace lckcert::conic
