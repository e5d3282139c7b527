#pragma once

#include <Eigen/Dense>

namespace lckcert::conic {

// Cones over orthonormal real coordinates. Psd: Hermitian n×n matrices, coordinates
// (H_aa, √2 Re H_ab, √2 Im H_ab for a<b) matching hermitian_basis scaled to unit norm. Orthant: ℝ^n_+.
enum class Cone { Psd, Orthant };

struct Problem {
  Cone cone = Cone::Psd;
  int n = 0;                 // matrix size (Psd) or number of coordinates (Orthant)
  Eigen::MatrixXd subspace;  // orthonormal columns spanning V
  double level = 1.0;        // ⟨unit, x⟩ = level
};

struct Options {
  double tolerance = 1e-9;  // bisection width
  int max_iterations = 20000;  // per feasibility test
};

struct Result {
  bool empty = false;        // V ∩ {⟨unit,x⟩ = level} is empty
  double t_star = 0.0;       // best certified margin: x - t_star·unit in the cone
  Eigen::VectorXd x;         // point of V realizing t_star
  bool hit_iteration_limit = false;
  long iterations = 0;
};

int coordinate_count(Cone cone, int n);
Eigen::VectorXd unit(Cone cone, int n);
/// Smallest eigenvalue (Psd) or smallest entry (Orthant).
double margin(Cone cone, int n, const Eigen::VectorXd& x);
Eigen::MatrixXcd to_matrix(int n, const Eigen::VectorXd& y);
Eigen::VectorXd from_matrix(const Eigen::MatrixXcd& h);

/// max t such that some x ∈ V with ⟨unit,x⟩ = level has x - t·unit in the cone, by bisection on t
/// with alternating projections for each feasibility test.
Result maximize_margin(const Problem& problem, const Options& options);

/// Orthonormal basis of the span of the given columns.
Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& columns);

}  // namespace lckcert::conic
