#pragma once

#include <vector>

#include "lckcert/frame.hpp"

namespace lckcert {

// Convention: a real (1,1)-form is ω = (i/2) Σ_{a,b} H_ab Z^a ∧ Z̄^b. With Z^a = e^{2a-1} + i e^{2a}
// for the standard structure, e^{2a-1} ∧ e^{2a} has avatar E_aa and ω(v, Jv) > 0 ⟺ H ≻ 0.

/// n×n Gaussian-rational matrix; Hermitian-ness is checked where it matters.
using HermitianMatrix = GMatrix;

bool is_hermitian(const GMatrix& h);

GradedForm from_hermitian(const HermitianMatrix& h, const ComplexFrame& frame);
/// Throws std::invalid_argument unless w is real and of pure bidegree (1,1).
HermitianMatrix to_hermitian(const GradedForm& w, const ComplexFrame& frame);

/// Real basis of Hermitian n×n matrices: E_aa (a = 0..n-1), then for a < b the pair
/// E_ab + E_ba, i(E_ab - E_ba). Frobenius-orthogonal with squared norms 1 and 2.
std::vector<HermitianMatrix> hermitian_basis(int n);
Vec<Rational> hermitian_gram_weights(int n);
Vec<Rational> hermitian_coordinates(const HermitianMatrix& h);
HermitianMatrix hermitian_from_coordinates(int n, const Vec<Rational>& x);

/// tr(A B), exact.
Gauss trace_product(const GMatrix& a, const GMatrix& b);

/// Exact tests: PSD via all principal minors ≥ 0, PD via leading principal minors > 0.
bool is_positive_semidefinite(const HermitianMatrix& h);
bool is_positive_definite(const HermitianMatrix& h);

/// Floating eigenvalues (ascending) and eigenvectors, for witnesses and reports only.
std::vector<double> eigenvalues(const HermitianMatrix& h);
double min_eigenvalue(const HermitianMatrix& h);
/// Unit eigenvector for the smallest eigenvalue (floating).
std::vector<std::complex<double>> min_eigenvector(const HermitianMatrix& h);

}  // namespace lckcert
