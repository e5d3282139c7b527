#pragma once

#include <random>
#include <vector>

#include "lckcert/catalog.hpp"
#include "lckcert/operators.hpp"

namespace lckcert::testing {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);

/// Direct sum of 4-dimensional catalog algebras and abelian planes, total dimension dim (4, 6 or 8),
/// in a random basis (complex-linear or generic, in which case J is no longer standard), with a
/// random closed θ.
LieModel random_model(Rng& rng, int dim);

/// Direct sum of models (structure, J and θ block diagonal).
LieModel direct_sum(const std::vector<LieModel>& parts, const std::string& name);

/// Same algebra in the basis f_i = Σ_j P(j, i) e_j.
LieModel change_basis(const LieModel& m, const QMatrix& p);

/// Random closed 1-form with small integer coordinates in the closed_one_forms basis.
Vec<Rational> random_closed_theta(Rng& rng, const LieModel& m);

/// d on Λ^k from dα(X_0..X_k) = Σ_{i<j} (-1)^{i+j} α([X_i, X_j], X_0, .., X_k) (hats omitted).
QMatrix oracle_ce_differential(const LieModel& m, int k);

Vec<Gauss> random_gauss_vector(Rng& rng, std::size_t size, int bound = 3);
Vec<Rational> random_rational_vector(Rng& rng, std::size_t size, int bound = 3);
GradedForm random_form(Rng& rng, int dim, int degree, bool real = false);

/// The 20 random models used by the property tests and the acceptance suite.
std::vector<LieModel> seeded_models(std::uint64_t seed, int count);

}  // namespace lckcert::testing
