#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lckcert/model.hpp"

namespace lckcert {

/// Standard complex structure J e_{2a-1} = e_{2a} on ℝ^{2n}.
QMatrix standard_complex_structure(int dim);

/// Abelian algebra of dimension dim with standard J and θ = 0.
LieModel torus_model(int dim);

struct CatalogEntry {
  LieModel model;
  /// Expected find_lck verdict for the shipped θ ("feasible" / "infeasible").
  std::string expected_verdict;
};

/// torus4, torus6, kt, hopf, inoue (in this order).
const std::vector<CatalogEntry>& catalog();
std::optional<LieModel> catalog_model(const std::string& name);

}  // namespace lckcert
