#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "lckcert/current.hpp"

namespace lckcert {

/// c^k_ij for i < j (0-based): [e_i, e_j] = Σ_k c^k_ij e_k, hence de^k = -Σ_{i<j} c^k_ij e^i ∧ e^j.
struct StructureConstant {
  int i = 0;
  int j = 0;
  int k = 0;
  Rational value;
};

/// A Lie algebra with complex structure and closed 1-form θ; plain data, checked by validate().
struct LieModel {
  std::string name;
  std::string description;
  int dim = 0;
  std::vector<StructureConstant> structure;
  QMatrix J;  // J e_i = Σ_j J(j, i) e_j
  Vec<Rational> theta;

  int n() const { return dim / 2; }
  /// Antisymmetric bracket table: bracket(i, j)[k] = c^k_ij.
  std::vector<std::vector<Vec<Rational>>> bracket_table() const;
  LieModel with_theta(Vec<Rational> t) const;
};

struct ValidationCheck {
  std::string name;  // jacobi | j_squared | nijenhuis | theta_closed
  bool passed = true;
  std::string detail{};  // first violating index tuple (1-based) on failure
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::string summary() const;
};

/// Throws std::invalid_argument for shape errors (wrong sizes, indices out of range, i >= j).
void check_well_formed(const LieModel& m);

ValidationReport validate(const LieModel& m);

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const ValidationReport& report)
      : std::runtime_error("model failed validation: " + report.summary()), report_(report) {}
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Chevalley–Eilenberg differential d: Λ^k → Λ^{k+1} (Leibniz extension of de^k).
QMatrix ce_differential(const LieModel& m, int k);

}  // namespace lckcert
