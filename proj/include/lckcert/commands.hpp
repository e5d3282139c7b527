#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lckcert/io.hpp"

namespace lckcert {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInfeasible = 10;
inline constexpr int kExitUndecided = 20;

struct CommandOptions {
  std::optional<Vec<Rational>> theta;  // overrides the model's θ
  SolverConfig cfg;
  bool timing = false;  // adds timing_ms; off by default so reports are reproducible byte for byte
  int p = 1;
  std::optional<ConeMode> mode;
  std::size_t samples = 0;
  std::size_t audit_samples = 1000;
  // sweep
  std::string grid = "axis";  // axis | product
  Vec<Rational> values{Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1), Rational(2)};
  std::optional<Vec<Rational>> direction;
  unsigned threads = 0;  // 0: hardware concurrency
  std::string export_dir;
};

struct CommandResult {
  Json report;
  int exit_code = kExitOk;
  std::vector<Json> lines;  // sweep: one JSON document per grid point, in grid order
};

/// Solver defaults with LCKCERT_TOL applied when set.
SolverConfig default_solver_config();

/// "catalog:NAME" or a path to a model file.
LieModel resolve_model(const std::string& spec);

CommandResult cmd_catalog(const CommandOptions& opts = {});
CommandResult cmd_validate(const std::string& model);
CommandResult cmd_cohomology(const std::string& model, const CommandOptions& opts = {});
CommandResult cmd_find_lck(const std::string& model, const CommandOptions& opts = {});
/// Re-checks the witness embedded in a find-lck or transverse report. The model comes from the
/// report unless given.
CommandResult cmd_verify(const std::optional<std::string>& model, const Json& report);
CommandResult cmd_transverse(const std::string& model, const CommandOptions& opts = {});
CommandResult cmd_sweep(const std::string& model, const CommandOptions& opts = {});

/// θ values visited by cmd_sweep, in report order.
std::vector<Vec<Rational>> sweep_grid(const LieModel& m, const CommandOptions& opts);

/// find-lck report body for an already computed verdict (no timing).
Json find_lck_report(const TwistedComplex& tc, const Verdict& v, const CommandOptions& opts);

}  // namespace lckcert
