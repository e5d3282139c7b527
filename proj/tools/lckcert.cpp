#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lckcert/commands.hpp"

using namespace lckcert;

namespace {

void print(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

ConeMode parse_mode(const std::string& s) {
  if (s == "exact_psd") return ConeMode::ExactPsd;
  if (s == "exact_dual_psd") return ConeMode::ExactDualPsd;
  if (s == "sampled") return ConeMode::Sampled;
  throw std::invalid_argument("--mode must be exact_psd, exact_dual_psd or sampled");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide existence of locally conformally Kähler metrics on Lie algebra models"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string model, theta, tol, direction, values, mode, report_path, export_dir, grid = "axis";
  std::optional<std::string> verify_model;
  std::uint64_t seed = 0;
  int max_iter = 0, p = 1;
  std::int64_t den_bound = 0;
  std::size_t samples = 0;
  unsigned threads = 0;
  bool pretty = false, timing = false;

  auto add_solver_flags = [&](CLI::App* sub) {
    sub->add_option("--theta", theta, "Lee form coefficients, e.g. \"0,0,-1,0\"");
    sub->add_option("--tol", tol, "feasibility tolerance (default 1e-8, or LCKCERT_TOL)");
    sub->add_option("--seed", seed, "seed for audits and sampling");
    sub->add_option("--max-iter", max_iter, "iterations per feasibility test");
    sub->add_option("--den-bound", den_bound, "denominator bound for rationalization");
    sub->add_flag("--timing", timing, "include wall-clock timing");
  };

  auto* catalog = app.add_subcommand("catalog", "list the built-in models");
  catalog->add_option("--export", export_dir, "write model and validation files to this directory");

  auto* validate_cmd = app.add_subcommand("validate", "check Jacobi, J² = -1, integrability and dθ = 0");
  validate_cmd->add_option("model", model, "model file or catalog:NAME")->required();

  auto* cohomology = app.add_subcommand("cohomology", "Morse-Novikov cohomology of the invariant complex");
  cohomology->add_option("model", model, "model file or catalog:NAME")->required();
  cohomology->add_option("--theta", theta, "Lee form coefficients");
  cohomology->add_flag("--timing", timing, "include wall-clock timing");

  auto* find = app.add_subcommand("find-lck", "decide existence of an LCK metric with Lee form θ");
  find->add_option("model", model, "model file or catalog:NAME")->required();
  add_solver_flags(find);

  auto* verify = app.add_subcommand("verify", "re-check the witness embedded in a report");
  verify->add_option("report", report_path, "report JSON file")->required();
  verify->add_option("--model", verify_model, "model file or catalog:NAME (default: embedded model)");

  auto* transverse = app.add_subcommand("transverse", "transverse d_θ-closed (p,p)-forms");
  transverse->add_option("model", model, "model file or catalog:NAME")->required();
  transverse->add_option("--p", p, "bidegree p, 1 <= p <= n-1");
  transverse->add_option("--mode", mode, "exact_psd | exact_dual_psd | sampled");
  transverse->add_option("--samples", samples, "number of sampled generators");
  add_solver_flags(transverse);

  auto* sweep = app.add_subcommand("sweep", "find-lck over a grid of closed θ, one JSON line per point");
  sweep->add_option("model", model, "model file or catalog:NAME")->required();
  sweep->add_option("--grid", grid, "axis (default) or product");
  sweep->add_option("--values", values, "grid values, default \"-2,-1,-1/2,1/2,1,2\"");
  sweep->add_option("--direction", direction, "single θ direction instead of the closed 1-form basis");
  sweep->add_option("--threads", threads, "worker threads (default: all cores)");
  add_solver_flags(sweep);

  for (auto* sub : {catalog, validate_cmd, cohomology, find, verify, transverse, sweep})
    sub->add_flag("--pretty,--json", pretty, "indent JSON output (--json is accepted for symmetry)");

  CLI11_PARSE(app, argc, argv);

  try {
    CommandOptions opts;
    opts.cfg = default_solver_config();
    if (!tol.empty()) {
      std::size_t used = 0;
      const double t = std::stod(tol, &used);
      if (used != tol.size() || !(t > 0)) throw std::invalid_argument("--tol must be a positive number");
      opts.cfg.tolerance = t;
    }
    if (max_iter > 0) opts.cfg.max_iterations = max_iter;
    if (den_bound > 0) opts.cfg.denominator_bound = den_bound;
    opts.cfg.seed = seed;
    opts.timing = timing;
    if (!theta.empty()) opts.theta = parse_rational_list(theta);
    opts.p = p;
    if (!mode.empty()) opts.mode = parse_mode(mode);
    opts.samples = samples;
    opts.grid = grid;
    if (!values.empty()) opts.values = parse_rational_list(values);
    if (!direction.empty()) opts.direction = parse_rational_list(direction);
    opts.threads = threads;
    opts.export_dir = export_dir;

    CommandResult result;
    if (*catalog) {
      result = cmd_catalog(opts);
    } else if (*validate_cmd) {
      result = cmd_validate(model);
    } else if (*cohomology) {
      result = cmd_cohomology(model, opts);
    } else if (*find) {
      result = cmd_find_lck(model, opts);
    } else if (*verify) {
      result = cmd_verify(verify_model, parse_json_text(read_text_file(report_path), report_path));
    } else if (*transverse) {
      result = cmd_transverse(model, opts);
    } else {
      result = cmd_sweep(model, opts);
      for (const auto& line : result.lines) std::cout << line.dump() << "\n";
      return result.exit_code;
    }
    print(result.report, pretty);
    if (result.exit_code == kExitError) std::cerr << "lckcert: verification or validation failed\n";
    return result.exit_code;
  } catch (const ValidationError& e) {
    std::cerr << "lckcert: " << e.what() << "\n";
    print(Json{{"error", e.what()}, {"validation", validation_to_json(e.report())}}, pretty);
  } catch (const std::exception& e) {
    std::cerr << "lckcert: " << e.what() << "\n";
    print(Json{{"error", e.what()}}, pretty);
  }
  return kExitError;
}
