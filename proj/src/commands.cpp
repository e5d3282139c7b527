#include "lckcert/commands.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <thread>

#include "lckcert/catalog.hpp"
#include "lckcert/cohomology.hpp"

namespace lckcert {

namespace {

using Clock = std::chrono::steady_clock;

const char* kFeasibleNote =
    "feasible: the witness is the fundamental form of an invariant LCK metric with Lee form theta";
const char* kInfeasibleNote =
    "infeasible: the certificate is a nonzero positive current that is the (1,1)-component of a "
    "d_theta-boundary, so no LCK metric with Lee form theta exists on the underlying compact manifold";
const char* kUndecidedNote = "undecided: margin below tolerance and no exact witness was found";
const char* kCohomologyCaveat =
    "computed on the invariant subcomplex; equals the twisted cohomology of the manifold only where "
    "invariant forms compute it";

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

LieModel effective_model(const std::string& spec, const CommandOptions& opts) {
  LieModel m = resolve_model(spec);
  if (opts.theta) {
    if (static_cast<int>(opts.theta->size()) != m.dim)
      throw std::invalid_argument("--theta needs " + std::to_string(m.dim) + " entries");
    m = m.with_theta(*opts.theta);
  }
  return m;
}

Json base_report(const char* command, const LieModel& m, const CommandOptions& opts) {
  return {{"command", command},
          {"tool_version", kToolVersion},
          {"model", m.name},
          {"model_definition", model_to_json(m)},
          {"theta", rationals_to_json(m.theta)},
          {"seed", opts.cfg.seed},
          {"config",
           {{"tolerance", opts.cfg.tolerance},
            {"max_iterations", opts.cfg.max_iterations},
            {"denominator_bound", opts.cfg.denominator_bound}}}};
}

int exit_for(const std::string& verdict) {
  if (verdict == "feasible") return kExitOk;
  if (verdict == "infeasible") return kExitInfeasible;
  return kExitUndecided;
}

// Re-checks the witness of a find-lck report from the JSON alone.
Json verify_lck_witness(const TwistedComplex& tc, const Json& report) {
  const std::string verdict = report.at("verdict").get<std::string>();
  if (verdict == "feasible") {
    const auto w = form_from_json(tc.dim(), report.at("witness").at("metric"), "witness.metric");
    const auto r = verify_metric(tc, w);
    return {{"metric", r.ok}, {"reason", r.reason}};
  }
  if (verdict == "infeasible") {
    const auto& c = report.at("certificate");
    Certificate cert{current_from_json(tc.frame(), c.at("T"), "certificate.T"), std::nullopt};
    if (c.contains("S")) cert.S = current_from_json(tc.frame(), c.at("S"), "certificate.S");
    const auto r = verify_certificate(tc, cert);
    return {{"certificate", r.ok}, {"reason", r.reason}};
  }
  return Json::object();
}

Json verify_transverse_witness(const TwistedComplex& tc, const Json& report) {
  const std::string verdict = report.at("verdict").get<std::string>();
  const int p = report.at("p").get<int>();
  const std::string guarantee = report.value("guarantee", "exact");
  std::vector<Decomposable> gens;
  if (report.contains("generators"))
    for (std::size_t k = 0; k < report.at("generators").size(); ++k)
      gens.push_back(decomposable_from_json(report.at("generators")[k], "generators[" + std::to_string(k) + "]"));
  if (verdict == "feasible") {
    const auto form = form_from_json(tc.dim(), report.at("form"), "form");
    const auto r = guarantee == "exact"
                       ? verify_transverse_form(tc, p, form)
                       : verify_sampled_form(tc, gens, rationals_from_json(report.at("weights"), "weights"), form);
    return {{"form", r.ok}, {"reason", r.reason}};
  }
  if (verdict == "infeasible") {
    const auto t = current_from_json(tc.frame(), report.at("T"), "T");
    const auto s = current_from_json(tc.frame(), report.at("S"), "S");
    const auto r = guarantee == "exact" ? verify_transverse_certificate(tc, p, t, s)
                                        : verify_sampled_certificate(tc, p, gens, t, s);
    return {{"certificate", r.ok}, {"reason", r.reason}};
  }
  return Json::object();
}

bool verification_passed(const Json& v) {
  for (const auto& [key, value] : v.items())
    if (value.is_boolean() && !value.get<bool>()) return false;
  return !v.empty();
}

}  // namespace

SolverConfig default_solver_config() {
  SolverConfig cfg;
  if (const char* env = std::getenv("LCKCERT_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0)) throw std::invalid_argument("LCKCERT_TOL must be a positive number");
    cfg.tolerance = tol;
  }
  return cfg;
}

LieModel resolve_model(const std::string& spec) {
  const std::string prefix = "catalog:";
  if (spec.rfind(prefix, 0) == 0) {
    const auto name = spec.substr(prefix.size());
    if (auto m = catalog_model(name)) return *m;
    throw std::invalid_argument("unknown catalog model '" + name + "'");
  }
  return load_model_file(spec);
}

CommandResult cmd_catalog(const CommandOptions& opts) {
  CommandResult out;
  Json models = Json::array();
  Json exported = Json::array();
  if (!opts.export_dir.empty()) std::filesystem::create_directories(opts.export_dir);
  for (const auto& e : catalog()) {
    const auto validation = validation_to_json(validate(e.model));
    models.push_back({{"name", e.model.name},
                      {"dim", e.model.dim},
                      {"description", e.model.description},
                      {"theta", rationals_to_json(e.model.theta)},
                      {"expected_verdict", e.expected_verdict},
                      {"validation", validation}});
    if (!opts.export_dir.empty()) {
      const auto base = std::filesystem::path(opts.export_dir) / e.model.name;
      const std::string model_path = base.string() + ".json";
      const std::string report_path = base.string() + ".validation.json";
      std::ofstream(model_path) << model_to_json(e.model).dump(2) << "\n";
      std::ofstream(report_path) << Json{{"model", e.model.name}, {"validation", validation}}.dump(2) << "\n";
      exported.push_back(model_path);
      exported.push_back(report_path);
    }
  }
  out.report = {{"command", "catalog"}, {"tool_version", kToolVersion}, {"models", models}};
  if (!opts.export_dir.empty()) out.report["exported"] = exported;
  return out;
}

CommandResult cmd_validate(const std::string& model) {
  const LieModel m = resolve_model(model);
  const auto r = validate(m);
  CommandResult out;
  out.report = {{"command", "validate"},
                {"tool_version", kToolVersion},
                {"model", m.name},
                {"validation", validation_to_json(r)}};
  out.exit_code = r.ok() ? kExitOk : kExitError;
  return out;
}

CommandResult cmd_cohomology(const std::string& model, const CommandOptions& opts) {
  const auto start = Clock::now();
  const LieModel m = effective_model(model, opts);
  const TwistedComplex tc(m);
  const auto table = morse_novikov(tc);
  CommandResult out;
  out.report = base_report("cohomology", m, opts);
  out.report.erase("config");
  out.report.erase("seed");
  Json degrees = Json::array();
  for (const auto& d : table.degrees) {
    Json reps = Json::array();
    for (const auto& r : d.representatives) reps.push_back(rationals_to_json(r));
    degrees.push_back({{"degree", d.degree},
                       {"dim_forms", d.dim_forms},
                       {"dim_kernel", d.dim_kernel},
                       {"dim_image", d.dim_image},
                       {"betti", d.betti},
                       {"representatives", reps}});
  }
  Json ker = Json::array();
  for (const auto& f : ker_d_theta_11(tc)) ker.push_back(form_to_json(f, 2));
  out.report["betti"] = table.betti();
  out.report["euler_characteristic"] = table.euler_characteristic();
  out.report["degrees"] = degrees;
  out.report["ker_d_theta_11"] = ker;
  out.report["caveat"] = kCohomologyCaveat;
  if (opts.timing) out.report["timing_ms"] = elapsed_ms(start);
  return out;
}

Json find_lck_report(const TwistedComplex& tc, const Verdict& v, const CommandOptions& opts) {
  Json report = base_report("find-lck", tc.model(), opts);
  report["verdict"] = verdict_name(v);
  if (const auto* f = std::get_if<Feasible>(&v)) {
    const auto audit = wirtinger_pairing_audit(tc, f->metric, opts.audit_samples, opts.cfg.seed);
    report["margins"] = {{"t_star", f->t_star}, {"eig_margin", f->eig_margin}};
    report["witness"] = {{"metric", form_to_json(f->metric, 2)},
                         {"hermitian_avatar", matrix_to_json(to_hermitian(f->metric, tc.frame()))},
                         {"exact", f->exact}};
    report["wirtinger_audit"] = {{"samples", audit.samples},
                                 {"violations", audit.violations},
                                 {"min_pairing", to_string(audit.min_value)}};
    report["interpretation"] = kFeasibleNote;
  } else if (const auto* i = std::get_if<Infeasible>(&v)) {
    const auto& frame = tc.frame();
    const auto& cert = i->certificate;
    const GradedForm psi = opts.cfg.psi ? *opts.cfg.psi : from_hermitian(psi_avatar(tc, opts.cfg), frame);
    report["margins"] = {{"t_star", i->t_star}};
    report["certificate"] = {{"T", current_to_json(cert.T, frame)},
                             {"avatar", matrix_to_json(current_avatar(cert.T, frame))},
                             {"psi", form_to_json(psi, 2)},
                             {"normalization", to_string(pair(cert.T, psi, frame).re())}};
    if (cert.S) report["certificate"]["S"] = current_to_json(*cert.S, frame);
    report["interpretation"] = kInfeasibleNote;
  } else {
    const auto& u = std::get<Undecided>(v);
    report["margins"] = {{"best_margin", u.best_margin}};
    report["reason"] = u.reason;
    report["interpretation"] = kUndecidedNote;
  }
  report["verification"] = verify_lck_witness(tc, report);
  return report;
}

CommandResult cmd_find_lck(const std::string& model, const CommandOptions& opts) {
  const auto start = Clock::now();
  const TwistedComplex tc(effective_model(model, opts));
  const auto v = find_lck(tc, opts.cfg);
  CommandResult out;
  out.report = find_lck_report(tc, v, opts);
  out.exit_code = exit_for(verdict_name(v));
  if (out.exit_code != kExitUndecided && !verification_passed(out.report["verification"])) {
    out.report["integrity_failure"] = true;
    out.exit_code = kExitError;
  }
  if (opts.timing) out.report["timing_ms"] = elapsed_ms(start);
  return out;
}

CommandResult cmd_transverse(const std::string& model, const CommandOptions& opts) {
  const auto start = Clock::now();
  const TwistedComplex tc(effective_model(model, opts));
  TransverseOptions topts{opts.mode, opts.samples};
  const auto cone = cone_model(tc.n(), opts.p, opts.cfg, topts);
  const auto v = find_transverse(tc, opts.p, opts.cfg, topts);
  const auto& frame = tc.frame();

  CommandResult out;
  Json& r = out.report;
  r = base_report("transverse", tc.model(), opts);
  r["p"] = opts.p;
  r["mode"] = to_string(cone.mode);
  r["verdict"] = verdict_name(v);
  auto add_generators = [&] {
    Json gens = Json::array();
    for (const auto& g : cone.generators) gens.push_back(decomposable_to_json(g));
    r["generators"] = gens;
  };
  if (const auto* f = std::get_if<TransverseFeasible>(&v)) {
    r["guarantee"] = to_string(f->guarantee);
    r["form"] = form_to_json(f->form, 2 * opts.p);
    r["margin"] = f->margin;
    if (f->guarantee != Guarantee::Exact) {
      add_generators();
      r["weights"] = rationals_to_json(f->weights);
    }
  } else if (const auto* i = std::get_if<TransverseInfeasible>(&v)) {
    r["guarantee"] = to_string(i->guarantee);
    r["T"] = current_to_json(i->T, frame);
    if (i->S) r["S"] = current_to_json(*i->S, frame);
    if (i->guarantee != Guarantee::Exact) {
      add_generators();
      r["generator_pairings"] = rationals_to_json(i->generator_pairings);
    }
  } else {
    const auto& u = std::get<TransverseUndecided>(v);
    r["best_margin"] = u.best_margin;
    r["reason"] = u.reason;
  }
  r["verification"] = verify_transverse_witness(tc, r);
  out.exit_code = exit_for(verdict_name(v));
  if (out.exit_code != kExitUndecided && !verification_passed(r["verification"])) {
    r["integrity_failure"] = true;
    out.exit_code = kExitError;
  }
  if (opts.timing) r["timing_ms"] = elapsed_ms(start);
  return out;
}

CommandResult cmd_verify(const std::optional<std::string>& model, const Json& report) {
  if (!report.is_object() || !report.contains("command") || !report.contains("verdict"))
    throw ParseError("report: expected a find-lck or transverse report");
  const std::string command = report.at("command").get<std::string>();
  if (command != "find-lck" && command != "transverse")
    throw ParseError("report: cannot verify a '" + command + "' report");
  LieModel m = model ? resolve_model(*model) : model_from_json(report.at("model_definition"));
  m = m.with_theta(rationals_from_json(report.at("theta"), "theta"));
  const TwistedComplex tc(m);
  const std::string verdict = report.at("verdict").get<std::string>();

  CommandResult out;
  const Json checks = command == "find-lck" ? verify_lck_witness(tc, report) : verify_transverse_witness(tc, report);
  out.report = {{"command", "verify"},
                {"tool_version", kToolVersion},
                {"verified_command", command},
                {"model", m.name},
                {"theta", rationals_to_json(m.theta)},
                {"verdict", verdict},
                {"verification", checks}};
  if (report.contains("verification")) out.report["matches_report"] = report.at("verification") == checks;
  out.exit_code = exit_for(verdict);
  if (out.exit_code != kExitUndecided && !verification_passed(checks)) out.exit_code = kExitError;
  return out;
}

std::vector<Vec<Rational>> sweep_grid(const LieModel& m, const CommandOptions& opts) {
  std::vector<Vec<Rational>> directions;
  if (opts.direction) {
    if (static_cast<int>(opts.direction->size()) != m.dim)
      throw std::invalid_argument("--direction needs " + std::to_string(m.dim) + " entries");
    directions.push_back(*opts.direction);
  } else {
    directions = closed_one_forms(m);
  }
  std::vector<Vec<Rational>> grid;
  auto combine = [&](const std::vector<Rational>& coeffs) {
    Vec<Rational> theta(m.dim);
    for (std::size_t d = 0; d < directions.size(); ++d)
      for (int i = 0; i < m.dim; ++i) theta[i] += coeffs[d] * directions[d][i];
    grid.push_back(std::move(theta));
  };
  if (opts.grid == "axis") {
    for (std::size_t d = 0; d < directions.size(); ++d)
      for (const auto& a : opts.values) {
        std::vector<Rational> coeffs(directions.size());
        coeffs[d] = a;
        combine(coeffs);
      }
  } else if (opts.grid == "product") {
    if (directions.empty()) return grid;
    std::vector<std::size_t> idx(directions.size(), 0);
    while (true) {
      std::vector<Rational> coeffs;
      for (auto i : idx) coeffs.push_back(opts.values[i]);
      combine(coeffs);
      std::size_t d = idx.size();
      while (d > 0 && ++idx[d - 1] == opts.values.size()) idx[--d] = 0;
      if (d == 0) break;
    }
  } else {
    throw std::invalid_argument("--grid must be 'axis' or 'product'");
  }
  return grid;
}

CommandResult cmd_sweep(const std::string& model, const CommandOptions& opts) {
  const LieModel base = resolve_model(model);
  const auto grid = sweep_grid(base, opts);
  std::vector<Json> lines(grid.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      Json line{{"index", i}, {"model", base.name}, {"theta", rationals_to_json(grid[i])}};
      const auto start = Clock::now();
      try {
        const TwistedComplex tc(base.with_theta(grid[i]));
        const auto v = find_lck(tc, opts.cfg);
        line["verdict"] = verdict_name(v);
        bool metric_ok = false, cert_ok = false;
        if (const auto* f = std::get_if<Feasible>(&v)) {
          metric_ok = verify_metric(tc, f->metric).ok;
          line["t_star"] = f->t_star;
          line["metric"] = form_to_json(f->metric, 2);
        } else if (const auto* c = std::get_if<Infeasible>(&v)) {
          cert_ok = verify_certificate(tc, c->certificate).ok;
          line["t_star"] = c->t_star;
        } else {
          line["best_margin"] = std::get<Undecided>(v).best_margin;
        }
        line["metric_verified"] = metric_ok;
        line["certificate_verified"] = cert_ok;
      } catch (const std::exception& e) {
        line["error"] = e.what();
      }
      if (opts.timing) line["timing_ms"] = elapsed_ms(start);
      lines[i] = std::move(line);
    }
  };
  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(grid.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  CommandResult out;
  std::map<std::string, int> counts;
  bool error = false;
  for (const auto& l : lines) {
    if (l.contains("error")) {
      error = true;
      ++counts["error"];
    } else {
      ++counts[l.at("verdict").get<std::string>()];
      if (l.at("metric_verified").get<bool>() && l.at("certificate_verified").get<bool>()) error = true;
      if (l.at("verdict") != "undecided" && !l.at("metric_verified").get<bool>() &&
          !l.at("certificate_verified").get<bool>())
        error = true;
    }
  }
  out.report = {{"command", "sweep"},
                {"tool_version", kToolVersion},
                {"model", base.name},
                {"grid", opts.grid},
                {"values", rationals_to_json(opts.values)},
                {"points", grid.size()},
                {"counts", counts}};
  out.lines = std::move(lines);
  out.exit_code = error ? kExitError : (counts.count("undecided") ? kExitUndecided : kExitOk);
  return out;
}

}  // namespace lckcert
