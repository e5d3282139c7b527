#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "lckcert/catalog.hpp"
#include "lckcert/commands.hpp"
#include "support.hpp"

using namespace lckcert;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / ("lckcert_tests_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path;
}

int run(const std::string& args) {
  const std::string cmd = std::string(LCKCERT_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string parse_error(const std::string& text) {
  try {
    parse_model_text(text, "m.json");
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("models round trip through JSON") {
  for (const auto& e : catalog()) {
    const auto m = model_from_json(model_to_json(e.model));
    CHECK(model_to_json(m) == model_to_json(e.model));
  }
  for (const auto& m : lckcert::testing::seeded_models(3, 6)) {
    const auto back = parse_model_text(model_to_json(m).dump());
    CHECK(back.J == m.J);
    CHECK(back.theta == m.theta);
    for (int k = 0; k < m.dim; ++k) CHECK(ce_differential(back, k) == ce_differential(m, k));
  }
}

TEST_CASE("parse diagnostics name the location") {
  CHECK(parse_error("{\n  \"name\": \"x\",\n  oops\n}") == "m.json:3:3: malformed JSON");
  auto j = model_to_json(*catalog_model("kt"));
  j["structure"][0][3] = "1/0";
  CHECK(parse_error(j.dump()).find("field 'structure[0][3]'") != std::string::npos);
  j = model_to_json(*catalog_model("kt"));
  j.erase("J");
  CHECK(parse_error(j.dump()).find("field 'J': missing") != std::string::npos);
  j = model_to_json(*catalog_model("kt"));
  j["theta"] = {"0", "1"};
  CHECK(parse_error(j.dump()).find("field 'theta'") != std::string::npos);
  j = model_to_json(*catalog_model("kt"));
  j["structure"][0][0] = 3;
  CHECK(parse_error(j.dump()).find("requires i < j") != std::string::npos);
  j = model_to_json(*catalog_model("kt"));
  j["dim"] = 5;
  CHECK(parse_error(j.dump()).find("field 'dim'") != std::string::npos);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), std::invalid_argument);
  CHECK(parse_rational_list(" 1/2, -3 ") == Vec<Rational>{Rational(1, 2), Rational(-3)});
}

TEST_CASE("forms and currents round trip") {
  const ComplexFrame frame(standard_complex_structure(4));
  const auto w = GradedForm::basis(4, {1, 2}) + GradedForm::basis(4, {3, 4}) * Gauss(Rational(1, 3));
  CHECK(form_from_json(4, form_to_json(w, 2), "w") == w);
  CHECK(form_to_json(GradedForm(4), 2)["coefficients"].size() == 6);
  const auto t = current_from_avatar(GMatrix::identity(2), frame);
  CHECK(current_from_json(frame, current_to_json(t, frame), "T") == t);
  const Decomposable g{{{Gauss(1), Gauss(0, 2)}, {Gauss(Rational(1, 2)), Gauss(-1)}}};
  CHECK(decomposable_from_json(decomposable_to_json(g), "g") == g);
  CHECK_THROWS_AS(form_from_json(4, Json{{"degree", 2}, {"coefficients", {"1"}}}, "w"), ParseError);
}

TEST_CASE("command exit codes") {
  CHECK(cmd_find_lck("catalog:torus4").exit_code == kExitOk);
  CommandOptions opts;
  opts.theta = Vec<Rational>{1, 0, 0, 0};
  CHECK(cmd_find_lck("catalog:torus4", opts).exit_code == kExitInfeasible);
  CHECK_THROWS(cmd_find_lck("catalog:nope"));
  opts.theta = Vec<Rational>{0, 0, 0, 1};
  CHECK_THROWS_AS(cmd_find_lck("catalog:kt", opts), ValidationError);
  CHECK(cmd_validate("catalog:hopf").report["validation"]["ok"] == true);
  const auto coh = cmd_cohomology("catalog:torus4");
  CHECK(coh.report["betti"] == Json::array({1, 4, 6, 4, 1}));
  CHECK_FALSE(coh.report.contains("timing_ms"));
  CommandOptions timed;
  timed.timing = true;
  CHECK(cmd_cohomology("catalog:torus4", timed).report.contains("timing_ms"));
}

TEST_CASE("reports re-verify from their own JSON") {
  for (const auto& e : catalog()) {
    const auto r = cmd_find_lck("catalog:" + e.model.name);
    CHECK(r.report["verdict"] == e.expected_verdict);
    const auto v = cmd_verify(std::nullopt, Json::parse(r.report.dump()));
    CHECK(v.exit_code == r.exit_code);
    CHECK(v.report["matches_report"] == true);
  }
  CommandOptions opts;
  opts.theta = Vec<Rational>{1, 0, 0, 0};
  auto r = cmd_find_lck("catalog:torus4", opts);
  CHECK(r.report["certificate"]["normalization"] == "1");
  CHECK(cmd_verify(std::nullopt, r.report).exit_code == kExitInfeasible);

  // Tampering is detected.
  auto tampered = r.report;
  tampered["certificate"]["T"]["functional"][0] = "5";
  CHECK(cmd_verify(std::nullopt, tampered).exit_code == kExitError);
  auto metric = cmd_find_lck("catalog:kt").report;
  metric["witness"]["metric"]["coefficients"][0] = "-1";
  CHECK(cmd_verify(std::nullopt, metric).exit_code == kExitError);
  CHECK_THROWS_AS(cmd_verify(std::nullopt, Json{{"command", "catalog"}}), ParseError);

  CommandOptions tv;
  tv.p = 2;
  const auto t = cmd_transverse("catalog:torus6", tv);
  CHECK(t.exit_code == kExitOk);
  CHECK(cmd_verify(std::nullopt, t.report).report["matches_report"] == true);
}

TEST_CASE("sweep lines follow grid order") {
  CommandOptions opts;
  opts.threads = 4;
  const auto r = cmd_sweep("catalog:kt", opts);
  const auto grid = sweep_grid(*catalog_model("kt"), opts);
  REQUIRE(r.lines.size() == grid.size());
  CHECK(grid.size() == 18);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    CHECK(r.lines[i]["index"] == i);
    CHECK(r.lines[i]["theta"] == rationals_to_json(grid[i]));
    CHECK_FALSE((r.lines[i]["metric_verified"] == true && r.lines[i]["certificate_verified"] == true));
  }
  opts.threads = 1;
  const auto serial = cmd_sweep("catalog:kt", opts);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(serial.lines[i].dump() == r.lines[i].dump());

  opts.grid = "product";
  opts.values = {Rational(-1), Rational(1)};
  CHECK(sweep_grid(*catalog_model("kt"), opts).size() == 8);
  opts.grid = "diagonal";
  CHECK_THROWS(sweep_grid(*catalog_model("kt"), opts));
}

TEST_CASE("command line binary") {
  CHECK(run("catalog") == 0);
  CHECK(run("find-lck catalog:torus4") == 0);
  CHECK(run("find-lck catalog:torus4 --theta 1,0,0,0") == 10);
  CHECK(run("find-lck catalog:kt --theta 0,0,0,1") == 1);
  CHECK(run("find-lck catalog:missing") == 1);
  CHECK(run("validate " + write_file("bad.json", "{ \"name\": ").string()) == 1);
  CHECK(run("transverse catalog:torus6 --p 2") == 0);
  CHECK(run("cohomology catalog:hopf") == 0);

  const auto model = write_file("kt.json", model_to_json(*catalog_model("kt")).dump());
  CHECK(run("find-lck " + model.string()) == 0);
  const auto report = scratch_dir() / "report.json";
  const std::string cmd = std::string(LCKCERT_BINARY) + " find-lck catalog:torus4 --theta 1,0,0,0 > " + report.string();
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 10);
  CHECK(run("verify " + report.string()) == 10);

  const auto models = scratch_dir() / "models";
  CHECK(run("catalog --export " + models.string()) == 0);
  CHECK(fs::exists(models / "hopf.json"));
  CHECK(run("validate " + (models / "hopf.json").string()) == 0);
  fs::remove_all(scratch_dir());
}
