#include "doctest.h"
#include "lckcert/catalog.hpp"
#include "lckcert/operators.hpp"
#include "support.hpp"

using namespace lckcert;

namespace {

bool check_passed(const ValidationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.passed;
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("catalog models validate") {
  CHECK(catalog().size() == 5);
  for (const auto& e : catalog()) {
    INFO(e.model.name);
    CHECK(validate(e.model).ok());
  }
  CHECK_FALSE(catalog_model("nope"));
}

TEST_CASE("kt with theta e4 is not closed") {
  auto kt = *catalog_model("kt");
  const auto r = validate(kt.with_theta({0, 0, 0, 1}));
  CHECK_FALSE(r.ok());
  CHECK_FALSE(check_passed(r, "theta_closed"));
  CHECK(check_passed(r, "jacobi"));
  CHECK_THROWS_AS(TwistedComplex(kt.with_theta({0, 0, 0, 1})), ValidationError);
}

TEST_CASE("broken models are diagnosed") {
  auto m = torus_model(4);
  m.J(0, 0) = 1;
  CHECK_FALSE(check_passed(validate(m), "j_squared"));

  // [e1,e2] = e3, [e1,e3] = e4, [e2,e3] = e2 is not Jacobi.
  auto bad = torus_model(4);
  bad.structure = {{0, 1, 2, Rational(1)}, {0, 2, 3, Rational(1)}, {1, 2, 1, Rational(1)}};
  CHECK_FALSE(check_passed(validate(bad), "jacobi"));

  // Heisenberg with [e1, e3] = e4 and standard J: Nijenhuis tensor does not vanish.
  auto nonint = torus_model(4);
  nonint.structure = {{0, 2, 3, Rational(1)}};
  CHECK(check_passed(validate(nonint), "jacobi"));
  CHECK_FALSE(check_passed(validate(nonint), "nijenhuis"));

  auto shape = torus_model(4);
  shape.theta = {1, 2};
  CHECK_THROWS_AS(check_well_formed(shape), std::invalid_argument);
  shape = torus_model(4);
  shape.structure = {{2, 1, 0, Rational(1)}};
  CHECK_THROWS_AS(check_well_formed(shape), std::invalid_argument);
}

TEST_CASE("differentials of catalog examples") {
  const auto kt = *catalog_model("kt");
  CHECK(ce_differential(kt, 1) * GradedForm::basis(4, {4}).real_component(1) ==
        GradedForm::basis(4, {1, 2}).real_component(2));
  const TwistedComplex hopf(*catalog_model("hopf"));
  CHECK(untwisted_d(hopf, GradedForm::basis(4, {3, 4})).is_zero());
  CHECK(untwisted_d(hopf, GradedForm::basis(4, {2})) == -GradedForm::basis(4, {3, 4}));
}

TEST_CASE("Chevalley-Eilenberg matrices agree with the evaluation formula") {
  for (const auto& e : catalog())
    for (int k = 0; k < e.model.dim; ++k) CHECK(ce_differential(e.model, k) == lckcert::testing::oracle_ce_differential(e.model, k));
  for (const auto& m : lckcert::testing::seeded_models(2024, 9)) {
    INFO(m.dim);
    REQUIRE(validate(m).ok());
    for (int k = 0; k < m.dim; ++k) CHECK(ce_differential(m, k) == lckcert::testing::oracle_ce_differential(m, k));
  }
}

TEST_CASE("change of basis preserves validity and the structure") {
  lckcert::testing::Rng rng(77);
  for (int i = 0; i < 10; ++i) {
    const auto m = lckcert::testing::random_model(rng, 4 + 2 * (i % 3));
    const auto r = validate(m);
    INFO(r.summary());
    CHECK(r.ok());
  }
}

TEST_CASE("closed one forms") {
  CHECK(closed_one_forms(torus_model(6)).size() == 6);
  CHECK(closed_one_forms(*catalog_model("kt")).size() == 3);
  CHECK(closed_one_forms(*catalog_model("hopf")).size() == 1);
  CHECK(closed_one_forms(*catalog_model("inoue")).size() == 1);
}
