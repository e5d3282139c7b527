#include "doctest.h"
#include "lckcert/catalog.hpp"
#include "lckcert/transverse.hpp"
#include "support.hpp"

using namespace lckcert;

namespace {

GradedForm omega(int dim) {
  GradedForm w(dim);
  for (int a = 1; a < dim; a += 2) w += GradedForm::basis(dim, {a, a + 1});
  return w;
}

}  // namespace

TEST_CASE("decomposable forms") {
  const ComplexFrame frame(standard_complex_structure(4));
  // (i/2) Z1 ∧ Z̄1 = e12.
  CHECK(decomposable_form({{{Gauss(1), Gauss(0)}}}, frame) == GradedForm::basis(4, {1, 2}));
  const auto both = decomposable_form({{{Gauss(1), Gauss(0)}, {Gauss(0), Gauss(1)}}}, frame);
  CHECK(both == GradedForm::basis(4, {1, 2, 3, 4}));
  const auto sample = strongly_positive_sample(3, 2, 10, 4);
  CHECK(sample.size() == 10);
  CHECK(sample == strongly_positive_sample(3, 2, 10, 4));
  // Axis products come first.
  CHECK(decomposable_form(sample[0], ComplexFrame(standard_complex_structure(6))) == GradedForm::basis(6, {1, 2, 3, 4}));
  CHECK(strongly_positive_sample(3, 2, 1, 4).size() == 3);
  for (const auto& g : sample) CHECK(decomposable_form(g, ComplexFrame(standard_complex_structure(6))).is_real());
}

TEST_CASE("cone model defaults") {
  SolverConfig cfg;
  CHECK(cone_model(3, 1, cfg).mode == ConeMode::ExactPsd);
  CHECK(cone_model(3, 2, cfg).mode == ConeMode::ExactDualPsd);
  const auto sampled = cone_model(4, 2, cfg);
  CHECK(sampled.mode == ConeMode::Sampled);
  CHECK(sampled.generators.size() == 2 * 36 + 6);
  CHECK(to_string(ConeMode::ExactDualPsd) == "exact_dual_psd");
  CHECK(to_string(Guarantee::Outer) == "outer");
}

TEST_CASE("p = 1 delegates to find_lck") {
  for (const auto& e : catalog()) {
    const TwistedComplex tc(e.model);
    const auto lck = find_lck(tc);
    const auto tv = find_transverse(tc, 1);
    REQUIRE(verdict_name(tv) == verdict_name(lck));
    if (const auto* f = std::get_if<TransverseFeasible>(&tv)) {
      CHECK(f->form == std::get<Feasible>(lck).metric);
      CHECK(f->guarantee == Guarantee::Exact);
    }
  }
  const TwistedComplex obstructed(catalog_model("torus4")->with_theta({1, 0, 0, 0}));
  const auto tv = std::get<TransverseInfeasible>(find_transverse(obstructed, 1));
  CHECK(tv.T == std::get<Infeasible>(find_lck(obstructed)).certificate.T);
}

TEST_CASE("wedge-dual avatar agrees with the direct one when n = 2") {
  for (const auto& theta : std::vector<Vec<Rational>>{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}}) {
    const TwistedComplex tc(catalog_model("torus4")->with_theta(theta));
    TransverseOptions opts;
    opts.mode = ConeMode::ExactDualPsd;
    const auto dual = find_transverse(tc, 1, SolverConfig{}, opts);
    CHECK(verdict_name(dual) == verdict_name(find_lck(tc)));
    if (const auto* f = std::get_if<TransverseFeasible>(&dual)) CHECK(verify_transverse_form(tc, 1, f->form).ok);
    if (const auto* i = std::get_if<TransverseInfeasible>(&dual)) {
      REQUIRE(i->S);
      CHECK(verify_transverse_certificate(tc, 1, i->T, *i->S).ok);
    }
  }
  for (const auto& e : catalog()) {
    if (e.model.dim != 4) continue;
    const TwistedComplex tc(e.model);
    TransverseOptions opts;
    opts.mode = ConeMode::ExactDualPsd;
    CHECK(verdict_name(find_transverse(tc, 1, SolverConfig{}, opts)) == e.expected_verdict);
  }
}

TEST_CASE("torus6 at p = 2") {
  const TwistedComplex tc(*catalog_model("torus6"));
  const auto w2 = wedge(omega(6), omega(6));
  CHECK(verify_transverse_form(tc, 2, w2).ok);
  CHECK_FALSE(verify_transverse_form(tc, 2, GradedForm::basis(6, {1, 2, 3, 4})).ok);
  CHECK(verify_transverse_form(tc, 2, omega(6)).reason != "ok");
  const auto v = find_transverse(tc, 2);
  REQUIRE(std::holds_alternative<TransverseFeasible>(v));
  const auto& f = std::get<TransverseFeasible>(v);
  CHECK(f.guarantee == Guarantee::Exact);
  CHECK(verify_transverse_form(tc, 2, f.form).ok);

  const TwistedComplex twisted(catalog_model("torus6")->with_theta({1, 0, 0, 0, 0, 0}));
  const auto obstructed = find_transverse(twisted, 2);
  REQUIRE(std::holds_alternative<TransverseInfeasible>(obstructed));
  const auto& i = std::get<TransverseInfeasible>(obstructed);
  REQUIRE(i.S);
  CHECK(verify_transverse_certificate(twisted, 2, i.T, *i.S).ok);
  CHECK_FALSE(verify_transverse_form(twisted, 2, w2).ok);
}

TEST_CASE("sampled mode") {
  const TwistedComplex tc(*catalog_model("torus6"));
  TransverseOptions opts;
  opts.mode = ConeMode::Sampled;
  const auto v = find_transverse(tc, 1, SolverConfig{}, opts);
  REQUIRE(std::holds_alternative<TransverseFeasible>(v));
  const auto& f = std::get<TransverseFeasible>(v);
  CHECK(f.guarantee == Guarantee::Inner);
  const auto model = cone_model(3, 1, SolverConfig{}, opts);
  CHECK(verify_sampled_form(tc, model.generators, f.weights, f.form).ok);
  auto negative = f.weights;
  negative[0] = -1;
  CHECK_FALSE(verify_sampled_form(tc, model.generators, negative, f.form).ok);

  const TwistedComplex twisted(catalog_model("torus6")->with_theta({0, 0, 1, 0, 0, 0}));
  const auto o = find_transverse(twisted, 1, SolverConfig{}, opts);
  REQUIRE(std::holds_alternative<TransverseInfeasible>(o));
  const auto& i = std::get<TransverseInfeasible>(o);
  CHECK(i.guarantee == Guarantee::Outer);
  REQUIRE(i.S);
  CHECK(verify_sampled_certificate(twisted, 1, model.generators, i.T, *i.S).ok);
  for (const auto& x : i.generator_pairings) CHECK(sgn(x) >= 0);
}

TEST_CASE("invalid bidegree is rejected") {
  const TwistedComplex tc(*catalog_model("torus6"));
  CHECK_THROWS_AS(find_transverse(tc, 0), std::invalid_argument);
  CHECK_THROWS_AS(find_transverse(tc, 3), std::invalid_argument);
}
