#include "doctest.h"
#include "lckcert/catalog.hpp"
#include "lckcert/cohomology.hpp"
#include "support.hpp"

using namespace lckcert;

namespace {

TwistedComplex with(const std::string& name, Vec<Rational> theta) {
  return TwistedComplex(catalog_model(name)->with_theta(std::move(theta)));
}

GradedForm omega(int dim) {
  GradedForm w(dim);
  for (int a = 1; a < dim; a += 2) w += GradedForm::basis(dim, {a, a + 1});
  return w;
}

}  // namespace

TEST_CASE("twisted differential examples") {
  const auto tc = with("torus4", {1, 2, 0, -1});
  CHECK(twisted_d(tc, GradedForm::scalar(4, Gauss(1))) == -GradedForm::one_form({1, 2, 0, -1}));
  const TwistedComplex kt(*catalog_model("kt"));
  CHECK(twisted_d(kt, omega(4)).is_zero());
  CHECK_FALSE(untwisted_d(kt, omega(4)).is_zero());
}

TEST_CASE("pluriharmonic defect") {
  const auto tc = with("torus4", {1, 0, 0, 0});
  CHECK(theta_pluriharmonic_defect(tc, 1, 0) == GradedForm::basis(4, {2}));
  CHECK(theta_pluriharmonic_defect(tc, 0, 1) == -GradedForm::basis(4, {1}));

  // General case: -vθ + u·i(θ^{0,1} - θ^{1,0}).
  for (const auto& m : lckcert::testing::seeded_models(31, 6)) {
    const TwistedComplex t(m);
    const auto th = GradedForm::one_form(m.theta);
    const auto expected = th * Gauss(Rational(-2)) +
                          (project_bidegree(th, t.frame(), 0, 1) - project_bidegree(th, t.frame(), 1, 0)) * Gauss(0, 3);
    CHECK(theta_pluriharmonic_defect(t, 3, 2) == expected);
  }
}

TEST_CASE("twisted operators split by type") {
  for (const auto& m : lckcert::testing::seeded_models(8, 6)) {
    const TwistedComplex tc(m);
    lckcert::testing::Rng rng(m.dim);
    for (int k = 0; k < m.dim; ++k) {
      const auto a = lckcert::testing::random_form(rng, m.dim, k);
      CHECK(partial_t(tc, a) + partialbar_t(tc, a) == twisted_d(tc, a));
      CHECK(dc_t(tc, a) == (partial_t(tc, a) - partialbar_t(tc, a)) * Gauss::i());
      CHECK(twisted_d(tc, twisted_d(tc, a)).is_zero());
    }
  }
}

TEST_CASE("Morse-Novikov cohomology of the torus") {
  const auto untwisted = morse_novikov(with("torus4", {0, 0, 0, 0}));
  CHECK(untwisted.betti() == std::vector<std::size_t>{1, 4, 6, 4, 1});
  CHECK(untwisted.euler_characteristic() == 0);
  const auto twisted = morse_novikov(with("torus4", {1, 0, 0, 0}));
  CHECK(twisted.betti() == std::vector<std::size_t>{0, 0, 0, 0, 0});
  for (const auto& d : untwisted.degrees) CHECK(d.representatives.size() == d.betti);
}

TEST_CASE("cohomology properties on random models") {
  for (const auto& m : lckcert::testing::seeded_models(99, 9)) {
    const TwistedComplex tc(m);
    const auto table = morse_novikov(tc);
    CHECK(table.euler_characteristic() == 0);
    bool zero_theta = true;
    for (const auto& t : m.theta) zero_theta = zero_theta && sgn(t) == 0;
    if (!zero_theta) CHECK(table.betti()[0] == 0);
    else CHECK(table.betti()[0] == 1);
    for (const auto& d : table.degrees) {
      CHECK(d.dim_kernel + (d.degree + 1 <= m.dim ? table.degrees[d.degree + 1].dim_image : 0) == d.dim_forms);
      for (const auto& r : d.representatives) {
        if (d.degree < m.dim) CHECK(is_zero_vector(tc.d_theta(d.degree) * r));
      }
    }
  }
}

TEST_CASE("closed (1,1)-forms and annihilators") {
  const auto tc = with("torus4", {1, 0, 0, 0});
  const auto ker = ker_d_theta_11(tc);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == GradedForm::basis(4, {1, 2}));
  const auto& frame = tc.frame();
  GMatrix a(2, 2);
  a(1, 1) = Gauss(1);
  CHECK(annihilator_check(ker, current_from_avatar(a, frame), frame));
  CHECK_FALSE(annihilator_check(ker, current_from_avatar(GMatrix::identity(2), frame), frame));

  CHECK(ker_d_theta_11(with("torus4", {0, 0, 0, 0})).size() == 4);
  for (const auto& e : ker_d_theta_11(TwistedComplex(*catalog_model("kt")))) {
    CHECK(e.is_real());
    CHECK(is_pure_bidegree(e, frame, 1, 1));
  }
}

TEST_CASE("non-closed theta is rejected") {
  CHECK_THROWS_AS(with("kt", {0, 0, 0, 1}), ValidationError);
}

TEST_CASE("catalog Betti numbers") {
  using B = std::vector<std::size_t>;
  const std::vector<std::tuple<std::string, B, B>> expected = {
      {"torus4", {1, 4, 6, 4, 1}, {1, 4, 6, 4, 1}},
      {"kt", {1, 3, 4, 3, 1}, {0, 0, 0, 0, 0}},
      {"hopf", {1, 1, 0, 1, 1}, {0, 0, 0, 0, 0}},
      {"inoue", {1, 1, 0, 1, 1}, {0, 0, 1, 1, 0}},
  };
  for (const auto& [name, untwisted, twisted] : expected) {
    INFO(name);
    const auto m = *catalog_model(name);
    CHECK(morse_novikov(TwistedComplex(m.with_theta(Vec<Rational>(4)))).betti() == untwisted);
    CHECK(morse_novikov(TwistedComplex(m)).betti() == twisted);
  }
}
