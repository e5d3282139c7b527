#include <complex>

#include "doctest.h"
#include "lckcert/current.hpp"
#include "lckcert/catalog.hpp"
#include "support.hpp"

using namespace lckcert;
using lckcert::testing::Rng;

namespace {

// ω(u, v) for a real 2-form given on the lexicographic basis.
Gauss evaluate2(const GradedForm& w, const Vec<Gauss>& u, const Vec<Gauss>& v) {
  Gauss s;
  const auto& basis = ExteriorBasis::get(w.dim());
  for (std::size_t idx = 0; idx < basis.size(2); ++idx) {
    const auto ij = mask_indices(basis.mask(2, idx));
    s += w.coefficient(2, idx) * (u[ij[0]] * v[ij[1]] - u[ij[1]] * v[ij[0]]);
  }
  return s;
}

GMatrix random_hermitian(Rng& rng, int n) {
  GMatrix h(n, n);
  for (int a = 0; a < n; ++a) {
    h(a, a) = Gauss(Rational(lckcert::testing::uniform(rng, -3, 3)));
    for (int b = a + 1; b < n; ++b) {
      h(a, b) = Gauss(Rational(lckcert::testing::uniform(rng, -3, 3)), Rational(lckcert::testing::uniform(rng, -6, 6)) / 2);
      h(b, a) = h(a, b).conj();
    }
  }
  return h;
}

}  // namespace

TEST_CASE("rationals parse and print") {
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(4, 6)) == "2/3");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(rationalize(0.3333333333, 1000) == Rational(1, 3));
}

TEST_CASE("wedge basics") {
  const auto e1 = GradedForm::basis(4, {1}), e2 = GradedForm::basis(4, {2}), e3 = GradedForm::basis(4, {3});
  CHECK(wedge(e1, e2) == GradedForm::basis(4, {1, 2}));
  CHECK(wedge(e2, e1) == -GradedForm::basis(4, {1, 2}));
  CHECK(wedge(e1, e1).is_zero());
  CHECK(GradedForm::basis(4, {3, 1, 2}) == GradedForm::basis(4, {1, 2, 3}));
  CHECK(wedge(wedge(e1, e2), e3) == GradedForm::basis(4, {1, 2, 3}));
  CHECK(wedge(e2, GradedForm::basis(4, {1, 3})) == -GradedForm::basis(4, {1, 2, 3}));
  CHECK(wedge_sign(0b0010, 0b0101) == -1);
  CHECK(wedge_sign(0b0011, 0b0001) == 0);
}

TEST_CASE("wedge is associative and graded commutative") {
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int dim = 4 + 2 * (trial % 3);
    const int ka = lckcert::testing::uniform(rng, 0, 3), kb = lckcert::testing::uniform(rng, 0, 2),
              kc = lckcert::testing::uniform(rng, 0, 2);
    const auto a = lckcert::testing::random_form(rng, dim, ka);
    const auto b = lckcert::testing::random_form(rng, dim, kb);
    const auto c = lckcert::testing::random_form(rng, dim, kc);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    const Gauss sign((ka * kb) % 2 == 0 ? 1 : -1);
    CHECK(wedge(a, b) == sign * wedge(b, a));
  }
}

TEST_CASE("bidegree split of e13") {
  const ComplexFrame frame(standard_complex_structure(4));
  const auto e13 = GradedForm::basis(4, {1, 3});
  const auto parts = bidegree_split(e13, frame);
  GradedForm sum(4);
  for (const auto& [bd, f] : parts) sum += f;
  CHECK(sum == e13);
  REQUIRE(parts.count({2, 0}) == 1);
  REQUIRE(parts.count({1, 1}) == 1);
  REQUIRE(parts.count({0, 2}) == 1);
  CHECK(parts.at({2, 0}).conj() == parts.at({0, 2}));
  CHECK(parts.at({1, 1}).is_real());
  // Π_{1,1} e13 = (e13 + e24)/2.
  CHECK(parts.at({1, 1}) == (GradedForm::basis(4, {1, 3}) + GradedForm::basis(4, {2, 4})) * Gauss(Rational(1, 2)));
  CHECK(is_pure_bidegree(GradedForm::basis(4, {1, 2}), frame, 1, 1));
  CHECK_FALSE(is_pure_bidegree(e13, frame, 1, 1));
}

TEST_CASE("frame round trip on random complex structures") {
  Rng rng(5);
  for (int trial = 0; trial < 6; ++trial) {
    const auto m = lckcert::testing::random_model(rng, 4 + 2 * (trial % 3));
    const ComplexFrame frame(m.J);
    for (int k = 0; k <= m.dim; ++k) {
      const auto a = lckcert::testing::random_form(rng, m.dim, k);
      CHECK(frame.from_frame_coords(k, frame.to_frame_coords(a, k)) == a);
    }
    // Projections sum to the identity on 2-forms.
    const auto a = lckcert::testing::random_form(rng, m.dim, 2);
    CHECK(project_bidegree(a, frame, 2, 0) + project_bidegree(a, frame, 1, 1) + project_bidegree(a, frame, 0, 2) == a);
  }
}

TEST_CASE("hermitian avatar conventions") {
  const ComplexFrame frame(standard_complex_structure(4));
  const auto h12 = to_hermitian(GradedForm::basis(4, {1, 2}), frame);
  GMatrix e11(2, 2);
  e11(0, 0) = Gauss(1);
  CHECK(h12 == e11);
  GMatrix id = GMatrix::identity(2);
  CHECK(from_hermitian(id, frame) == GradedForm::basis(4, {1, 2}) + GradedForm::basis(4, {3, 4}));
  CHECK_THROWS_AS(to_hermitian(GradedForm::basis(4, {1, 3}), frame), std::invalid_argument);
}

TEST_CASE("omega(v, Jv) equals the hermitian form on Z(v)") {
  Rng rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const auto m = lckcert::testing::random_model(rng, 4 + 2 * (trial % 3));
    const ComplexFrame frame(m.J);
    const int n = m.dim / 2;
    const auto h = random_hermitian(rng, n);
    const auto w = from_hermitian(h, frame);
    CHECK(w.is_real());
    CHECK(to_hermitian(w, frame) == h);
    const auto vq = lckcert::testing::random_rational_vector(rng, m.dim);
    const auto jv = to_gauss(m.J * vq);
    const auto v = to_gauss(vq);
    Vec<Gauss> zeta(n);
    for (int a = 0; a < n; ++a)
      for (int j = 0; j < m.dim; ++j) zeta[a] += frame.frame_matrix()(a, j) * v[j];
    Gauss expected;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) expected += zeta[a] * h(a, b) * zeta[b].conj();
    CHECK(evaluate2(w, v, jv) == expected);
  }
}

TEST_CASE("hermitian coordinates and positivity") {
  const int n = 3;
  Rng rng(3);
  const auto h = random_hermitian(rng, n);
  CHECK(hermitian_from_coordinates(n, hermitian_coordinates(h)) == h);
  const auto basis = hermitian_basis(n);
  const auto weights = hermitian_gram_weights(n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      CHECK(trace_product(basis[i], basis[j]) == (i == j ? Gauss(weights[i]) : Gauss()));

  GMatrix psd(2, 2);
  psd(0, 0) = Gauss(1);
  psd(0, 1) = Gauss(1);
  psd(1, 0) = Gauss(1);
  psd(1, 1) = Gauss(1);
  CHECK(is_positive_semidefinite(psd));
  CHECK_FALSE(is_positive_definite(psd));
  psd(1, 1) = Gauss(2);
  CHECK(is_positive_definite(psd));
  psd(1, 1) = Gauss(Rational(1, 2));
  CHECK_FALSE(is_positive_semidefinite(psd));
  CHECK(min_eigenvalue(GMatrix::identity(3)) == doctest::Approx(1.0));
}

TEST_CASE("currents pair without conjugation") {
  Rng rng(9);
  const ComplexFrame frame(standard_complex_structure(6));
  for (int k = 0; k <= 6; ++k) {
    const auto t = lckcert::testing::random_rational_vector(rng, ExteriorBasis::get(6).size(k));
    const auto a = lckcert::testing::random_form(rng, 6, k);
    const auto cur = Current::from_real_functional(frame, k, t);
    CHECK(cur.is_real(frame));
    CHECK(pair(cur, a, frame) == dot(to_gauss(t), a.component(k)));
  }
}

TEST_CASE("current avatars and positive generators") {
  Rng rng(13);
  const ComplexFrame frame(standard_complex_structure(6));
  const int n = 3;
  const auto a = random_hermitian(rng, n);
  const auto t = current_from_avatar(a, frame);
  CHECK(t.is_real(frame));
  CHECK(current_avatar(t, frame) == a);
  const auto h = random_hermitian(rng, n);
  CHECK(pair(t, from_hermitian(h, frame), frame) == trace_product(a, h));

  // positive_generator(v) pairs ω to v* H v; sums of generators have summed avatars.
  const auto v = lckcert::testing::random_gauss_vector(rng, n);
  const auto u = lckcert::testing::random_gauss_vector(rng, n);
  Gauss vhv;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) vhv += v[i].conj() * h(i, j) * v[j];
  CHECK(pair(positive_generator(v, frame), from_hermitian(h, frame), frame) == vhv);
  const auto sum = positive_generator(v, frame) + positive_generator(u, frame);
  CHECK(current_avatar(sum, frame) == current_avatar(positive_generator(v, frame), frame) +
                                          current_avatar(positive_generator(u, frame), frame));
  CHECK(is_positive(sum, frame).positive);
  CHECK(is_positive(current_from_avatar(GMatrix::identity(n), frame), frame).positive);
  CHECK_FALSE(is_positive(current_from_avatar(GMatrix::identity(n) * Gauss(-1), frame), frame).positive);
  CHECK_THROWS(is_positive(Current::zero(6, 3), frame));
}
