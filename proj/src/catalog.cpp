#include "lckcert/catalog.hpp"

namespace lckcert {

QMatrix standard_complex_structure(int dim) {
  QMatrix J(dim, dim);
  for (int a = 0; a + 1 < dim; a += 2) {
    J(a + 1, a) = 1;
    J(a, a + 1) = -1;
  }
  return J;
}

LieModel torus_model(int dim) {
  LieModel m;
  m.name = "torus" + std::to_string(dim);
  m.description = "abelian Lie algebra of real dimension " + std::to_string(dim) + " (complex torus), flat Kähler";
  m.dim = dim;
  m.J = standard_complex_structure(dim);
  m.theta = Vec<Rational>(dim);
  return m;
}

namespace {

// Structure constants are given 1-based as [e_i, e_j] = c e_k.
LieModel make(std::string name, std::string description, int dim,
              std::vector<std::tuple<int, int, int, Rational>> brackets, Vec<Rational> theta) {
  LieModel m;
  m.name = std::move(name);
  m.description = std::move(description);
  m.dim = dim;
  for (auto& [i, j, k, c] : brackets) m.structure.push_back({i - 1, j - 1, k - 1, c});
  m.J = standard_complex_structure(dim);
  m.theta = std::move(theta);
  return m;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back({torus_model(4), "feasible"});
  out.push_back({torus_model(6), "feasible"});
  // de^4 = e^1∧e^2 means [e_1, e_2] = -e_4.
  out.push_back({make("kt",
                      "Kodaira-Thurston: h3 + R, de4 = e1^e2, Je1=e2, Je3=e4; Vaisman with Lee form -e3",
                      4, {{1, 2, 4, Rational(-1)}}, {0, 0, -1, 0}),
                 "feasible"});
  // R + su(2): de2 = -e3^e4, de3 = -e4^e2, de4 = -e2^e3.
  out.push_back({make("hopf", "Hopf surface: R + su(2), de2 = -e3^e4 and cyclic, Je1=e2, Je3=e4; Lee form e1", 4,
                      {{3, 4, 2, Rational(1)}, {2, 4, 3, Rational(-1)}, {2, 3, 4, Rational(1)}}, {1, 0, 0, 0}),
                 "feasible"});
  // Solvable R ⋉ R^3 with ad e1 = diag(1) + rotation-dilation block of trace -1 (unimodular).
  out.push_back({make("inoue",
                      "Inoue-type solvable: [e1,e2]=e2, [e1,e3]=-1/2 e3 - e4, [e1,e4]=e3 - 1/2 e4, Je1=e2, Je3=e4; Lee form e1",
                      4,
                      {{1, 2, 2, Rational(1)},
                       {1, 3, 3, Rational(-1, 2)},
                       {1, 3, 4, Rational(-1)},
                       {1, 4, 3, Rational(1)},
                       {1, 4, 4, Rational(-1, 2)}},
                      {1, 0, 0, 0}),
                 "feasible"});
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

std::optional<LieModel> catalog_model(const std::string& name) {
  for (const auto& e : catalog())
    if (e.model.name == name) return e.model;
  return std::nullopt;
}

}  // namespace lckcert
