#include "support.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace lckcert::testing {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

LieModel direct_sum(const std::vector<LieModel>& parts, const std::string& name) {
  LieModel out;
  out.name = name;
  for (const auto& p : parts) out.dim += p.dim;
  out.J = QMatrix(out.dim, out.dim);
  int offset = 0;
  for (const auto& p : parts) {
    for (const auto& c : p.structure) out.structure.push_back({c.i + offset, c.j + offset, c.k + offset, c.value});
    for (int r = 0; r < p.dim; ++r)
      for (int c = 0; c < p.dim; ++c) out.J(offset + r, offset + c) = p.J(r, c);
    for (const auto& t : p.theta) out.theta.push_back(t);
    offset += p.dim;
  }
  return out;
}

LieModel change_basis(const LieModel& m, const QMatrix& p) {
  const auto inv = inverse(p);
  if (!inv) throw std::invalid_argument("change_basis: singular matrix");
  const auto table = m.bracket_table();
  LieModel out = m;
  out.structure.clear();
  for (int i = 0; i < m.dim; ++i)
    for (int j = i + 1; j < m.dim; ++j) {
      Vec<Rational> br(m.dim);
      for (int a = 0; a < m.dim; ++a)
        for (int b = 0; b < m.dim; ++b) {
          const Rational s = p(a, i) * p(b, j);
          if (sgn(s) == 0) continue;
          for (int k = 0; k < m.dim; ++k) br[k] += s * table[a][b][k];
        }
      const auto coords = *inv * br;
      for (int k = 0; k < m.dim; ++k)
        if (sgn(coords[k]) != 0) out.structure.push_back({i, j, k, coords[k]});
    }
  out.J = *inv * m.J * p;
  out.theta = p.transpose() * m.theta;
  return out;
}

Vec<Rational> random_closed_theta(Rng& rng, const LieModel& m) {
  Vec<Rational> theta(m.dim);
  for (const auto& b : closed_one_forms(m)) {
    const int c = uniform(rng, -2, 2);
    for (int i = 0; i < m.dim; ++i) theta[i] += c * b[i];
  }
  return theta;
}

LieModel random_model(Rng& rng, int dim) {
  static const char* names[] = {"kt", "hopf", "inoue"};
  std::vector<LieModel> parts;
  int left = dim;
  while (left > 0) {
    if (left >= 4 && uniform(rng, 0, 3) > 0) {
      parts.push_back(*catalog_model(names[uniform(rng, 0, 2)]));
      left -= 4;
    } else {
      parts.push_back(torus_model(2));
      left -= 2;
    }
  }
  std::shuffle(parts.begin(), parts.end(), rng);
  LieModel sum = direct_sum(parts, "random" + std::to_string(dim));

  QMatrix p = QMatrix::identity(dim);
  if (uniform(rng, 0, 1) == 0) {
    // Complex-linear unitriangular change of basis: commutes with the standard J.
    for (int a = 0; a < dim / 2; ++a)
      for (int b = a + 1; b < dim / 2; ++b) {
        const int x = uniform(rng, -2, 2), y = uniform(rng, -2, 2);
        p(2 * a, 2 * b) = x;
        p(2 * a, 2 * b + 1) = -y;
        p(2 * a + 1, 2 * b) = y;
        p(2 * a + 1, 2 * b + 1) = x;
      }
  } else {
    for (int r = 0; r < dim; ++r)
      for (int c = r + 1; c < dim; ++c) p(r, c) = uniform(rng, -1, 1);
  }
  LieModel m = change_basis(sum, p);
  m.theta = random_closed_theta(rng, m);
  return m;
}

QMatrix oracle_ce_differential(const LieModel& m, int k) {
  const auto& basis = ExteriorBasis::get(m.dim);
  const auto table = m.bracket_table();
  QMatrix d(basis.size(k + 1), basis.size(k));
  for (std::size_t col = 0; col < basis.size(k); ++col) {
    const Mask alpha = basis.mask(k, col);
    for (std::size_t row = 0; row < basis.size(k + 1); ++row) {
      const auto x = mask_indices(basis.mask(k + 1, row));
      Rational value = 0;
      for (int i = 0; i < k + 1; ++i)
        for (int j = i + 1; j < k + 1; ++j) {
          Mask rest = 0;
          for (int r = 0; r < k + 1; ++r)
            if (r != i && r != j) rest |= Mask{1} << x[r];
          const int sign_ij = (i + j) % 2 == 0 ? 1 : -1;
          for (int c = 0; c < m.dim; ++c) {
            const Rational& coef = table[x[i]][x[j]][c];
            if (sgn(coef) == 0 || (rest & (Mask{1} << c)) || (rest | (Mask{1} << c)) != alpha) continue;
            // e^alpha(e_c, e_rest...) = sign of sorting c into rest.
            const int before = std::popcount(rest & ((Mask{1} << c) - 1));
            value += (before % 2 == 0 ? 1 : -1) * sign_ij * coef;
          }
        }
      d(row, col) = value;
    }
  }
  return d;
}

Vec<Gauss> random_gauss_vector(Rng& rng, std::size_t size, int bound) {
  Vec<Gauss> v;
  for (std::size_t i = 0; i < size; ++i) v.emplace_back(Rational(uniform(rng, -bound, bound)), Rational(uniform(rng, -bound, bound)));
  return v;
}

Vec<Rational> random_rational_vector(Rng& rng, std::size_t size, int bound) {
  Vec<Rational> v;
  for (std::size_t i = 0; i < size; ++i) {
    Rational x(uniform(rng, -bound, bound), uniform(rng, 1, 3));
    x.canonicalize();
    v.push_back(x);
  }
  return v;
}

GradedForm random_form(Rng& rng, int dim, int degree, bool real) {
  const auto size = ExteriorBasis::get(dim).size(degree);
  if (real) return GradedForm::homogeneous(dim, degree, random_rational_vector(rng, size));
  return GradedForm::homogeneous(dim, degree, random_gauss_vector(rng, size));
}

std::vector<LieModel> seeded_models(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<LieModel> out;
  for (int i = 0; i < count; ++i) out.push_back(random_model(rng, 4 + 2 * (i % 3)));
  return out;
}

}  // namespace lckcert::testing
