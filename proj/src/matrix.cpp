#include "lckcert/matrix.hpp"

namespace lckcert {

GMatrix to_gauss(const QMatrix& m) {
  GMatrix g(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) g(r, c) = Gauss(m(r, c));
  return g;
}

Vec<Gauss> to_gauss(const Vec<Rational>& v) {
  Vec<Gauss> g;
  g.reserve(v.size());
  for (const auto& x : v) g.emplace_back(x);
  return g;
}

std::optional<Vec<Rational>> least_norm_solve(const QMatrix& m, const Vec<Rational>& b) {
  const QMatrix mt = m.transpose();
  auto z = solve(m * mt, b);
  if (!z) return std::nullopt;
  Vec<Rational> x = mt * *z;
  if (m * x != b) return std::nullopt;
  return x;
}

Vec<Rational> project_onto_span(const std::vector<Vec<Rational>>& basis, const Vec<Rational>& weights,
                                const Vec<Rational>& x) {
  Vec<Rational> out(x.size());
  if (basis.empty()) return out;
  const std::size_t k = basis.size();
  auto wdot = [&](const Vec<Rational>& a, const Vec<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += weights[i] * a[i] * b[i];
    return s;
  };
  QMatrix gram(k, k);
  Vec<Rational> rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    rhs[i] = wdot(basis[i], x);
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = wdot(basis[i], basis[j]);
  }
  auto coeffs = solve(gram, rhs);
  if (!coeffs) throw std::logic_error("project_onto_span: dependent basis");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < x.size(); ++r)
      if (sgn(basis[i][r]) != 0) out[r] += (*coeffs)[i] * basis[i][r];
  return out;
}

}  // namespace lckcert
