#include "lckcert/model.hpp"

#include <sstream>

namespace lckcert {

namespace {

std::string tuple_string(std::initializer_list<int> zero_based) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (int v : zero_based) {
    if (!first) os << ',';
    first = false;
    os << v + 1;
  }
  os << ')';
  return os.str();
}

Vec<Rational> act(const QMatrix& J, const Vec<Rational>& v) { return J * v; }

Vec<Rational> bracket(const std::vector<std::vector<Vec<Rational>>>& table, const Vec<Rational>& x,
                      const Vec<Rational>& y) {
  const std::size_t dim = x.size();
  Vec<Rational> out(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (sgn(y[j]) == 0 || i == j) continue;
      const Rational s = x[i] * y[j];
      for (std::size_t k = 0; k < dim; ++k)
        if (sgn(table[i][j][k]) != 0) out[k] += s * table[i][j][k];
    }
  }
  return out;
}

Vec<Rational> unit(int dim, int i) {
  Vec<Rational> v(dim);
  v[i] = 1;
  return v;
}

}  // namespace

std::vector<std::vector<Vec<Rational>>> LieModel::bracket_table() const {
  std::vector<std::vector<Vec<Rational>>> t(dim, std::vector<Vec<Rational>>(dim, Vec<Rational>(dim)));
  for (const auto& c : structure) {
    t[c.i][c.j][c.k] += c.value;
    t[c.j][c.i][c.k] -= c.value;
  }
  return t;
}

LieModel LieModel::with_theta(Vec<Rational> t) const {
  if (static_cast<int>(t.size()) != dim) throw std::invalid_argument("with_theta: theta has wrong length");
  LieModel m = *this;
  m.theta = std::move(t);
  return m;
}

bool ValidationReport::ok() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : checks) {
    if (!first) os << ", ";
    first = false;
    os << c.name << '=' << (c.passed ? "pass" : "fail");
    if (!c.passed && !c.detail.empty()) os << ' ' << c.detail;
  }
  return os.str();
}

void check_well_formed(const LieModel& m) {
  if (m.dim < 2 || m.dim % 2 != 0 || m.dim > kMaxDim)
    throw std::invalid_argument("dim must be even and between 2 and " + std::to_string(kMaxDim));
  if (static_cast<int>(m.J.rows()) != m.dim || static_cast<int>(m.J.cols()) != m.dim)
    throw std::invalid_argument("J must be a dim×dim matrix");
  if (static_cast<int>(m.theta.size()) != m.dim) throw std::invalid_argument("theta must have dim entries");
  for (std::size_t s = 0; s < m.structure.size(); ++s) {
    const auto& c = m.structure[s];
    if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= m.dim || c.j >= m.dim || c.k >= m.dim)
      throw std::invalid_argument("structure[" + std::to_string(s) + "]: index out of range");
    if (c.i >= c.j) throw std::invalid_argument("structure[" + std::to_string(s) + "]: requires i < j");
  }
}

ValidationReport validate(const LieModel& m) {
  check_well_formed(m);
  const int dim = m.dim;
  const auto table = m.bracket_table();
  ValidationReport report;

  ValidationCheck jacobi{"jacobi"};
  for (int i = 0; i < dim && jacobi.passed; ++i)
    for (int j = i + 1; j < dim && jacobi.passed; ++j)
      for (int k = j + 1; k < dim && jacobi.passed; ++k) {
        const auto ei = unit(dim, i), ej = unit(dim, j), ek = unit(dim, k);
        auto sum = bracket(table, bracket(table, ei, ej), ek);
        const auto b2 = bracket(table, bracket(table, ej, ek), ei);
        const auto b3 = bracket(table, bracket(table, ek, ei), ej);
        for (int r = 0; r < dim; ++r) sum[r] += b2[r] + b3[r];
        if (!is_zero_vector(sum)) {
          jacobi.passed = false;
          jacobi.detail = tuple_string({i, j, k});
        }
      }
  report.checks.push_back(jacobi);

  ValidationCheck jsq{"j_squared"};
  const QMatrix jj = m.J * m.J;
  for (int r = 0; r < dim && jsq.passed; ++r)
    for (int c = 0; c < dim && jsq.passed; ++c)
      if (jj(r, c) != Rational(r == c ? -1 : 0)) {
        jsq.passed = false;
        jsq.detail = tuple_string({r, c});
      }
  report.checks.push_back(jsq);

  // N(X,Y) = [JX,JY] - J[JX,Y] - J[X,JY] - [X,Y].
  ValidationCheck nij{"nijenhuis"};
  for (int i = 0; i < dim && nij.passed; ++i)
    for (int j = i + 1; j < dim && nij.passed; ++j) {
      const auto x = unit(dim, i), y = unit(dim, j);
      const auto jx = act(m.J, x), jy = act(m.J, y);
      auto n = bracket(table, jx, jy);
      const auto t1 = act(m.J, bracket(table, jx, y));
      const auto t2 = act(m.J, bracket(table, x, jy));
      const auto t3 = bracket(table, x, y);
      for (int r = 0; r < dim; ++r) n[r] -= t1[r] + t2[r] + t3[r];
      if (!is_zero_vector(n)) {
        nij.passed = false;
        nij.detail = tuple_string({i, j});
      }
    }
  report.checks.push_back(nij);

  // dθ(e_i, e_j) = -θ([e_i, e_j]).
  ValidationCheck closed{"theta_closed"};
  for (int i = 0; i < dim && closed.passed; ++i)
    for (int j = i + 1; j < dim && closed.passed; ++j) {
      Rational s = 0;
      for (int k = 0; k < dim; ++k) s += m.theta[k] * table[i][j][k];
      if (sgn(s) != 0) {
        closed.passed = false;
        closed.detail = tuple_string({i, j});
      }
    }
  report.checks.push_back(closed);
  return report;
}

QMatrix ce_differential(const LieModel& m, int k) {
  const int dim = m.dim;
  const auto& b = ExteriorBasis::get(dim);
  if (k < 0 || k > dim) throw std::out_of_range("ce_differential: degree out of range");
  const std::size_t rows = k < dim ? b.size(k + 1) : 0;
  QMatrix d(rows, b.size(k));
  if (k == dim) return d;

  // de^r as a list of (mask, coefficient) over Λ².
  std::vector<std::vector<std::pair<Mask, Rational>>> de(dim);
  for (const auto& c : m.structure) {
    if (sgn(c.value) == 0) continue;
    de[c.k].emplace_back((Mask{1} << c.i) | (Mask{1} << c.j), Rational(-c.value));
  }
  for (std::size_t col = 0; col < b.size(k); ++col) {
    const Mask mc = b.mask(k, col);
    const auto idx = mask_indices(mc);
    // d(e^{i1}∧…∧e^{ik}) = Σ_r (-1)^r e^{i1}∧…∧de^{ir}∧…∧e^{ik}  (r 0-based).
    for (std::size_t r = 0; r < idx.size(); ++r) {
      const Mask rest = mc & ~(Mask{1} << idx[r]);
      // de^{ir} is even, so it moves to the front freely: the term is (-1)^r de^{ir} ∧ e^{rest}.
      const int sign_r = (r % 2 == 0) ? 1 : -1;
      for (const auto& [two, coef] : de[idx[r]]) {
        const int s = wedge_sign(two, rest);
        if (s == 0) continue;
        const int total = s * sign_r;
        if (total > 0) d(b.index(two | rest), col) += coef;
        else d(b.index(two | rest), col) -= coef;
      }
    }
  }
  return d;
}

}  // namespace lckcert
