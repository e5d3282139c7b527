#include "lckcert/exterior.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace lckcert {

ExteriorBasis::ExteriorBasis(int dim) : dim_(dim), masks_(dim + 1), position_(std::size_t{1} << dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("ExteriorBasis: unsupported dimension");
  // Lexicographic order of strictly increasing multi-indices: enumerate combinations recursively.
  for (int k = 0; k <= dim; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Mask m = 0;
      for (int i : idx) m |= Mask{1} << i;
      position_[m] = masks_[k].size();
      masks_[k].push_back(m);
      int i = k - 1;
      while (i >= 0 && idx[i] == dim - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

const ExteriorBasis& ExteriorBasis::get(int dim) {
  static std::array<std::unique_ptr<ExteriorBasis>, kMaxDim + 1> cache;
  static std::array<std::once_flag, kMaxDim + 1> flags;
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("ExteriorBasis: unsupported dimension");
  std::call_once(flags[dim], [dim] { cache[dim] = std::make_unique<ExteriorBasis>(dim); });
  return *cache[dim];
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  // Count pairs (i in a, j in b) with i > j: each needs one transposition.
  int swaps = 0;
  while (b) {
    const int j = std::countr_zero(b);
    swaps += std::popcount(a >> (j + 1));
    b &= b - 1;
  }
  return (swaps & 1) ? -1 : 1;
}

std::vector<int> mask_indices(Mask m) {
  std::vector<int> out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

Mask indices_mask(const std::vector<int>& indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxDim) throw std::invalid_argument("index out of range");
    if (m & (Mask{1} << i)) throw std::invalid_argument("repeated index");
    m |= Mask{1} << i;
  }
  return m;
}

GradedForm GradedForm::scalar(int dim, Gauss c) {
  GradedForm f(dim);
  f.components_[0] = Vec<Gauss>{std::move(c)};
  return f;
}

GradedForm GradedForm::basis(int dim, const std::vector<int>& one_based, Gauss c) {
  GradedForm f(dim);
  Mask acc = 0;
  int sign = 1;
  for (int i : one_based) {
    if (i < 1 || i > dim) throw std::invalid_argument("GradedForm::basis: index out of range");
    const Mask bit = Mask{1} << (i - 1);
    const int s = wedge_sign(acc, bit);
    if (s == 0) return f;
    sign *= s;
    acc |= bit;
  }
  if (sign < 0) c = -c;
  f.add_to(acc, c);
  return f;
}

GradedForm GradedForm::one_form(const Vec<Rational>& coeffs) {
  return homogeneous(static_cast<int>(coeffs.size()), 1, coeffs);
}

GradedForm GradedForm::homogeneous(int dim, int degree, Vec<Gauss> coeffs) {
  const auto& b = ExteriorBasis::get(dim);
  if (degree < 0 || degree > dim || coeffs.size() != b.size(degree))
    throw std::invalid_argument("GradedForm::homogeneous: wrong coefficient count");
  GradedForm f(dim);
  f.set_component(degree, std::move(coeffs));
  return f;
}

GradedForm GradedForm::homogeneous(int dim, int degree, const Vec<Rational>& coeffs) {
  return homogeneous(dim, degree, to_gauss(coeffs));
}

std::vector<int> GradedForm::degrees() const {
  std::vector<int> out;
  for (const auto& [k, v] : components_)
    if (!is_zero_vector(v)) out.push_back(k);
  return out;
}

Vec<Gauss> GradedForm::component(int k) const {
  auto it = components_.find(k);
  if (it != components_.end()) return it->second;
  if (k < 0 || k > dim_) throw std::out_of_range("GradedForm::component: degree out of range");
  return Vec<Gauss>(ExteriorBasis::get(dim_).size(k));
}

const Gauss& GradedForm::coefficient(int k, std::size_t index) const {
  static const Gauss zero;
  auto it = components_.find(k);
  if (it == components_.end()) return zero;
  return it->second.at(index);
}

Gauss GradedForm::coefficient(Mask m) const {
  const int k = std::popcount(m);
  return coefficient(k, ExteriorBasis::get(dim_).index(m));
}

void GradedForm::set_component(int k, Vec<Gauss> coeffs) {
  if (coeffs.size() != ExteriorBasis::get(dim_).size(k))
    throw std::invalid_argument("GradedForm::set_component: wrong size");
  components_[k] = std::move(coeffs);
}

void GradedForm::add_to(Mask m, const Gauss& c) {
  const auto& b = ExteriorBasis::get(dim_);
  const int k = std::popcount(m);
  auto& v = components_[k];
  if (v.empty()) v.resize(b.size(k));
  v[b.index(m)] += c;
}

bool GradedForm::is_zero() const {
  for (const auto& [k, v] : components_)
    if (!is_zero_vector(v)) return false;
  return true;
}

bool GradedForm::is_real() const {
  for (const auto& [k, v] : components_)
    for (const auto& c : v)
      if (!c.is_real()) return false;
  return true;
}

bool GradedForm::is_homogeneous(int k) const {
  for (const auto& [d, v] : components_)
    if (d != k && !is_zero_vector(v)) return false;
  return true;
}

Vec<Rational> GradedForm::real_component(int k) const {
  const auto v = component(k);
  Vec<Rational> out;
  out.reserve(v.size());
  for (const auto& c : v) {
    if (!c.is_real()) throw std::domain_error("GradedForm: component is not real");
    out.push_back(c.re());
  }
  return out;
}

GradedForm GradedForm::conj() const {
  GradedForm f = *this;
  for (auto& [k, v] : f.components_)
    for (auto& c : v) c = c.conj();
  return f;
}

void GradedForm::check_dim(const GradedForm& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("GradedForm: dimension mismatch");
}

GradedForm& GradedForm::operator+=(const GradedForm& o) {
  check_dim(o);
  for (const auto& [k, v] : o.components_) {
    auto& mine = components_[k];
    if (mine.empty()) {
      mine = v;
      continue;
    }
    for (std::size_t i = 0; i < v.size(); ++i) mine[i] += v[i];
  }
  return *this;
}

GradedForm& GradedForm::operator-=(const GradedForm& o) {
  check_dim(o);
  for (const auto& [k, v] : o.components_) {
    auto& mine = components_[k];
    if (mine.empty()) mine.resize(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) mine[i] -= v[i];
  }
  return *this;
}

GradedForm& GradedForm::operator*=(const Gauss& s) {
  for (auto& [k, v] : components_)
    for (auto& c : v) c *= s;
  return *this;
}

bool operator==(const GradedForm& a, const GradedForm& b) {
  if (a.dim_ != b.dim_) return false;
  return (a - b).is_zero();
}

std::string GradedForm::to_string() const {
  std::ostringstream os;
  const auto& b = ExteriorBasis::get(dim_);
  bool first = true;
  for (const auto& [k, v] : components_)
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << v[i];
      if (k == 0) continue;
      os << "*e^";
      for (int j : mask_indices(b.mask(k, i))) os << (j + 1);
    }
  if (first) os << "0";
  return os.str();
}

GradedForm wedge(const GradedForm& a, const GradedForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  const int dim = a.dim();
  const auto& basis = ExteriorBasis::get(dim);
  GradedForm out(dim);
  for (int ka : a.degrees()) {
    const auto va = a.component(ka);
    for (int kb : b.degrees()) {
      if (ka + kb > dim) continue;
      const auto vb = b.component(kb);
      Vec<Gauss> acc(basis.size(ka + kb));
      for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i].is_zero()) continue;
        const Mask ma = basis.mask(ka, i);
        for (std::size_t j = 0; j < vb.size(); ++j) {
          if (vb[j].is_zero()) continue;
          const Mask mb = basis.mask(kb, j);
          const int s = wedge_sign(ma, mb);
          if (s == 0) continue;
          Gauss term = va[i] * vb[j];
          if (s < 0) acc[basis.index(ma | mb)] -= term;
          else acc[basis.index(ma | mb)] += term;
        }
      }
      GradedForm piece(dim);
      piece.set_component(ka + kb, std::move(acc));
      out += piece;
    }
  }
  return out;
}

QMatrix left_wedge_matrix(const Vec<Rational>& one_form, int k) {
  const int dim = static_cast<int>(one_form.size());
  const auto& b = ExteriorBasis::get(dim);
  if (k < 0 || k >= dim) return QMatrix(k + 1 <= dim ? b.size(k + 1) : 0, k <= dim ? b.size(k) : 0);
  QMatrix m(b.size(k + 1), b.size(k));
  for (std::size_t col = 0; col < b.size(k); ++col) {
    const Mask mc = b.mask(k, col);
    for (int j = 0; j < dim; ++j) {
      if (sgn(one_form[j]) == 0) continue;
      const Mask bit = Mask{1} << j;
      const int s = wedge_sign(bit, mc);
      if (s == 0) continue;
      m(b.index(bit | mc), col) += s > 0 ? one_form[j] : Rational(-one_form[j]);
    }
  }
  return m;
}

GMatrix induced_map(const GMatrix& images, int k) {
  const int dim = static_cast<int>(images.rows());
  if (images.cols() != images.rows()) throw std::invalid_argument("induced_map: images must be square");
  const auto& b = ExteriorBasis::get(dim);
  GMatrix out(b.size(k), b.size(k));
  for (std::size_t col = 0; col < b.size(k); ++col) {
    std::map<Mask, Gauss> acc{{0, Gauss(1)}};
    for (int g : mask_indices(b.mask(k, col))) {
      std::map<Mask, Gauss> next;
      for (const auto& [m, c] : acc)
        for (int h = 0; h < dim; ++h) {
          const Gauss& coef = images(g, h);
          if (coef.is_zero()) continue;
          // Append h^c on the right of the existing product.
          const int s = wedge_sign(m, Mask{1} << h);
          if (s == 0) continue;
          Gauss term = c * coef;
          if (s < 0) term = -term;
          next[m | (Mask{1} << h)] += term;
        }
      acc = std::move(next);
    }
    for (const auto& [m, c] : acc)
      if (!c.is_zero()) out(b.index(m), col) = c;
  }
  return out;
}

}  // namespace lckcert
