#include "lckcert/frame.hpp"

#include <bit>
#include <stdexcept>

namespace lckcert {

ComplexFrame::ComplexFrame(const QMatrix& J) : dim_(static_cast<int>(J.rows())), J_(J) {
  if (J.rows() != J.cols() || dim_ % 2 != 0 || dim_ == 0)
    throw std::invalid_argument("ComplexFrame: J must be a nonzero even-dimensional square matrix");
  if (J * J != QMatrix::identity(dim_) * Rational(-1))
    throw std::invalid_argument("ComplexFrame: J^2 != -I");
  const int nn = dim_ / 2;
  const GMatrix id = GMatrix::identity(dim_);
  GMatrix iJt = to_gauss(J.transpose()) * Gauss::i();
  p10_ = (id - iJt) * Gauss(Rational(1, 2));
  p01_ = (id + iJt) * Gauss(Rational(1, 2));

  // Greedy choice of generators whose (1,0)-parts are independent.
  std::vector<Vec<Gauss>> zs;
  for (int j = 0; j < dim_ && static_cast<int>(zs.size()) < nn; ++j) {
    Vec<Gauss> z = p10_.column(j);
    for (auto& c : z) c *= Gauss(2);
    auto trial = zs;
    trial.push_back(z);
    if (rank(GMatrix::from_columns(dim_, trial)) == trial.size()) {
      zs = std::move(trial);
      generators_.push_back(j);
    }
  }
  if (static_cast<int>(zs.size()) != nn) throw std::logic_error("ComplexFrame: failed to find a (1,0)-frame");

  frame_ = GMatrix(dim_, dim_);
  for (int a = 0; a < nn; ++a)
    for (int j = 0; j < dim_; ++j) {
      frame_(a, j) = zs[a][j];
      frame_(nn + a, j) = zs[a][j].conj();
    }
  auto inv = inverse(frame_);
  if (!inv) throw std::logic_error("ComplexFrame: frame matrix is singular");

  // e^j = Σ_c inv(j, c) W^c, W^c = Σ_j frame(c, j) e^j.
  for (int k = 0; k <= dim_; ++k) {
    to_frame_.push_back(induced_map(*inv, k));
    from_frame_.push_back(induced_map(frame_, k));
  }
  const auto& basis = ExteriorBasis::get(dim_);
  for (int k = 0; k <= dim_; ++k)
    for (std::size_t i = 0; i < basis.size(k); ++i) {
      const auto t = type(basis.mask(k, i));
      positions_[{t.p, t.q}].push_back(i);
    }
}

Bidegree ComplexFrame::type(Mask m) const {
  const Mask low = (Mask{1} << n()) - 1;
  return {std::popcount(m & low), std::popcount(m >> n())};
}

const std::vector<std::size_t>& ComplexFrame::positions(int p, int q) const {
  static const std::vector<std::size_t> none;
  auto it = positions_.find({p, q});
  return it == positions_.end() ? none : it->second;
}

Vec<Gauss> ComplexFrame::to_frame_coords(const GradedForm& a, int k) const {
  if (a.dim() != dim_) throw std::invalid_argument("ComplexFrame: dimension mismatch");
  return to_frame_.at(k) * a.component(k);
}

GradedForm ComplexFrame::from_frame_coords(int k, const Vec<Gauss>& w) const {
  return GradedForm::homogeneous(dim_, k, from_frame_.at(k) * w);
}

std::map<Bidegree, GradedForm> bidegree_split(const GradedForm& a, const ComplexFrame& frame) {
  std::map<Bidegree, GradedForm> out;
  for (int k : a.degrees()) {
    const auto w = frame.to_frame_coords(a, k);
    for (int p = 0; p <= k; ++p) {
      const int q = k - p;
      Vec<Gauss> part(w.size());
      bool nonzero = false;
      for (auto i : frame.positions(p, q)) {
        part[i] = w[i];
        nonzero = nonzero || !w[i].is_zero();
      }
      if (!nonzero) continue;
      auto piece = frame.from_frame_coords(k, part);
      auto [it, fresh] = out.try_emplace(Bidegree{p, q}, piece);
      if (!fresh) it->second += piece;
    }
  }
  return out;
}

GradedForm project_bidegree(const GradedForm& a, const ComplexFrame& frame, int p, int q) {
  const auto parts = bidegree_split(a, frame);
  auto it = parts.find(Bidegree{p, q});
  return it == parts.end() ? GradedForm::zero(a.dim()) : it->second;
}

bool is_pure_bidegree(const GradedForm& a, const ComplexFrame& frame, int p, int q) {
  for (const auto& [b, part] : bidegree_split(a, frame))
    if (!(b == Bidegree{p, q}) && !part.is_zero()) return false;
  return true;
}

}  // namespace lckcert
