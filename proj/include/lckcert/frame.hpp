#pragma once

#include <map>
#include <vector>

#include "lckcert/exterior.hpp"

namespace lckcert {

/// Type decomposition induced by a complex structure J (J e_i = column i).
///
/// The frame W = (Z^1..Z^n, Z̄^1..Z̄^n) consists of (1,0)-covectors Z^a = 2·projector_10(e^j) for a
/// greedy choice of generators j (e^1, e^3, ... for the standard structure Je_{2a-1} = e_{2a}),
/// followed by their conjugates. Forms are converted between the real basis e^I and the frame
/// basis W^I degree by degree; in the frame, bidegree (p,q) of W^I counts the Z and Z̄ factors.
class ComplexFrame {
 public:
  explicit ComplexFrame(const QMatrix& J);

  int dim() const { return dim_; }
  int n() const { return dim_ / 2; }

  /// ½(I - iJᵀ) and ½(I + iJᵀ) acting on covector coefficient columns.
  const GMatrix& projector_10() const { return p10_; }
  const GMatrix& projector_01() const { return p01_; }
  /// Row c = coefficients of W^c in e^1..e^{2n}.
  const GMatrix& frame_matrix() const { return frame_; }
  const std::vector<int>& generators() const { return generators_; }

  /// W-coordinates = to_frame(k) * e-coordinates on Λ^k; from_frame(k) is the inverse.
  const GMatrix& to_frame(int k) const { return to_frame_.at(k); }
  const GMatrix& from_frame(int k) const { return from_frame_.at(k); }

  Bidegree type(Mask frame_mask) const;
  /// Frame-basis positions in Λ^k of type (p,q).
  const std::vector<std::size_t>& positions(int p, int q) const;

  Vec<Gauss> to_frame_coords(const GradedForm& a, int k) const;
  GradedForm from_frame_coords(int k, const Vec<Gauss>& w) const;

  /// Frame mask of Z^a ∧ Z̄^b (0-based a, b).
  Mask mixed_mask(int a, int b) const { return (Mask{1} << a) | (Mask{1} << (n() + b)); }

 private:
  int dim_;
  QMatrix J_;
  GMatrix p10_, p01_, frame_;
  std::vector<int> generators_;
  std::vector<GMatrix> to_frame_, from_frame_;
  std::map<std::pair<int, int>, std::vector<std::size_t>> positions_;
};

/// Components of pure bidegree; they sum to a.
std::map<Bidegree, GradedForm> bidegree_split(const GradedForm& a, const ComplexFrame& frame);

/// Projection onto bidegree (p,q) (form-side Π_{p,q}).
GradedForm project_bidegree(const GradedForm& a, const ComplexFrame& frame, int p, int q);

bool is_pure_bidegree(const GradedForm& a, const ComplexFrame& frame, int p, int q);

}  // namespace lckcert
