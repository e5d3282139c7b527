#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lckcert/matrix.hpp"

namespace lckcert {

using Mask = std::uint32_t;

inline constexpr int kMaxDim = 12;

/// Lexicographic bases of Λ^k for k = 0..dim. Multi-indices are bitmasks over generators 0..dim-1.
class ExteriorBasis {
 public:
  explicit ExteriorBasis(int dim);

  int dim() const { return dim_; }
  std::size_t size(int k) const { return masks_.at(k).size(); }
  const std::vector<Mask>& masks(int k) const { return masks_.at(k); }
  Mask mask(int k, std::size_t index) const { return masks_[k][index]; }
  std::size_t index(Mask m) const { return position_[m]; }

  /// Shared instance; thread-safe.
  static const ExteriorBasis& get(int dim);

 private:
  int dim_;
  std::vector<std::vector<Mask>> masks_;
  std::vector<std::size_t> position_;
};

/// Sign of e^a ∧ e^b relative to e^(a|b), or 0 when the masks overlap.
int wedge_sign(Mask a, Mask b);

std::vector<int> mask_indices(Mask m);  // 0-based, increasing
Mask indices_mask(const std::vector<int>& indices);  // 0-based; throws on repeats

struct Bidegree {
  int p = 0;
  int q = 0;
  friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/// Exact element of the exterior algebra of a 2n-dimensional dual space, stored per degree.
class GradedForm {
 public:
  GradedForm() = default;
  explicit GradedForm(int dim) : dim_(dim) {}

  static GradedForm zero(int dim) { return GradedForm(dim); }
  static GradedForm scalar(int dim, Gauss c);
  /// e^{i_1} ∧ ... ∧ e^{i_k} from 1-based indices (any order; sign applied).
  static GradedForm basis(int dim, const std::vector<int>& one_based, Gauss c = Gauss(1));
  static GradedForm one_form(const Vec<Rational>& coeffs);
  static GradedForm homogeneous(int dim, int degree, Vec<Gauss> coeffs);
  static GradedForm homogeneous(int dim, int degree, const Vec<Rational>& coeffs);

  int dim() const { return dim_; }
  std::vector<int> degrees() const;  // degrees with a nonzero component
  /// Coefficient vector of degree k (zeros when absent).
  Vec<Gauss> component(int k) const;
  const Gauss& coefficient(int k, std::size_t index) const;
  Gauss coefficient(Mask m) const;

  void set_component(int k, Vec<Gauss> coeffs);
  void add_to(Mask m, const Gauss& c);

  bool is_zero() const;
  bool is_real() const;
  bool is_homogeneous(int k) const;
  /// Real coefficient vector of degree k; throws when not real.
  Vec<Rational> real_component(int k) const;

  GradedForm conj() const;

  GradedForm& operator+=(const GradedForm& o);
  GradedForm& operator-=(const GradedForm& o);
  GradedForm& operator*=(const Gauss& s);
  friend GradedForm operator+(GradedForm a, const GradedForm& b) { return a += b; }
  friend GradedForm operator-(GradedForm a, const GradedForm& b) { return a -= b; }
  friend GradedForm operator*(GradedForm a, const Gauss& s) { return a *= s; }
  friend GradedForm operator*(const Gauss& s, GradedForm a) { return a *= s; }
  friend GradedForm operator-(GradedForm a) { return a *= Gauss(-1); }
  friend bool operator==(const GradedForm& a, const GradedForm& b);
  friend bool operator!=(const GradedForm& a, const GradedForm& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void check_dim(const GradedForm& o) const;

  int dim_ = 0;
  std::map<int, Vec<Gauss>> components_;
};

GradedForm wedge(const GradedForm& a, const GradedForm& b);

/// Matrix of α ↦ θ ∧ α from Λ^k to Λ^{k+1}.
QMatrix left_wedge_matrix(const Vec<Rational>& one_form, int k);

/// Matrix on Λ^k induced by substituting each generator g^j ↦ Σ_c images(j, c) h^c.
GMatrix induced_map(const GMatrix& images, int k);

}  // namespace lckcert
