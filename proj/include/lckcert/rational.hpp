#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace lckcert {

using Rational = mpq_class;

/// Gaussian rational re + i*im. All structural computation runs over this field.
class Gauss {
 public:
  Gauss() = default;
  Gauss(Rational re) : re_(std::move(re)) {}  // NOLINT: implicit by design of the field embedding
  Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  Gauss(long re) : re_(re) {}  // NOLINT

  static Gauss i() { return Gauss(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gauss conj() const { return Gauss(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Gauss& operator+=(const Gauss& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gauss& operator-=(const Gauss& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gauss& operator*=(const Gauss& o);
  Gauss& operator/=(const Gauss& o);

  /// this += a*b without temporaries for the common real cases.
  void add_product(const Gauss& a, const Gauss& b);

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend Gauss operator-(const Gauss& a) { return Gauss(-a.re_, -a.im_); }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Gauss& z);

// Field helpers so exact algorithms can be written once for Rational and Gauss.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Gauss& z) { return z.is_zero(); }
inline Rational conj(const Rational& x) { return x; }
inline Gauss conj(const Gauss& z) { return z.conj(); }
inline void add_product(Rational& acc, const Rational& a, const Rational& b) { acc += a * b; }
inline void add_product(Gauss& acc, const Gauss& a, const Gauss& b) { acc.add_product(a, b); }

/// Parses "p/q", "-p/q" or an integer string. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" (or "p" when q == 1).
std::string to_string(const Rational& x);

/// Best rational approximation with denominator <= max_denominator (continued fractions).
Rational rationalize(double x, std::int64_t max_denominator);

}  // namespace lckcert
