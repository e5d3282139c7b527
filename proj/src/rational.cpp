#include "lckcert/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace lckcert {

Gauss& Gauss::operator*=(const Gauss& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  if (is_real()) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gauss& Gauss::operator/=(const Gauss& o) {
  if (o.is_zero()) throw std::domain_error("Gauss: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  Gauss q = *this * o.conj();
  re_ = q.re_ / n;
  im_ = q.im_ / n;
  return *this;
}

void Gauss::add_product(const Gauss& a, const Gauss& b) {
  if (a.is_zero() || b.is_zero()) return;
  const bool ar = a.is_real();
  const bool br = b.is_real();
  if (ar && br) {
    re_ += a.re_ * b.re_;
  } else if (ar) {
    re_ += a.re_ * b.re_;
    im_ += a.re_ * b.im_;
  } else if (br) {
    re_ += a.re_ * b.re_;
    im_ += a.im_ * b.re_;
  } else {
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
  }
}

std::ostream& operator<<(std::ostream& os, const Gauss& z) {
  if (z.is_real()) return os << z.re();
  return os << '(' << z.re() << (sgn(z.im()) < 0 ? "-" : "+") << abs(z.im()) << "i)";
}

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  mpz_class n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (text.front() == '-') r = -r;
  return r;
}

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

Rational rationalize(double x, std::int64_t max_denominator) {
  if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite value");
  if (max_denominator < 1) max_denominator = 1;
  const bool negative = x < 0;
  double r = std::fabs(x);
  // Convergents h/k; semiconvergents are not needed for our use.
  mpz_class h_prev = 1, h = static_cast<long>(std::floor(r));
  mpz_class k_prev = 0, k = 1;
  double frac = r - std::floor(r);
  for (int step = 0; step < 64 && frac > 1e-15; ++step) {
    const double inv = 1.0 / frac;
    const double a_d = std::floor(inv);
    if (a_d > 1e15) break;
    mpz_class a = static_cast<long>(a_d);
    mpz_class k_next = a * k + k_prev;
    if (k_next > max_denominator) break;
    mpz_class h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    frac = inv - a_d;
  }
  Rational q(h, k);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace lckcert
