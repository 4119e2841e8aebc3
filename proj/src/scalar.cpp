#include "curvelim/scalar.hpp"

#include <cmath>
#include <limits>

#include "curvelim/error.hpp"

namespace curvelim {

Rational parse_rational(std::string_view text) {
  auto fail = [&] { throw InputError("malformed rational \"" + std::string(text) + "\""); };
  if (text.empty()) fail();
  const auto slash = text.find('/');
  auto check_int = [&](std::string_view s) {
    std::size_t k = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) fail();
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') fail();
  };
  std::string num(text.substr(0, slash));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  check_int(num);
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(mpz_class(num));
  } else {
    std::string den(text.substr(slash + 1));
    check_int(den);
    if (den[0] == '-' || den[0] == '+') fail();
    mpz_class d(den);
    if (d == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
    q = Rational(mpz_class(num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

Gauss Gauss::inverse() const {
  const Rational n = norm2();
  if (sgn(n) == 0) throw InputError("division by zero");
  return {re_ / n, -im_ / n};
}

Gauss& Gauss::operator+=(const Gauss& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gauss& Gauss::operator-=(const Gauss& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gauss& Gauss::operator*=(const Gauss& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Gauss& Gauss::operator/=(const Gauss& o) {
  if (o.is_real()) {
    if (sgn(o.re_) == 0) throw InputError("division by zero");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::string to_string(const Gauss& z) {
  if (z.is_real()) return to_string(z.re());
  return to_string(z.re()) + (sgn(z.im()) < 0 ? "-" : "+") + to_string(abs(z.im())) + "i";
}

Rational rationalize(double v, long max_den) {
  if (!std::isfinite(v)) throw InputError("cannot rationalize non-finite value");
  const bool neg = v < 0;
  double x = std::fabs(v);
  // Convergents h/k of the continued fraction of x.
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double a = std::floor(x);
    if (a > 1e15) break;
    const mpz_class ai(static_cast<unsigned long>(a));
    const mpz_class h2 = ai * h1 + h0;
    const mpz_class k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1.0 / frac;
  }
  if (k1 == 0) return Rational(0);
  Rational q(h1, k1);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

}  // namespace curvelim
