#ifndef CURVELIM_SCALAR_HPP
#define CURVELIM_SCALAR_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace curvelim {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;

/// 64-bit complex float used on the numerical path (curve-point location).
using Complex = std::complex<double>;

/// Parses "a", "-a" or "a/b". Throws InputError on malformed text or b == 0.
Rational parse_rational(std::string_view text);

/// Lowest-terms text form: "a" when the denominator is 1, else "a/b".
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/// Exact complex rational re + i*im.
class Gauss {
public:
  Gauss() = default;
  Gauss(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Gauss(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Gauss(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gauss(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Gauss i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// |z|^2, exact.
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  Gauss conj() const { return {re_, -im_}; }
  Gauss inverse() const;

  Complex to_complex() const { return {to_double(re_), to_double(im_)}; }
  double magnitude() const { return std::abs(to_complex()); }

  Gauss operator-() const { return {-re_, -im_}; }
  Gauss& operator+=(const Gauss& o);
  Gauss& operator-=(const Gauss& o);
  Gauss& operator*=(const Gauss& o);
  Gauss& operator/=(const Gauss& o);

  friend Gauss operator+(Gauss a, const Gauss& b) { return a += b; }
  friend Gauss operator-(Gauss a, const Gauss& b) { return a -= b; }
  friend Gauss operator*(Gauss a, const Gauss& b) { return a *= b; }
  friend Gauss operator/(Gauss a, const Gauss& b) { return a /= b; }
  friend bool operator==(const Gauss& a, const Gauss& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Gauss& a, const Gauss& b) { return !(a == b); }

private:
  Rational re_{0};
  Rational im_{0};
};

std::string to_string(const Gauss& z);

// Uniform helpers so generic code can be written once for Gauss and Complex.

inline Gauss conj(const Gauss& z) { return z.conj(); }
inline double magnitude(const Gauss& z) { return z.magnitude(); }
inline double magnitude(const Complex& z) { return std::abs(z); }
inline Complex to_complex(const Gauss& z) { return z.to_complex(); }
inline Complex to_complex(const Complex& z) { return z; }

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Gauss> {
  static constexpr bool exact = true;
  static Gauss zero() { return Gauss(); }
  static Gauss one() { return Gauss(1); }
  static Gauss from_int(std::int64_t v) { return Gauss(Rational(static_cast<long>(v))); }
  static bool is_zero(const Gauss& z, double /*tol*/ = 0.0) { return z.is_zero(); }
};

template <>
struct ScalarTraits<Complex> {
  static constexpr bool exact = false;
  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex from_int(std::int64_t v) { return {static_cast<double>(v), 0.0}; }
  static bool is_zero(const Complex& z, double tol = 0.0) { return std::abs(z) <= tol; }
};

/// Best rational approximation of v with denominator ≤ max_den (continued
/// fractions).
Rational rationalize(double v, long max_den);

}  // namespace curvelim

#endif
