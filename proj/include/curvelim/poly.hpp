#ifndef CURVELIM_POLY_HPP
#define CURVELIM_POLY_HPP

#include <array>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "curvelim/matrix.hpp"

namespace curvelim {

/// Exponent tuple; entries past nvars are always zero.
using Exponent = std::array<int, 3>;

inline int degree_of(const Exponent& e) { return e[0] + e[1] + e[2]; }

/// Sparse polynomial in 1, 2 or 3 variables. Zero coefficients are never
/// stored. Bivariate polynomials use (y1, y2); trivariate ones are projective
/// in (x0, x1, x2).
template <class T>
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > 3) throw InputError("polynomials have 1, 2 or 3 variables");
  }

  static MultiPoly constant(int nvars, const T& c) {
    MultiPoly p(nvars);
    p.add_term({0, 0, 0}, c);
    return p;
  }
  static MultiPoly variable(int nvars, int k) {
    MultiPoly p(nvars);
    Exponent e{0, 0, 0};
    e.at(static_cast<std::size_t>(k)) = 1;
    p.add_term(e, ScalarTraits<T>::one());
    return p;
  }
  static MultiPoly monomial(int nvars, const Exponent& e, const T& c) {
    MultiPoly p(nvars);
    p.add_term(e, c);
    return p;
  }

  int nvars() const { return nvars_; }
  const std::map<Exponent, T>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponent& e, const T& c) {
    for (int k = nvars_; k < 3; ++k)
      if (e[static_cast<std::size_t>(k)] != 0) throw InputError("exponent exceeds variable count");
    for (int v : e)
      if (v < 0) throw InputError("negative exponent");
    if (ScalarTraits<T>::is_zero(c)) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (ScalarTraits<T>::is_zero(it->second)) terms_.erase(it);
    }
  }

  T coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ScalarTraits<T>::zero() : it->second;
  }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, degree_of(e));
    return d;
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(var)]);
    return d;
  }

  bool is_homogeneous(int d) const {
    for (const auto& [e, c] : terms_)
      if (degree_of(e) != d) return false;
    return true;
  }

  T evaluate(std::span<const T> point) const {
    if (point.size() != static_cast<std::size_t>(nvars_))
      throw InputError("evaluate: arity mismatch");
    T s = ScalarTraits<T>::zero();
    for (const auto& [e, c] : terms_) {
      T t = c;
      for (int k = 0; k < nvars_; ++k)
        for (int j = 0; j < e[static_cast<std::size_t>(k)]; ++j) t *= point[static_cast<std::size_t>(k)];
      s += t;
    }
    return s;
  }
  T evaluate(std::initializer_list<T> point) const {
    return evaluate(std::span<const T>(point.begin(), point.size()));
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const T& s) {
    if (ScalarTraits<T>::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, c] : terms_) c *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const T& s) { return a *= s; }
  friend MultiPoly operator*(const T& s, MultiPoly a) { return a *= s; }
  friend MultiPoly operator-(MultiPoly a) { return a *= -ScalarTraits<T>::one(); }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_arity(b);
    MultiPoly r(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

private:
  void check_arity(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw InputError("polynomial arity mismatch");
  }

  int nvars_ = 1;
  std::map<Exponent, T> terms_;
};

using QPoly = MultiPoly<Gauss>;
using CPoly = MultiPoly<Complex>;

inline CPoly to_complex(const QPoly& p) {
  CPoly c(p.nvars());
  for (const auto& [e, v] : p.terms()) c.add_term(e, v.to_complex());
  return c;
}
inline const CPoly& to_complex(const CPoly& p) { return p; }

template <class T>
Complex evaluate_complex(const MultiPoly<T>& p, std::span<const Complex> point) {
  if (point.size() != static_cast<std::size_t>(p.nvars())) throw InputError("evaluate: arity mismatch");
  Complex s{};
  for (const auto& [e, c] : p.terms()) {
    Complex t = to_complex(c);
    for (int k = 0; k < p.nvars(); ++k) t *= std::pow(point[static_cast<std::size_t>(k)], e[static_cast<std::size_t>(k)]);
    s += t;
  }
  return s;
}

/// |p(z)| / Σ|c_e·z^e|: the backward-error-style residual used by every
/// float vanishing test. Zero when all terms vanish.
template <class T>
double relative_residual(const MultiPoly<T>& p, std::span<const Complex> point) {
  double scale = 0.0;
  Complex s{};
  for (const auto& [e, c] : p.terms()) {
    Complex t = to_complex(c);
    for (int k = 0; k < p.nvars(); ++k) t *= std::pow(point[static_cast<std::size_t>(k)], e[static_cast<std::size_t>(k)]);
    s += t;
    scale += std::abs(t);
  }
  return scale == 0.0 ? 0.0 : std::abs(s) / scale;
}

/// y1^a y2^b ↦ x0^{n-a-b} x1^a x2^b.
template <class T>
MultiPoly<T> homogenize(const MultiPoly<T>& p, int n) {
  if (p.nvars() != 2) throw InputError("homogenize expects a bivariate polynomial");
  if (p.total_degree() > n)
    throw InputError("homogenize: degree " + std::to_string(p.total_degree()) + " exceeds " +
                     std::to_string(n));
  MultiPoly<T> h(3);
  for (const auto& [e, c] : p.terms()) h.add_term({n - e[0] - e[1], e[0], e[1]}, c);
  return h;
}

/// Sets x0 = 1.
template <class T>
MultiPoly<T> dehomogenize(const MultiPoly<T>& p) {
  if (p.nvars() != 3) throw InputError("dehomogenize expects a trivariate polynomial");
  MultiPoly<T> d(2);
  for (const auto& [e, c] : p.terms()) d.add_term({e[1], e[2], 0}, c);
  return d;
}

/// p(x) with x = t·u, t a 3x3 matrix: returns the polynomial in u.
template <class T>
MultiPoly<T> substitute_linear(const MultiPoly<T>& p, const Matrix<T>& t) {
  if (p.nvars() != 3 || t.rows() != 3 || t.cols() != 3)
    throw InputError("substitute_linear expects trivariate polynomial and 3x3 matrix");
  std::array<MultiPoly<T>, 3> lin{MultiPoly<T>(3), MultiPoly<T>(3), MultiPoly<T>(3)};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[static_cast<std::size_t>(j)] = 1;
      lin[static_cast<std::size_t>(i)].add_term(e, t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
    }
  MultiPoly<T> out(3);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly<T> term = MultiPoly<T>::constant(3, c);
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < e[static_cast<std::size_t>(k)]; ++j) term = term * lin[static_cast<std::size_t>(k)];
    out += term;
  }
  return out;
}

/// p(A1, A2) for a bivariate p and commuting square matrices.
template <class T>
Matrix<T> evaluate_on_matrices(const MultiPoly<T>& p, const Matrix<T>& a1, const Matrix<T>& a2) {
  if (p.nvars() != 2) throw InputError("evaluate_on_matrices expects a bivariate polynomial");
  const std::size_t n = a1.rows();
  Matrix<T> out(n, n);
  std::vector<Matrix<T>> pow1{Matrix<T>::identity(n)}, pow2{Matrix<T>::identity(n)};
  for (const auto& [e, c] : p.terms()) {
    while (static_cast<int>(pow1.size()) <= e[0]) pow1.push_back(pow1.back() * a1);
    while (static_cast<int>(pow2.size()) <= e[1]) pow2.push_back(pow2.back() * a2);
    out += (pow1[static_cast<std::size_t>(e[0])] * pow2[static_cast<std::size_t>(e[1])]) * c;
  }
  return out;
}

/// Partial derivative with respect to variable `var`.
template <class T>
MultiPoly<T> derivative(const MultiPoly<T>& p, int var) {
  MultiPoly<T> d(p.nvars());
  const auto v = static_cast<std::size_t>(var);
  for (const auto& [e, c] : p.terms()) {
    if (e[v] == 0) continue;
    Exponent f = e;
    --f[v];
    d.add_term(f, c * ScalarTraits<T>::from_int(e[v]));
  }
  return d;
}

/// Dense coefficient vector (index = power) of a univariate polynomial.
template <class T>
std::vector<T> dense_coefficients(const MultiPoly<T>& p) {
  if (p.nvars() != 1) throw InputError("expected a univariate polynomial");
  std::vector<T> c(static_cast<std::size_t>(std::max(p.total_degree(), 0) + 1), ScalarTraits<T>::zero());
  for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e[0])] = v;
  return c;
}

template <class T>
MultiPoly<T> from_dense(std::span<const T> coeffs) {
  MultiPoly<T> p(1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term({static_cast<int>(k), 0, 0}, coeffs[k]);
  return p;
}

/// Human-readable form, e.g. "x0^2 - x1*x2"; used in reports and test output.
std::string to_string(const QPoly& p);

/// Monomials of degree d in (x0, x1, x2), graded-lex with x0 > x1 > x2.
class MonomialIndex {
public:
  explicit MonomialIndex(int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return list_.size(); }
  const Exponent& at(std::size_t pos) const { return list_.at(pos); }
  const std::vector<Exponent>& list() const { return list_; }

  /// Inverse of at(); throws InputError for a triple of the wrong degree.
  std::size_t position(const Exponent& e) const;

  /// (d+1)(d+2)/2.
  static std::size_t count(int degree) {
    return degree < 0 ? 0 : static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
  }

private:
  int degree_;
  std::vector<Exponent> list_;
};

}  // namespace curvelim

#endif
