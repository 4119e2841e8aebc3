#ifndef CURVELIM_PENCIL_HPP
#define CURVELIM_PENCIL_HPP

#include <optional>
#include <span>
#include <vector>

#include "curvelim/linalg.hpp"
#include "curvelim/poly.hpp"

namespace curvelim {

/// Dense monomial coefficients of the unique polynomial of degree < nodes.size()
/// through (nodes[k], values[k]); Newton divided differences.
template <class T>
std::vector<T> interpolate(std::span<const T> nodes, std::span<const T> values) {
  const std::size_t n = nodes.size();
  std::vector<T> dd(values.begin(), values.end());
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j]);
      if (i == j) break;
    }
  // Horner expansion of the Newton form.
  std::vector<T> c(n, ScalarTraits<T>::zero());
  for (std::size_t k = n; k-- > 0;) {
    // c ← c·(x − nodes[k]) + dd[k]
    for (std::size_t i = n - 1; i >= 1; --i) {
      c[i] = c[i - 1] - nodes[k] * c[i];
    }
    c[0] = -nodes[k] * c[0];
    c[0] += dd[k];
  }
  return c;
}

/// Interpolation nodes: 0, 1, ..., count-1 on the exact path; points on the
/// unit circle on the float path.
template <class T>
std::vector<T> interpolation_nodes(std::size_t count) {
  std::vector<T> nodes;
  nodes.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if constexpr (ScalarTraits<T>::exact)
      nodes.push_back(ScalarTraits<T>::from_int(static_cast<std::int64_t>(k)));
    else
      nodes.push_back(std::polar(1.0, 2.0 * 3.14159265358979323846 * static_cast<double>(k) /
                                          static_cast<double>(count)));
  }
  return nodes;
}

/// det(x0·D0 + x1·D1 − x2·D2) as a polynomial in x0 for fixed (x1, x2), exact:
/// evaluated at m+1 rational nodes and interpolated.
QPoly pencil_det_poly(const QMatrix& d0, const QMatrix& d1, const QMatrix& d2, const Gauss& x1,
                      const Gauss& x2);

/// det(x0·A0 + x1·A1 + x2·A2) as a homogeneous trivariate polynomial of degree
/// equal to the matrix size (or zero), by tensor-grid interpolation of the
/// dehomogenized determinant.
template <class T>
MultiPoly<T> homogeneous_det_poly(const Matrix<T>& a0, const Matrix<T>& a1, const Matrix<T>& a2) {
  const std::size_t d = a0.rows();
  if (!a0.is_square() || a1.rows() != d || a2.rows() != d || !a1.is_square() || !a2.is_square())
    throw InputError("homogeneous_det_poly: pencil matrices must be square and equal-sized");
  const auto nodes = interpolation_nodes<T>(d + 1);
  // grid[j][k]: coefficient of x1^k at x2 = nodes[j].
  std::vector<std::vector<T>> grid(d + 1);
  for (std::size_t j = 0; j <= d; ++j) {
    std::vector<T> vals(d + 1);
    for (std::size_t i = 0; i <= d; ++i) vals[i] = determinant(a0 + a1 * nodes[i] + a2 * nodes[j]);
    grid[j] = interpolate<T>(nodes, vals);
  }
  MultiPoly<T> out(3);
  const int di = static_cast<int>(d);
  for (std::size_t k = 0; k <= d; ++k) {
    std::vector<T> vals(d + 1);
    for (std::size_t j = 0; j <= d; ++j) vals[j] = grid[j][k];
    const auto c = interpolate<T>(nodes, vals);
    for (std::size_t l = 0; l + k <= d; ++l)
      out.add_term({di - static_cast<int>(k + l), static_cast<int>(k), static_cast<int>(l)}, c[l]);
  }
  return out;
}

struct RootCluster {
  Complex value;
  int multiplicity = 1;
};

struct RootResult {
  std::vector<Complex> roots;          // one per degree, with repetition
  std::vector<RootCluster> clusters;   // grouped at distance 10·tol (relative)
  double max_residual = 0.0;           // max relative residual over roots
  int iterations = 0;
};

/// All complex roots of Σ coeffs[k]·x^k by Aberth–Ehrlich simultaneous
/// iteration with a final Newton polish. Residuals are relative:
/// |p(r)| / Σ|c_k||r|^k < tol. Throws ConvergenceError carrying the best
/// iterate after the iteration cap.
RootResult poly_roots(std::span<const Complex> coeffs, double tol = kDefaultTol);
RootResult poly_roots(const QPoly& p, double tol = kDefaultTol);

/// Rational (Gaussian) reconstruction of z with denominators ≤ max_den;
/// parts below 1e-12·max(1,|z|) snap to zero.
Gauss rationalize_complex(Complex z, long max_den = 1000000);

/// Exact roots among the float roots of p: each root is rationalized and kept
/// only if p vanishes there exactly.
std::vector<std::optional<Gauss>> promote_roots(const QPoly& p, std::span<const Complex> roots);

}  // namespace curvelim

#endif
