#ifndef CURVELIM_CLASSICAL_HPP
#define CURVELIM_CLASSICAL_HPP

#include <array>

#include "curvelim/linalg.hpp"
#include "curvelim/poly.hpp"
#include "curvelim/random.hpp"

namespace curvelim {

/// Bezout matrix of two univariate polynomials treated as degree-n elements:
/// p(x)q(y) − q(x)p(y) = Σ b_ij x^i (x − y) y^j, i, j = 0..n−1.
struct BezoutMatrix {
  int n = 0;
  QMatrix entries;
  QPoly p, q;
};

BezoutMatrix bezout_matrix(const QPoly& p, const QPoly& q, int n);

/// Exact check of p(x)q(y) − q(x)p(y) = Σ b_ij x^i (x − y) y^j.
bool verify_bezout_matrix(const BezoutMatrix& b);

/// 2n x 2n Sylvester matrix with both polynomials padded to formal degree n.
QMatrix sylvester_matrix(const QPoly& p, const QPoly& q, int n);

/// det of the Sylvester matrix; n defaults to max(deg p, deg q).
Gauss sylvester_resultant(const QPoly& p, const QPoly& q, int n = -1);

/// dim ker B(p, q).
std::size_t common_zero_count_line(const QPoly& p, const QPoly& q, int n);

struct LineImage {
  BezoutMatrix b10;  // B(p1, p0)
  BezoutMatrix b20;  // B(p2, p0)
  BezoutMatrix b12;  // B(p1, p2)
  QPoly poly;        // det(y1·B(p2,p0) − y2·B(p1,p0) + B(p1,p2)), bivariate
  bool degenerate = false;  // determinant identically zero
};

/// Determinantal representation of the image of the line under
/// t ↦ (p1(t)/p0(t), p2(t)/p0(t)).
LineImage line_image_detrep(const QPoly& p0, const QPoly& p1, const QPoly& p2, int n);

/// Univariate polynomial of exact degree `degree`, integer coefficients in
/// [−range, range].
QPoly random_univariate(Rng& rng, int degree, long range = 5);

/// p = g·u, q = g·v with deg p = deg q = degree, deg g = gcd_degree and
/// coprime u, v, so deg gcd(p, q) = gcd_degree.
struct PlantedPair {
  QPoly p, q, g;
};

PlantedPair planted_gcd_pair(Rng& rng, int degree, int gcd_degree);

}  // namespace curvelim

#endif
