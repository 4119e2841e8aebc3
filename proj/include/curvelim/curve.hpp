#ifndef CURVELIM_CURVE_HPP
#define CURVELIM_CURVE_HPP

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "curvelim/linalg.hpp"
#include "curvelim/poly.hpp"
#include "curvelim/random.hpp"

namespace curvelim {

using QPoint = std::array<Gauss, 3>;
using CPoint = std::array<Complex, 3>;

/// Hermitian determinantal representation Δ(x) = det(x0·D0 + x1·D1 − x2·D2)
/// of a plane projective curve.
class DetRep {
public:
  DetRep() = default;
  /// Throws InputError unless the D's are hermitian, m x m with m ≥ 1, and Δ ≢ 0.
  DetRep(QMatrix d0, QMatrix d1, QMatrix d2);
  /// Same data without the m ≥ 1 and Δ ≢ 0 requirements (degenerate vessels).
  static DetRep unchecked(QMatrix d0, QMatrix d1, QMatrix d2);

  std::size_t size() const { return d_[0].rows(); }
  const QMatrix& d(int k) const { return d_.at(static_cast<std::size_t>(k)); }
  const QPoly& delta() const { return delta_; }
  bool real_symmetric() const;

  QMatrix pencil(const QPoint& x) const;
  CMatrix pencil(const CPoint& x) const;

private:
  std::array<QMatrix, 3> d_;
  QPoly delta_;
};

/// D0 = I, D1 = diag(1, −1), D2 = antidiag(1, 1): Δ = x0² − x1² − x2².
DetRep conic_detrep();

/// A point of the curve with a basis of ker M(x). Exact data is present when
/// the point has Gaussian-rational coordinates.
struct CurvePoint {
  CPoint x{};
  CMatrix kernel;
  int multiplicity = 1;
  std::optional<QPoint> exact;
  QMatrix exact_kernel;

  bool is_exact() const { return exact.has_value(); }
};

/// Builds the exact point; throws InputError when Δ(x) ≠ 0. Kernel vectors are
/// scaled to primitive Gaussian-integer form.
CurvePoint exact_curve_point(const DetRep& rep, const QPoint& x);

/// Float point: kernel from a rank cut capped at m − 1. Coordinates that
/// rationalize onto the curve exactly are promoted.
CurvePoint locate_curve_point(const DetRep& rep, const CPoint& x, double tol = kDefaultTol);

/// Column vector (x^i e), i over the degree-k monomials in graded-lex order.
template <class T>
Matrix<T> vandermonde_vector(const std::array<T, 3>& x, std::span<const T> e, int k) {
  const MonomialIndex idx(k);
  const std::size_t m = e.size();
  Matrix<T> v(idx.size() * m, 1);
  for (std::size_t b = 0; b < idx.size(); ++b) {
    const auto& ex = idx.at(b);
    T w = ScalarTraits<T>::one();
    for (std::size_t c = 0; c < 3; ++c)
      for (int j = 0; j < ex[c]; ++j) w = w * x[c];
    for (std::size_t r = 0; r < m; ++r) v(b * m + r, 0) = w * e[r];
  }
  return v;
}

/// Vandermonde vectors of every kernel vector of a curve point, side by side
/// (exact when the point is exact and `exact` is requested).
QMatrix point_vandermonde(const CurvePoint& p, int k);
CMatrix point_vandermonde_c(const CurvePoint& p, int k);

/// Blown-up space W_n = C^N ⊗ C^m, N = n(n+1)/2, block index = degree-(n−1)
/// monomial. V_n is the kernel of the shift constraints
/// D0·w_{j+e0} + D1·w_{j+e1} − D2·w_{j+e2} = 0, |j| = n − 2.
struct PrincipalSubspace {
  int n = 0;
  std::size_t m = 0;
  QMatrix constraints;
  QSubspace space;

  std::size_t expected_dim() const { return static_cast<std::size_t>(n) * m; }
  std::size_t blocks() const { return MonomialIndex::count(n - 1); }
};

PrincipalSubspace principal_subspace(const DetRep& rep, int n);

/// Points of the curve on the line through (0, x1, x2) and (1, 0, 0): roots
/// of det(x0·D0 + x1·D1 − x2·D2) in x0. Rational roots are exact.
std::vector<CurvePoint> pencil_points(const DetRep& rep, const Gauss& x1, const Gauss& x2,
                                      double tol = kDefaultTol);

struct PrescribedPoint {
  QPoint x;
  std::vector<Gauss> e;
};

/// Hermitian (optionally real symmetric) D's of size m with M(x)e = 0 at every
/// prescribed pair: a random rational element of the solution space, resampled
/// up to 20 times while Δ ≡ 0 or the curve is singular at a prescribed point.
DetRep detrep_through_points(std::span<const PrescribedPoint> pts, std::size_t m, Rng& rng,
                             bool real_symmetric = true);

/// Symmetric β_ij (|i| = |j| = n − 1) with
/// p(x)q(y) − q(x)p(y) = Σ x^i [β10 g10 + β20 g20 + β12 g12] y^j,
/// g10 = x1y0 − x0y1, g20 = x2y0 − x0y2, g12 = x1y2 − x2y1.
/// The returned solution is linear in (p, q), hence antisymmetric.
struct BetaTriple {
  int n = 0;
  QMatrix b10, b20, b12;
};

BetaTriple bezout_decomposition(const QPoly& p, const QPoly& q, int n);

/// Exact expansion of both sides of the decomposition as polynomials in
/// (x0, x1, x2, y0, y1, y2).
bool verify_bezout_identity(const QPoly& p, const QPoly& q, const BetaTriple& beta);

/// How the β's are paired with the D's in the blown-up matrix.
enum class BetaPairing {
  Validated,  // β12⊗D0 + β20⊗D1 + β10⊗D2
  Printed,    // β12⊗D0 + β10⊗D1 + β20⊗D2
};

struct GeneralizedBezout {
  int n = 0;
  BetaTriple beta;
  QMatrix blown;       // on W_n
  QMatrix restricted;  // Cᴴ·blown·C in the basis C of V_n
};

GeneralizedBezout curve_bezout(const QPoly& p, const QPoly& q, const DetRep& rep, int n,
                               const PrincipalSubspace& vn,
                               BetaPairing pairing = BetaPairing::Validated);
GeneralizedBezout curve_bezout(const QPoly& p, const QPoly& q, const DetRep& rep, int n,
                               BetaPairing pairing = BetaPairing::Validated);

/// dim ker of the restricted Bezoutian: the number of common zeros of p and q
/// on the curve, counted with multiplicity.
std::size_t curve_common_zero_count(const QPoly& p, const QPoly& q, const DetRep& rep, int n);

/// Compares V(y,h)ᴴ·B·V(x,e) against p(x)q(ȳ) − q(x)p(ȳ) on sampled curve
/// points. With a_k = hᴴD_k e the pairing equals c·(p(x)q(ȳ) − q(x)p(ȳ)),
/// where (a0, a1, −a2) = c·(x × ȳ); `identity_residual` measures that
/// cross-multiplied relation.
struct BilinearSample {
  CPoint x, y;
  Complex lhs, rhs;
  bool lhs_zero = false, rhs_zero = false;
  double identity_residual = 0.0;
};

struct BilinearReport {
  std::vector<BilinearSample> samples;
  std::size_t skipped = 0;  // pairs with hᴴD_k e ≈ 0 for all k
  std::size_t vanishing_mismatches = 0;
  double max_identity_residual = 0.0;
  bool ok(double tol) const { return vanishing_mismatches == 0 && max_identity_residual <= tol; }
};

BilinearReport bilinear_vanishing_check(const QPoly& p, const QPoly& q, const DetRep& rep, int n,
                                        std::size_t samples, Rng& rng,
                                        BetaPairing pairing = BetaPairing::Validated,
                                        double tol = 1e-8);

/// Intersection points of the curve with f = 0 (f homogeneous, not divisible
/// by Δ), with intersection multiplicity. Computed by a random rational
/// projective change of coordinates, an exact resultant, float roots and a
/// two-variable Newton polish; rational points are promoted to exact ones.
std::vector<CurvePoint> curve_intersections(const DetRep& rep, const QPoly& f, Rng& rng,
                                            double tol = kDefaultTol);

/// Common zeros of P0, P1, P2 on the curve and the subspace V̄_n ⊂ V_n
/// orthogonal to their Vandermonde vectors.
struct BasepointReduction {
  PrincipalSubspace vn;
  std::vector<CurvePoint> basepoints;
  std::size_t removed = 0;  // number of Vandermonde vectors removed
  bool exact = false;
  QSubspace vbar;   // valid when exact
  CSubspace vbar_c;  // always valid
};

BasepointReduction basepoint_reduce(const QPoly& p0, const QPoly& p1, const QPoly& p2,
                                    const DetRep& rep, int n, Rng& rng, double tol = kDefaultTol);

/// Determinantal representation det(x0·B̄(P1,P2) + x1·B̄(P2,P0) − x2·B̄(P1,P0))
/// of the image curve, the B̄ being compressions of the blown-up Bezoutians
/// to V̄_n.
struct ImageDetRep {
  BasepointReduction reduction;
  QMatrix b12, b20, b10;  // on W_n
  bool exact = false;
  std::optional<std::array<QMatrix, 3>> compressed;  // (B̄12, B̄20, −B̄10)
  std::array<CMatrix, 3> compressed_c;
  std::optional<QPoly> poly;  // exact image polynomial
  CPoly poly_c;
  bool degenerate = false;
};

ImageDetRep image_detrep(const QPoly& p0, const QPoly& p1, const QPoly& p2, const DetRep& rep,
                         int n, Rng& rng, double tol = kDefaultTol);

struct ImageVanishingSample {
  CPoint x;
  bool exact = false;
  double residual = 0.0;
};

struct ImageVanishing {
  std::vector<ImageVanishingSample> samples;
  std::size_t skipped = 0;  // points mapped to (0, 0, 0)
  double max_residual = 0.0;
  bool ok = false;
};

/// Evaluates the image polynomial at (P0(x) : P1(x) : P2(x)) for curve points x
/// found on random rational pencils: exact zero at exact points, relative
/// residual < tol otherwise.
ImageVanishing image_vanishing_check(const ImageDetRep& img, const QPoly& p0, const QPoly& p1, const QPoly& p2,
                                     const DetRep& rep, std::size_t samples, Rng& rng, double tol = 1e-8);

/// Gaussian-integer rescaling of a vector with content 1 whose first nonzero
/// entry has positive real part (or zero real and positive imaginary part).
std::vector<Gauss> primitive_form(std::span<const Gauss> v);

}  // namespace curvelim

#endif
