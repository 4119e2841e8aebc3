#ifndef CURVELIM_VESSEL_HPP
#define CURVELIM_VESSEL_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "curvelim/curve.hpp"
#include "curvelim/pencil.hpp"

namespace curvelim {

/// Two-operator commutative vessel: A1, A2 on H = C^dimH, Φ: H → E = C^dimE,
/// hermitian σ1, σ2, γin, γout on E.
template <class T>
struct BasicVessel {
  Matrix<T> a1, a2, phi, sigma1, sigma2, gamma_in, gamma_out;

  std::size_t state_dim() const { return a1.rows(); }
  std::size_t ext_dim() const { return sigma1.rows(); }
};

using QVessel = BasicVessel<Gauss>;
using CVessel = BasicVessel<Complex>;

inline CVessel to_complex(const QVessel& v) {
  return {to_complex(v.a1),     to_complex(v.a2),       to_complex(v.phi),      to_complex(v.sigma1),
          to_complex(v.sigma2), to_complex(v.gamma_in), to_complex(v.gamma_out)};
}

template <class T>
T imaginary_unit() {
  if constexpr (ScalarTraits<T>::exact)
    return Gauss::i();
  else
    return Complex(0.0, 1.0);
}

/// Throws InputError on inconsistent shapes.
template <class T>
void validate_shapes(const BasicVessel<T>& v) {
  const std::size_t h = v.a1.rows(), e = v.sigma1.rows();
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw InputError("vessel: " + what);
  };
  need(v.a1.is_square() && v.a2.rows() == h && v.a2.cols() == h, "A1, A2 must be dimH x dimH");
  need(v.phi.rows() == e && v.phi.cols() == h, "Phi must be dimE x dimH, got " + v.phi.shape());
  for (const auto* m : {&v.sigma1, &v.sigma2, &v.gamma_in, &v.gamma_out})
    need(m->rows() == e && m->cols() == e, "sigma and gamma matrices must be dimE x dimE");
}

struct AxiomResidual {
  std::string name;
  double value = 0.0;  // max entry magnitude of the residual, relative on the float path
  bool holds = false;  // exact zero on the exact path, value ≤ tol otherwise
};

struct VesselReport {
  std::array<AxiomResidual, 5> axioms;
  bool hermitian = false;  // σ1, σ2, γin, γout hermitian
  bool exact = false;

  bool ok() const {
    if (!hermitian) return false;
    for (const auto& a : axioms)
      if (!a.holds) return false;
    return true;
  }
  std::vector<std::string> failing() const {
    std::vector<std::string> out;
    for (const auto& a : axioms)
      if (!a.holds) out.push_back(a.name);
    if (!hermitian) out.push_back("hermitian");
    return out;
  }
};

/// The five axioms: commutativity, sigma_coupling (both i), gamma_in,
/// gamma_out, linkage.
template <class T>
VesselReport vessel_check(const BasicVessel<T>& v, double tol = kDefaultTol) {
  validate_shapes(v);
  const T iu = imaginary_unit<T>();
  const Matrix<T> a1s = v.a1.adjoint(), a2s = v.a2.adjoint(), phis = v.phi.adjoint();
  VesselReport r;
  r.exact = ScalarTraits<T>::exact;
  auto assess = [&](const char* name, const Matrix<T>& lhs, const Matrix<T>& rhs) {
    const Matrix<T> d = lhs - rhs;
    AxiomResidual a{name, d.max_abs(), false};
    if constexpr (ScalarTraits<T>::exact) {
      a.holds = d.is_zero();
    } else {
      a.value /= std::max({1.0, lhs.max_abs(), rhs.max_abs()});
      a.holds = a.value <= tol;
    }
    return a;
  };
  r.axioms[0] = assess("commutativity", v.a1 * v.a2, v.a2 * v.a1);
  // (A − A*)/i = −i(A − A*).
  const auto s1 = assess("sigma_coupling", phis * v.sigma1 * v.phi, (v.a1 - a1s) * (-iu));
  const auto s2 = assess("sigma_coupling", phis * v.sigma2 * v.phi, (v.a2 - a2s) * (-iu));
  r.axioms[1] = s1.value >= s2.value ? s1 : s2;
  r.axioms[1].holds = s1.holds && s2.holds;
  r.axioms[2] = assess("gamma_in", v.gamma_in * v.phi, v.sigma1 * v.phi * a2s - v.sigma2 * v.phi * a1s);
  r.axioms[3] = assess("gamma_out", v.gamma_out * v.phi, v.sigma1 * v.phi * v.a2 - v.sigma2 * v.phi * v.a1);
  const Matrix<T> pp = v.phi * phis;
  r.axioms[4] = assess("linkage", v.gamma_out,
                       v.gamma_in + (v.sigma1 * pp * v.sigma2 - v.sigma2 * pp * v.sigma1) * iu);
  r.hermitian = v.sigma1.is_hermitian(tol) && v.sigma2.is_hermitian(tol) && v.gamma_in.is_hermitian(tol) &&
                v.gamma_out.is_hermitian(tol);
  return r;
}

/// γout from the linkage axiom.
template <class T>
Matrix<T> linkage_gamma_out(const Matrix<T>& phi, const Matrix<T>& s1, const Matrix<T>& s2, const Matrix<T>& gin) {
  const T iu = imaginary_unit<T>();
  const Matrix<T> pp = phi * phi.adjoint();
  return gin + (s1 * pp * s2 - s2 * pp * s1) * iu;
}

/// Vessel on E = joint nonhermitian subspace range[(A1−A1*)/i, (A2−A2*)/i]
/// with Φ = Yᴴ for the canonical (echelon) basis Y of E; σ's solved from
/// Φ*σΦ = (A−A*)/i, γin from its linear axiom, γout from the linkage axiom.
/// Throws InputError when A1, A2 do not commute or a linear system is
/// inconsistent (the pair admits no vessel on this E). Selfadjoint pairs give
/// the zero vessel with dim E = 0.
QVessel vessel_from_operators(const QMatrix& a1, const QMatrix& a2);

/// Commuting upper-triangular pair with low-rank imaginary parts:
/// A1 = diag(alpha) + i·K, K_jk = φ_j·conj(φ_k) (j < k), K_jj = |φ_j|²/2, so
/// (A1 − A1*)/i = φφ*; A2 = Σ q_k A1^k with real q. The joint spectrum lies on
/// y2 = q(y1) and dim E ≤ deg q.
struct FixtureSpec {
  std::vector<Rational> alpha;
  std::vector<Gauss> phi;
  std::vector<Rational> q;
};

QVessel vessel_fixture(const FixtureSpec& spec);

/// Random fixture of the above form with distinct real parts and nonzero φ.
QVessel random_vessel_fixture(std::size_t dim_h, std::size_t deg_q, Rng& rng, FixtureSpec* used = nullptr);

/// The curve-side representation with D0 = γ, D1 = σ2, D2 = σ1 (γ = γin or γout).
DetRep vessel_detrep(const QVessel& v, bool out = false);

struct Discriminant {
  QPoly in, out;  // bivariate in (y1, y2)
  bool equal = false;
};

/// det(y1σ2 − y2σ1 + γ) for γin and γout.
Discriminant discriminant(const QVessel& v);

template <class T>
MultiPoly<T> discriminant_poly(const BasicVessel<T>& v, bool out = false) {
  return dehomogenize(homogeneous_det_poly<T>(out ? v.gamma_out : v.gamma_in, v.sigma2, -v.sigma1));
}

/// span{A1^a A2^b Φ*ξ : a + b ≤ dimH}.
QSubspace vessel_principal_subspace(const QVessel& v);

struct CayleyHamilton {
  QSubspace principal;
  double residual = 0.0;
  bool zero = false;
};

/// Δ(A1, A2) restricted to the vessel principal subspace (Δ from γin).
CayleyHamilton cayley_hamilton_check(const QVessel& v);

struct Fibers {
  QSubspace in, out;
  bool on_curve = false;
};

Fibers fibers(const QVessel& v, const Gauss& y1, const Gauss& y2);

/// r1 = p1/p0, r2 = p2/p0 with bivariate real numerators, homogenized to
/// degree n.
struct RationalPair {
  QPoly p0, p1, p2;
  int n = 0;

  /// Throws InputError for non-bivariate or non-real input, or degree > n.
  void validate() const;
  std::array<QPoly, 3> homogenized() const;
};

/// Orientation of σ′.
enum class SigmaOrder {
  Validated,  // σ′i = B′(Pi, P0)
  Printed,    // σ′i = B′(P0, Pi)
};

struct TransformedVessel {
  QVessel source;
  QVessel vessel;  // V′ on E′ = coordinates of V_n
  DetRep rep;
  PrincipalSubspace vn;
  QMatrix phi_tilde;  // block column Φ·A*^i·p0(A*)⁻¹ on W_n
  QMatrix psi;        // block column Φ·A^i·p0(A)⁻¹, lies in V_n of the out pencil
  std::array<QPoly, 3> homogeneous;
  int n = 0;
  VesselReport report;
};

/// V → V′. Throws InputError "basepoint at operator spectrum" when p0(A*) is
/// singular and TheoremCheckError when V′ fails an axiom.
TransformedVessel transform_vessel(const QVessel& v, const RationalPair& rp,
                                   SigmaOrder order = SigmaOrder::Validated, bool require_valid = true);

struct ReducedVessel {
  BasepointReduction reduction;
  bool exact = false;
  std::optional<QVessel> vessel;  // exact V″
  CVessel vessel_c;               // always filled
  QMatrix kernel_coords;          // basepoint vectors in E′ coordinates (exact path)
  CMatrix kernel_coords_c;
  QMatrix basis;                  // E″ basis U in E′ coordinates (exact path)
  CMatrix basis_c;
  // W_n → E″: coordinates in V_n followed by U⁺.
  QMatrix in_carry;
  CMatrix in_carry_c;
  // Out side: Ψh + (out basepoint vectors)·c ↦ U⁺·coords(Φ̃h). Defined on the
  // span of Ψ and those vectors; out_cokernel annihilates exactly that span.
  bool out_map_defined = false;
  QMatrix out_carry, out_cokernel;
  CMatrix out_carry_c, out_cokernel_c;
  VesselReport report;
  bool empty() const { return vessel_c.ext_dim() == 0; }
};

/// V′ → V″ on E″ = orthogonal complement in E′ of the basepoint Vandermonde
/// coordinates: σ″ = Uᴴσ′U, γ″in = Uᴴγ′inU, Φ″ = U⁺Φ′, γ″out by linkage.
ReducedVessel reduce_transformed(const TransformedVessel& t, Rng& rng, double tol = kDefaultTol);

struct ImageCheckSample {
  CPoint x;
  bool exact = false;
  double residual = 0.0;
};

struct ImageCheck {
  std::vector<ImageCheckSample> samples;
  double max_residual = 0.0;
  bool containment = false;
  bool not_identically_zero = false;
  std::size_t degree = 0;
  std::size_t expected_degree = 0;
  bool degree_ok = false;
  bool ok() const { return containment && not_identically_zero && degree_ok; }
};

/// Δ″(r(λ)) = 0 on sampled λ on the original discriminant curve, and
/// deg Δ″ = nm − #basepoint vectors.
ImageCheck discriminant_image_check(const ReducedVessel& red, const TransformedVessel& t, std::size_t samples,
                                    Rng& rng, double tol = 1e-8);

struct FiberCheck {
  bool exact = false;
  bool vacuous = false;            // λ off the curve or a basepoint
  bool basepoint = false;          // P0, P1, P2 all vanish at λ
  bool collision = false;          // carried vector is zero at a regular point
  double in_residual = 0.0;
  bool in_ok = false;
  double out_residual = 0.0;
  bool out_ok = false;
  std::size_t out_outside = 0;  // out vectors outside the domain of the out map
};

/// The vector (λ^i e), |i| ≤ n − 1, for e in Ein(λ) (resp. Eout(λ)),
/// carried to E″ by in_carry (resp. out_carry) and tested against the in
/// (resp. out) pencil of V″ at r(λ). Out vectors outside the domain of the out
/// map are counted in out_outside and do not affect out_ok.
FiberCheck fiber_isomorphism_check(const TransformedVessel& t, const ReducedVessel& red, const CurvePoint& lambda,
                                   double tol = 1e-8);

}  // namespace curvelim

#endif
