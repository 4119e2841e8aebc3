#include "curvelim/vessel.hpp"

#include <algorithm>
#include <cmath>

namespace curvelim {

namespace {

const Gauss kI = Gauss::i();

QMatrix imag_part_op(const QMatrix& a) { return (a - a.adjoint()) * (-kI); }

/// Canonical basis of the column space: transposed nonzero rows of rref(Mᵀ).
QMatrix echelon_column_basis(const QMatrix& m) {
  const Echelon e = rref(m.transpose());
  QMatrix y(m.rows(), e.pivots.size());
  for (std::size_t j = 0; j < e.pivots.size(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) y(i, j) = e.reduced(j, i);
  return y;
}

QMatrix evaluate_at(const QPoly& p, const QMatrix& a1, const QMatrix& a2) { return evaluate_on_matrices(p, a1, a2); }

bool real_coefficients(const QPoly& p) {
  for (const auto& [e, c] : p.terms())
    if (!c.is_real()) return false;
  return true;
}

template <class T>
Matrix<T> pencil_at(const BasicVessel<T>& v, const std::array<T, 3>& w, bool out) {
  return (out ? v.gamma_out : v.gamma_in) * w[0] + v.sigma2 * w[1] - v.sigma1 * w[2];
}

QPoint image_point(const std::array<QPoly, 3>& p, const QPoint& x) {
  const std::span<const Gauss> s(x);
  return {p[0].evaluate(s), p[1].evaluate(s), p[2].evaluate(s)};
}

CPoint image_point(const std::array<QPoly, 3>& p, const CPoint& x) {
  return {evaluate_complex(p[0], x), evaluate_complex(p[1], x), evaluate_complex(p[2], x)};
}

bool degenerate_curve(const DetRep& rep) { return rep.size() == 0 || rep.delta().total_degree() < 1; }

double vec_norm(const CMatrix& v) { return v.frobenius(); }

/// (BᴴB)⁻¹Bᴴ for a full-column-rank B.
template <class T>
Matrix<T> left_inverse(const Matrix<T>& b, double tol) {
  if (b.cols() == 0) return Matrix<T>(0, b.rows());
  if constexpr (ScalarTraits<T>::exact)
    return inverse(b.adjoint() * b) * b.adjoint();
  else
    return inverse(b.adjoint() * b, tol) * b.adjoint();
}

/// in_carry, out_carry and out_cokernel for coordinates C of V_n, E″ basis U,
/// Φ̃ and the out domain generators [Ψ | K]. Returns false when the E″ image
/// of Φ̃ does not vanish on relations among the domain generators.
template <class T>
bool carry_maps(const Matrix<T>& c, const Matrix<T>& u, const Matrix<T>& phi_tilde, const Matrix<T>& domain,
                double tol, Matrix<T>& in_carry, Matrix<T>& out_carry, Matrix<T>& out_cokernel) {
  const Matrix<T> uplus = left_inverse(u, tol);
  const Matrix<T> cplus = left_inverse(c, tol);
  in_carry = uplus * cplus;
  Matrix<T> images(phi_tilde.rows(), domain.cols());
  images.set_block(0, 0, phi_tilde);
  images = in_carry * images;
  RankKernel<T> rk;
  if constexpr (ScalarTraits<T>::exact)
    rk = rank_kernel(domain);
  else
    rk = rank_kernel(domain, tol);
  const Matrix<T> rel = images * rk.kernel.basis;
  const bool defined = ScalarTraits<T>::exact ? rel.is_zero() : rel.max_abs() <= 1e-8 * std::max(1.0, images.max_abs());
  const Matrix<T> f = domain.cols_subset(rk.pivots), fi = images.cols_subset(rk.pivots);
  out_carry = fi * left_inverse(f, tol);
  if constexpr (ScalarTraits<T>::exact)
    out_cokernel = rank_kernel(domain.adjoint()).kernel.basis.adjoint();
  else
    out_cokernel = rank_kernel(domain.adjoint(), tol).kernel.basis.adjoint();
  return defined;
}

}  // namespace

QVessel vessel_from_operators(const QMatrix& a1, const QMatrix& a2) {
  const std::size_t h = a1.rows();
  if (!a1.is_square() || !a2.is_square() || a2.rows() != h) throw InputError("A1, A2 must be square and of equal size");
  if (!(a1 * a2 - a2 * a1).is_zero()) throw InputError("A1 and A2 do not commute");
  const QMatrix s1 = imag_part_op(a1), s2 = imag_part_op(a2);
  const QMatrix y = echelon_column_basis(hstack(s1, s2));
  const std::size_t d = y.cols();
  QVessel v{a1, a2, y.adjoint(), QMatrix(d, d), QMatrix(d, d), QMatrix(d, d), QMatrix(d, d)};
  if (d == 0) return v;
  const QMatrix gram_inv = inverse(y.adjoint() * y);
  const QMatrix ypinv = gram_inv * y.adjoint();
  v.sigma1 = ypinv * s1 * ypinv.adjoint();
  v.sigma2 = ypinv * s2 * ypinv.adjoint();
  const QMatrix rhs = v.sigma1 * v.phi * a2.adjoint() - v.sigma2 * v.phi * a1.adjoint();
  v.gamma_in = rhs * (y * gram_inv);
  if (!(v.gamma_in * v.phi - rhs).is_zero())
    throw InputError("the gamma_in system is inconsistent: this pair admits no vessel on E");
  if (!v.gamma_in.is_hermitian()) throw InputError("the gamma_in solution is not hermitian");
  v.gamma_out = linkage_gamma_out(v.phi, v.sigma1, v.sigma2, v.gamma_in);
  if (!(v.gamma_out * v.phi - (v.sigma1 * v.phi * a2 - v.sigma2 * v.phi * a1)).is_zero())
    throw InputError("the gamma_out system is inconsistent: this pair admits no vessel on E");
  return v;
}

QVessel vessel_fixture(const FixtureSpec& spec) {
  const std::size_t h = spec.alpha.size();
  if (h == 0 || spec.phi.size() != h) throw InputError("alpha and phi must be nonempty and of equal length");
  if (spec.q.empty()) throw InputError("q needs at least one coefficient");
  QMatrix a1(h, h);
  for (std::size_t j = 0; j < h; ++j) {
    a1(j, j) = Gauss(spec.alpha[j], spec.phi[j].norm2() / 2);
    for (std::size_t k = j + 1; k < h; ++k) a1(j, k) = kI * spec.phi[j] * spec.phi[k].conj();
  }
  QMatrix a2(h, h), pw = QMatrix::identity(h);
  for (const auto& c : spec.q) {
    a2 += pw * Gauss(c);
    pw = pw * a1;
  }
  return vessel_from_operators(a1, a2);
}

QVessel random_vessel_fixture(std::size_t dim_h, std::size_t deg_q, Rng& rng, FixtureSpec* used) {
  FixtureSpec spec;
  while (spec.alpha.size() < dim_h) {
    const Rational a = random_rational(rng, -3, 3, 2);
    if (std::find(spec.alpha.begin(), spec.alpha.end(), a) == spec.alpha.end()) spec.alpha.push_back(a);
  }
  for (std::size_t j = 0; j < dim_h; ++j) spec.phi.emplace_back(random_nonzero_rational(rng, -2, 2));
  for (std::size_t k = 0; k <= deg_q; ++k)
    spec.q.push_back(k == deg_q ? random_nonzero_rational(rng, -2, 2) : random_rational(rng, -2, 2));
  if (used) *used = spec;
  return vessel_fixture(spec);
}

DetRep vessel_detrep(const QVessel& v, bool out) {
  return DetRep::unchecked(out ? v.gamma_out : v.gamma_in, v.sigma2, v.sigma1);
}

Discriminant discriminant(const QVessel& v) {
  validate_shapes(v);
  Discriminant d{discriminant_poly(v, false), discriminant_poly(v, true), false};
  d.equal = d.in == d.out;
  return d;
}

QSubspace vessel_principal_subspace(const QVessel& v) {
  const std::size_t h = v.state_dim();
  QSubspace s = column_space(v.phi.adjoint());
  s.ambient = h;
  for (std::size_t it = 0; it <= h; ++it) {
    QSubspace next = column_space(hstack(hstack(s.basis, v.a1 * s.basis), v.a2 * s.basis));
    next.ambient = h;
    if (next.dim() == s.dim()) break;
    s = std::move(next);
  }
  if (s.basis.rows() != h) s.basis = QMatrix(h, 0);
  return s;
}

CayleyHamilton cayley_hamilton_check(const QVessel& v) {
  CayleyHamilton c;
  c.principal = vessel_principal_subspace(v);
  if (c.principal.dim() == 0) {
    c.zero = true;
    return c;
  }
  const QPoly delta = discriminant_poly(v, false);
  const QMatrix r = evaluate_at(delta, v.a1, v.a2) * c.principal.basis;
  c.residual = r.max_abs();
  c.zero = r.is_zero();
  return c;
}

Fibers fibers(const QVessel& v, const Gauss& y1, const Gauss& y2) {
  validate_shapes(v);
  Fibers f;
  const std::array<Gauss, 3> w{Gauss(1), y1, y2};
  f.in = rank_kernel(pencil_at(v, w, false)).kernel;
  f.out = rank_kernel(pencil_at(v, w, true)).kernel;
  f.on_curve = discriminant_poly(v, false).evaluate({y1, y2}).is_zero();
  return f;
}

void RationalPair::validate() const {
  if (n < 1) throw InputError("rational pair: n must be at least 1");
  const std::array<const QPoly*, 3> ps{&p0, &p1, &p2};
  for (std::size_t k = 0; k < 3; ++k) {
    const QPoly& p = *ps[k];
    const std::string name = "p" + std::to_string(k);
    if (p.nvars() != 2) throw InputError(name + " must be a polynomial in y1, y2");
    if (!real_coefficients(p)) throw InputError(name + " must have real coefficients");
    if (p.total_degree() > n) throw InputError(name + " has degree above n = " + std::to_string(n));
  }
  if (p0.is_zero()) throw InputError("p0 is identically zero");
}

std::array<QPoly, 3> RationalPair::homogenized() const {
  return {homogenize(p0, n), homogenize(p1, n), homogenize(p2, n)};
}

TransformedVessel transform_vessel(const QVessel& v, const RationalPair& rp, SigmaOrder order, bool require_valid) {
  validate_shapes(v);
  rp.validate();
  TransformedVessel t;
  t.source = v;
  t.n = rp.n;
  t.rep = vessel_detrep(v);
  t.vn = principal_subspace(t.rep, rp.n);
  t.homogeneous = rp.homogenized();
  const auto& P = t.homogeneous;

  const QMatrix a1s = v.a1.adjoint(), a2s = v.a2.adjoint();
  const QMatrix p0_star = evaluate_at(rp.p0, a1s, a2s);
  if (determinant(p0_star).is_zero()) throw InputError("basepoint at operator spectrum: p0(A1*, A2*) is singular");
  const QMatrix p0_star_inv = inverse(p0_star);
  const QMatrix p0_inv = inverse(evaluate_at(rp.p0, v.a1, v.a2));

  const MonomialIndex blocks(rp.n - 1);
  const std::size_t m = v.ext_dim(), h = v.state_dim();
  t.phi_tilde = QMatrix(blocks.size() * m, h);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Exponent& e = blocks.at(b);
    t.phi_tilde.set_block(b * m, 0, v.phi * power(a1s, e[1]) * power(a2s, e[2]) * p0_star_inv);
  }
  t.psi = QMatrix(blocks.size() * m, h);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const Exponent& e = blocks.at(b);
    t.psi.set_block(b * m, 0, v.phi * power(v.a1, e[1]) * power(v.a2, e[2]) * p0_inv);
  }

  QVessel& w = t.vessel;
  w.a1 = evaluate_at(rp.p1, v.a1, v.a2) * p0_inv;
  w.a2 = evaluate_at(rp.p2, v.a1, v.a2) * p0_inv;
  const std::size_t dim = t.vn.space.dim();
  if (dim == 0) {
    w.phi = QMatrix(0, h);
  } else {
    if (!(t.vn.constraints * t.phi_tilde).is_zero())
      throw TheoremCheckError("the block column of Phi does not lie in V_n");
    w.phi = solve(t.vn.space.basis, t.phi_tilde);
  }
  auto restricted = [&](const QPoly& p, const QPoly& q) {
    return curve_bezout(p, q, t.rep, rp.n, t.vn).restricted;
  };
  if (order == SigmaOrder::Validated) {
    w.sigma1 = restricted(P[1], P[0]);
    w.sigma2 = restricted(P[2], P[0]);
  } else {
    w.sigma1 = restricted(P[0], P[1]);
    w.sigma2 = restricted(P[0], P[2]);
  }
  w.gamma_in = restricted(P[1], P[2]);
  w.gamma_out = linkage_gamma_out(w.phi, w.sigma1, w.sigma2, w.gamma_in);
  t.report = vessel_check(w);
  if (require_valid && !t.report.ok()) {
    std::string names;
    for (const auto& f : t.report.failing()) names += (names.empty() ? "" : ", ") + f;
    throw TheoremCheckError("transformed vessel violates: " + names);
  }
  return t;
}

ReducedVessel reduce_transformed(const TransformedVessel& t, Rng& rng, double tol) {
  ReducedVessel red;
  const auto& P = t.homogeneous;
  const QVessel& w = t.vessel;
  if (degenerate_curve(t.rep)) {
    red.reduction.vn = t.vn;
    red.reduction.exact = true;
    red.reduction.vbar = t.vn.space;
    red.reduction.vbar_c = {t.vn.space.ambient, to_complex(t.vn.space.basis)};
  } else {
    red.reduction = basepoint_reduce(P[0], P[1], P[2], t.rep, t.n, rng, tol);
  }
  red.exact = red.reduction.exact;
  const std::size_t dim = t.vn.space.dim();

  if (red.exact) {
    QMatrix remove(t.vn.space.ambient, 0);
    for (const auto& bp : red.reduction.basepoints) remove = hstack(remove, point_vandermonde(bp, t.n - 1));
    red.kernel_coords = remove.cols() == 0 ? QMatrix(dim, 0) : solve(t.vn.space.basis, remove);
    red.basis = red.kernel_coords.cols() == 0 ? QMatrix::identity(dim)
                                              : rank_kernel(red.kernel_coords.adjoint()).kernel.basis;
    const QMatrix& u = red.basis;
    QVessel r;
    r.a1 = w.a1;
    r.a2 = w.a2;
    if (u.cols() == 0) {
      r.phi = QMatrix(0, w.state_dim());
    } else {
      r.phi = inverse(u.adjoint() * u) * u.adjoint() * w.phi;
    }
    r.sigma1 = congruence_restrict(w.sigma1, QSubspace{dim, u});
    r.sigma2 = congruence_restrict(w.sigma2, QSubspace{dim, u});
    r.gamma_in = congruence_restrict(w.gamma_in, QSubspace{dim, u});
    r.gamma_out = linkage_gamma_out(r.phi, r.sigma1, r.sigma2, r.gamma_in);
    red.report = vessel_check(r);
    QMatrix domain = t.psi;
    for (const auto& bp : red.reduction.basepoints) {
      const QPoint& x = *bp.exact;
      const QMatrix k = rank_kernel(pencil_at(t.source, x, true)).kernel.basis;
      for (std::size_t j = 0; j < k.cols(); ++j) {
        const auto e = k.col(j);
        domain = hstack(domain, vandermonde_vector<Gauss>(x, e, t.n - 1));
      }
    }
    red.out_map_defined = carry_maps(t.vn.space.basis, u, t.phi_tilde, domain, tol, red.in_carry, red.out_carry,
                                     red.out_cokernel);
    red.in_carry_c = to_complex(red.in_carry);
    red.out_carry_c = to_complex(red.out_carry);
    red.out_cokernel_c = to_complex(red.out_cokernel);
    red.kernel_coords_c = to_complex(red.kernel_coords);
    red.basis_c = to_complex(u);
    red.vessel_c = to_complex(r);
    red.vessel = std::move(r);
  } else {
    const CSubspace vn_c{t.vn.space.ambient, to_complex(t.vn.space.basis)};
    CMatrix remove(t.vn.space.ambient, 0);
    for (const auto& bp : red.reduction.basepoints) remove = hstack(remove, point_vandermonde_c(bp, t.n - 1));
    red.kernel_coords_c = solve(vn_c.basis, remove, tol);
    red.basis_c = rank_kernel(red.kernel_coords_c.adjoint(), tol).kernel.basis;
    const CMatrix& u = red.basis_c;
    const CVessel wc = to_complex(w);
    CVessel r;
    r.a1 = wc.a1;
    r.a2 = wc.a2;
    r.phi = u.cols() == 0 ? CMatrix(0, w.state_dim()) : solve(u, wc.phi, tol);
    const CSubspace us{dim, u};
    r.sigma1 = congruence_restrict(wc.sigma1, us);
    r.sigma2 = congruence_restrict(wc.sigma2, us);
    r.gamma_in = congruence_restrict(wc.gamma_in, us);
    r.gamma_out = linkage_gamma_out(r.phi, r.sigma1, r.sigma2, r.gamma_in);
    red.report = vessel_check(r, 1e-8);
    CMatrix domain = to_complex(t.psi);
    const CVessel sc = to_complex(t.source);
    const std::size_t m = t.source.ext_dim();
    for (const auto& bp : red.reduction.basepoints) {
      const CMatrix k = rank_kernel(pencil_at(sc, bp.x, true), tol, m == 0 ? 0 : m - 1).kernel.basis;
      for (std::size_t j = 0; j < k.cols(); ++j) {
        const auto e = k.col(j);
        domain = hstack(domain, vandermonde_vector<Complex>(bp.x, e, t.n - 1));
      }
    }
    red.out_map_defined = carry_maps(vn_c.basis, u, to_complex(t.phi_tilde), domain, tol, red.in_carry_c,
                                     red.out_carry_c, red.out_cokernel_c);
    red.vessel_c = std::move(r);
  }
  return red;
}

ImageCheck discriminant_image_check(const ReducedVessel& red, const TransformedVessel& t, std::size_t samples,
                                    Rng& rng, double tol) {
  ImageCheck out;
  const std::size_t dim = red.vessel_c.ext_dim();
  out.expected_degree = t.vn.expected_dim() - red.reduction.removed;

  std::optional<QPoly> exact_poly;
  CPoly cpoly(3);
  if (red.vessel) {
    const auto& v = *red.vessel;
    exact_poly = homogeneous_det_poly<Gauss>(v.gamma_in, v.sigma2, -v.sigma1);
    cpoly = to_complex(*exact_poly);
    out.not_identically_zero = !exact_poly->is_zero();
  } else {
    const auto& v = red.vessel_c;
    cpoly = homogeneous_det_poly<Complex>(v.gamma_in, v.sigma2, -v.sigma1);
    const double s = std::max({v.gamma_in.max_abs(), v.sigma1.max_abs(), v.sigma2.max_abs(), 1e-300});
    double cmax = 0.0;
    for (const auto& [e, c] : cpoly.terms()) cmax = std::max(cmax, std::abs(c));
    out.not_identically_zero = cmax > 1e-9 * std::pow(s, static_cast<double>(dim));
  }
  out.degree = out.not_identically_zero ? dim : 0;
  out.degree_ok = out.not_identically_zero && out.degree == out.expected_degree;

  out.containment = true;
  if (degenerate_curve(t.rep) || !out.not_identically_zero) return out;
  const auto& P = t.homogeneous;
  for (int guard = 0; out.samples.size() < samples && guard < 500; ++guard) {
    const Gauss x1(random_rational(rng, -6, 6)), x2(random_rational(rng, -6, 6));
    if (x1.is_zero() && x2.is_zero()) continue;
    std::vector<CurvePoint> pts;
    try {
      pts = pencil_points(t.rep, x1, x2);
    } catch (const InputError&) {
      continue;
    }
    for (const auto& pt : pts) {
      if (out.samples.size() >= samples) break;
      ImageCheckSample s;
      s.x = pt.x;
      if (pt.is_exact() && exact_poly) {
        const QPoint img = image_point(P, *pt.exact);
        if (img[0].is_zero() && img[1].is_zero() && img[2].is_zero()) continue;
        const Gauss val = exact_poly->evaluate(std::span<const Gauss>(img));
        s.exact = true;
        s.residual = val.is_zero() ? 0.0 : relative_residual(cpoly, image_point(P, pt.x));
        if (!val.is_zero()) out.containment = false;
      } else {
        const CPoint img = image_point(P, pt.x);
        if (std::abs(img[0]) + std::abs(img[1]) + std::abs(img[2]) <= 1e-10) continue;
        s.residual = relative_residual(cpoly, img);
        if (!(s.residual < tol)) out.containment = false;
      }
      out.max_residual = std::max(out.max_residual, s.residual);
      out.samples.push_back(s);
    }
  }
  return out;
}

FiberCheck fiber_isomorphism_check(const TransformedVessel& t, const ReducedVessel& red, const CurvePoint& lambda,
                                   double tol) {
  FiberCheck fc;
  const auto& P = t.homogeneous;
  const QVessel& src = t.source;
  fc.exact = lambda.is_exact() && red.vessel.has_value();
  if (fc.exact) {
    const QPoint& x = *lambda.exact;
    if (!t.rep.delta().evaluate(std::span<const Gauss>(x)).is_zero()) {
      fc.vacuous = fc.in_ok = fc.out_ok = true;
      return fc;
    }
    const QPoint img = image_point(P, x);
    if (img[0].is_zero() && img[1].is_zero() && img[2].is_zero()) {
      fc.vacuous = fc.basepoint = fc.in_ok = fc.out_ok = true;
      return fc;
    }
    const QVessel& r = *red.vessel;
    for (int side = 0; side < 2; ++side) {
      const bool out = side == 1;
      const QMatrix kernel = rank_kernel(pencil_at(src, x, out)).kernel.basis;
      const QMatrix target = pencil_at(r, img, out);
      double worst = 0.0;
      bool ok = kernel.cols() > 0 && (!out || red.out_map_defined);
      for (std::size_t j = 0; j < kernel.cols(); ++j) {
        const auto e = kernel.col(j);
        const QMatrix vec = vandermonde_vector<Gauss>(x, e, t.n - 1);
        if (out && !(red.out_cokernel * vec).is_zero()) {
          ++fc.out_outside;
          continue;
        }
        const QMatrix z = (out ? red.out_carry : red.in_carry) * vec;
        if (z.is_zero()) {
          fc.collision = true;
          ok = false;
          continue;
        }
        const QMatrix res = target * z;
        if (!res.is_zero()) {
          ok = false;
          const double den = std::max(target.frobenius() * z.frobenius(), 1e-300);
          worst = std::max(worst, res.frobenius() / den);
        }
      }
      (out ? fc.out_residual : fc.in_residual) = worst;
      (out ? fc.out_ok : fc.in_ok) = ok;
    }
    return fc;
  }

  const CPoint& x = lambda.x;
  const CVessel sc = to_complex(src);
  if (relative_residual(t.rep.delta(), x) > 1e-6) {
    fc.vacuous = fc.in_ok = fc.out_ok = true;
    return fc;
  }
  const CPoint img = image_point(P, x);
  if (std::abs(img[0]) + std::abs(img[1]) + std::abs(img[2]) <= 1e-10 * (std::abs(x[0]) + std::abs(x[1]) + std::abs(x[2]))) {
    fc.vacuous = fc.basepoint = fc.in_ok = fc.out_ok = true;
    return fc;
  }
  const CVessel& r = red.vessel_c;
  const std::size_t m = src.ext_dim();
  for (int side = 0; side < 2; ++side) {
    const bool out = side == 1;
    const CMatrix kernel = rank_kernel(pencil_at(sc, x, out), tol, m == 0 ? 0 : m - 1).kernel.basis;
    const CMatrix target = pencil_at(r, img, out);
    double worst = 0.0;
    bool ok = kernel.cols() > 0 && (!out || red.out_map_defined);
    for (std::size_t j = 0; j < kernel.cols(); ++j) {
      const auto e = kernel.col(j);
      const CMatrix vec = vandermonde_vector<Complex>(x, e, t.n - 1);
      if (out && vec_norm(red.out_cokernel_c * vec) > 1e-6 * red.out_cokernel_c.frobenius() * vec_norm(vec)) {
        ++fc.out_outside;
        continue;
      }
      const CMatrix z = (out ? red.out_carry_c : red.in_carry_c) * vec;
      if (vec_norm(z) <= 1e-12 * vec_norm(vec)) {
        fc.collision = true;
        ok = false;
        continue;
      }
      const double res = vec_norm(target * z) / std::max(target.frobenius() * vec_norm(z), 1e-300);
      worst = std::max(worst, res);
      if (!(res <= tol)) ok = false;
    }
    (out ? fc.out_residual : fc.in_residual) = worst;
    (out ? fc.out_ok : fc.in_ok) = ok;
  }
  return fc;
}

}  // namespace curvelim
