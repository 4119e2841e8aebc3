#include "curvelim/curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <limits>
#include <utility>

#include "curvelim/pencil.hpp"

namespace curvelim {

namespace {

void require_homogeneous(const QPoly& p, int n, const char* name) {
  if (p.nvars() != 3) throw InputError(std::string(name) + " must be a polynomial in x0, x1, x2");
  if (!p.is_homogeneous(n))
    throw InputError(std::string(name) + " must be homogeneous of degree " + std::to_string(n));
}

CPoint to_cpoint(const QPoint& x) { return {x[0].to_complex(), x[1].to_complex(), x[2].to_complex()}; }

/// Divides by the coordinate of largest modulus.
CPoint normalized(const CPoint& x) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(x[i]) > std::abs(x[k])) k = i;
  const Complex s = x[k];
  return {x[0] / s, x[1] / s, x[2] / s};
}

double norm2(const CPoint& x) {
  return std::sqrt(std::norm(x[0]) + std::norm(x[1]) + std::norm(x[2]));
}

CPoint cross(const CPoint& a, const CPoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Matrix<Gauss> kron(const QMatrix& a, const QMatrix& b) {
  QMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      k.set_block(i * b.rows(), j * b.cols(), b * a(i, j));
    }
  return k;
}

Exponent add(const Exponent& a, const Exponent& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

struct GeneratorTerm {
  int sign;
  Exponent x, y;
};

// g10 = x1y0 − x0y1, g20 = x2y0 − x0y2, g12 = x1y2 − x2y1.
const std::array<std::array<GeneratorTerm, 2>, 3>& generators() {
  static const std::array<std::array<GeneratorTerm, 2>, 3> g{{
      {{{1, {0, 1, 0}, {1, 0, 0}}, {-1, {1, 0, 0}, {0, 1, 0}}}},
      {{{1, {0, 0, 1}, {1, 0, 0}}, {-1, {1, 0, 0}, {0, 0, 1}}}},
      {{{1, {0, 1, 0}, {0, 0, 1}}, {-1, {0, 0, 1}, {0, 1, 0}}}},
  }};
  return g;
}

QMatrix blown_bezout(const BetaTriple& beta, const DetRep& rep, BetaPairing pairing) {
  QMatrix b = kron(beta.b12, rep.d(0));
  if (pairing == BetaPairing::Validated) {
    b += kron(beta.b20, rep.d(1));
    b += kron(beta.b10, rep.d(2));
  } else {
    b += kron(beta.b10, rep.d(1));
    b += kron(beta.b20, rep.d(2));
  }
  return b;
}

/// Sylvester resultant of two univariate dense polynomials with formal
/// degrees (deg a.size()-1, b.size()-1).
Gauss resultant_dense(const std::vector<Gauss>& a, const std::vector<Gauss>& b) {
  const std::size_t da = a.size() - 1, db = b.size() - 1, s = da + db;
  if (s == 0) return Gauss(1);
  QMatrix m(s, s);
  for (std::size_t r = 0; r < db; ++r)
    for (std::size_t k = 0; k <= da; ++k) m(r, r + k) = a[da - k];
  for (std::size_t r = 0; r < da; ++r)
    for (std::size_t k = 0; k <= db; ++k) m(db + r, r + k) = b[db - k];
  return determinant(m);
}

/// Coefficients in u1 (index = power) of a bivariate polynomial at u2 = t.
std::vector<Gauss> slice_u1(const QPoly& g, int formal_degree, const Gauss& t) {
  std::vector<Gauss> c(static_cast<std::size_t>(formal_degree) + 1);
  for (const auto& [e, v] : g.terms()) {
    Gauss w = v;
    for (int j = 0; j < e[1]; ++j) w *= t;
    c[static_cast<std::size_t>(e[0])] += w;
  }
  return c;
}

std::vector<Complex> slice_u1_c(const CPoly& g, int formal_degree, Complex t) {
  std::vector<Complex> c(static_cast<std::size_t>(formal_degree) + 1);
  for (const auto& [e, v] : g.terms()) c[static_cast<std::size_t>(e[0])] += v * std::pow(t, e[1]);
  return c;
}

double rel_res2(const CPoly& p, Complex u1, Complex u2) {
  const std::array<Complex, 2> z{u1, u2};
  return relative_residual(p, z);
}

/// Newton on (g, h) = 0 in (u1, u2); keeps the best iterate.
std::pair<Complex, Complex> newton2(const CPoly& g, const CPoly& h, Complex u1, Complex u2) {
  const CPoly g1 = derivative(g, 0), g2 = derivative(g, 1), h1 = derivative(h, 0), h2 = derivative(h, 1);
  auto score = [&](Complex a, Complex b) { return std::max(rel_res2(g, a, b), rel_res2(h, a, b)); };
  double best = score(u1, u2);
  for (int it = 0; it < 20 && best > 1e-15; ++it) {
    const std::array<Complex, 2> z{u1, u2};
    const Complex gv = evaluate_complex(g, z), hv = evaluate_complex(h, z);
    const Complex a = evaluate_complex(g1, z), b = evaluate_complex(g2, z);
    const Complex c = evaluate_complex(h1, z), d = evaluate_complex(h2, z);
    const Complex det = a * d - b * c;
    if (std::abs(det) == 0.0) break;
    const Complex n1 = u1 - (d * gv - b * hv) / det;
    const Complex n2 = u2 - (-c * gv + a * hv) / det;
    const double s = score(n1, n2);
    if (!(s < best)) break;
    best = s;
    u1 = n1;
    u2 = n2;
  }
  return {u1, u2};
}

std::optional<QPoint> promote_point(const DetRep& rep, const CPoint& x) {
  const CPoint y = normalized(x);
  for (long den : {100L, 10000L, 1000000L}) {
    QPoint q{rationalize_complex(y[0], den), rationalize_complex(y[1], den), rationalize_complex(y[2], den)};
    if (q[0].is_zero() && q[1].is_zero() && q[2].is_zero()) continue;
    if (rep.delta().evaluate(std::span<const Gauss>(q)).is_zero()) {
      const CPoint qc = to_cpoint(q);
      double d = 0.0;
      for (std::size_t k = 0; k < 3; ++k) d = std::max(d, std::abs(qc[k] - y[k]));
      if (d <= 1e-6) return q;
    }
  }
  return std::nullopt;
}

}  // namespace

DetRep::DetRep(QMatrix d0, QMatrix d1, QMatrix d2) : d_{std::move(d0), std::move(d1), std::move(d2)} {
  const std::size_t m = d_[0].rows();
  if (m == 0) throw InputError("determinantal representation needs m ≥ 1");
  for (std::size_t k = 0; k < 3; ++k) {
    if (!d_[k].is_square() || d_[k].rows() != m)
      throw InputError("D" + std::to_string(k) + " must be " + std::to_string(m) + "x" + std::to_string(m));
    if (!d_[k].is_hermitian()) throw InputError("D" + std::to_string(k) + " is not hermitian");
  }
  delta_ = homogeneous_det_poly<Gauss>(d_[0], d_[1], -d_[2]);
  if (delta_.is_zero()) throw InputError("det(x0·D0 + x1·D1 − x2·D2) vanishes identically");
}

DetRep DetRep::unchecked(QMatrix d0, QMatrix d1, QMatrix d2) {
  DetRep r;
  const std::size_t m = d0.rows();
  r.d_ = {std::move(d0), std::move(d1), std::move(d2)};
  for (const auto& d : r.d_)
    if (!d.is_square() || d.rows() != m) throw InputError("pencil matrices must be square and of equal size");
  r.delta_ = homogeneous_det_poly<Gauss>(r.d_[0], r.d_[1], -r.d_[2]);
  return r;
}

bool DetRep::real_symmetric() const {
  for (const auto& d : d_)
    for (const auto& v : d.data())
      if (!v.is_real()) return false;
  return true;
}

QMatrix DetRep::pencil(const QPoint& x) const { return d_[0] * x[0] + d_[1] * x[1] - d_[2] * x[2]; }

CMatrix DetRep::pencil(const CPoint& x) const {
  return to_complex(d_[0]) * x[0] + to_complex(d_[1]) * x[1] - to_complex(d_[2]) * x[2];
}

std::vector<Gauss> primitive_form(std::span<const Gauss> v) {
  mpz_class den = 1, content = 0;
  for (const auto& z : v) {
    den = lcm(den, z.re().get_den());
    den = lcm(den, z.im().get_den());
  }
  std::vector<Gauss> out(v.begin(), v.end());
  for (auto& z : out) {
    z = z * Gauss(Rational(den));
    content = gcd(content, z.re().get_num());
    content = gcd(content, z.im().get_num());
  }
  if (content == 0) return out;
  const Gauss inv(Rational(1, 1) / Rational(content));
  for (auto& z : out) z = z * inv;
  for (const auto& z : out) {
    if (z.is_zero()) continue;
    // Rotate by a unit so the leading entry has re > 0, im ≥ 0.
    Gauss unit(1);
    if (sgn(z.re()) > 0 && sgn(z.im()) >= 0) unit = Gauss(1);
    else if (sgn(z.re()) <= 0 && sgn(z.im()) > 0) unit = Gauss(0, -1);
    else if (sgn(z.re()) < 0 && sgn(z.im()) <= 0) unit = Gauss(-1);
    else unit = Gauss(0, 1);
    for (auto& w : out) w = w * unit;
    break;
  }
  return out;
}

CurvePoint exact_curve_point(const DetRep& rep, const QPoint& x) {
  if (x[0].is_zero() && x[1].is_zero() && x[2].is_zero()) throw InputError("(0, 0, 0) is not a projective point");
  if (!rep.delta().evaluate(std::span<const Gauss>(x)).is_zero())
    throw InputError("point is not on the curve");
  CurvePoint p;
  p.exact = x;
  p.x = to_cpoint(x);
  const auto rk = rank_kernel(rep.pencil(x));
  const QMatrix& k = rk.kernel.basis;
  p.exact_kernel = QMatrix(k.rows(), k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) {
    const auto col = k.col(j);
    const auto prim = primitive_form(col);
    for (std::size_t i = 0; i < k.rows(); ++i) p.exact_kernel(i, j) = prim[i];
  }
  p.kernel = to_complex(p.exact_kernel);
  return p;
}

CurvePoint locate_curve_point(const DetRep& rep, const CPoint& x, double tol) {
  if (auto q = promote_point(rep, x)) return exact_curve_point(rep, *q);
  CurvePoint p;
  p.x = normalized(x);
  const auto rk = rank_kernel(rep.pencil(p.x), tol, rep.size() - 1);
  p.kernel = rk.kernel.basis;
  return p;
}

QMatrix point_vandermonde(const CurvePoint& p, int k) {
  if (!p.is_exact()) throw InternalError("point_vandermonde: point is not exact");
  QMatrix out;
  for (std::size_t j = 0; j < p.exact_kernel.cols(); ++j) {
    const auto e = p.exact_kernel.col(j);
    out = hstack(out, vandermonde_vector<Gauss>(*p.exact, e, k));
  }
  return out;
}

CMatrix point_vandermonde_c(const CurvePoint& p, int k) {
  CMatrix out;
  for (std::size_t j = 0; j < p.kernel.cols(); ++j) {
    const auto e = p.kernel.col(j);
    out = hstack(out, vandermonde_vector<Complex>(p.x, e, k));
  }
  return out;
}

PrincipalSubspace principal_subspace(const DetRep& rep, int n) {
  if (n < 1) throw InputError("n must be at least 1");
  PrincipalSubspace ps;
  ps.n = n;
  ps.m = rep.size();
  const MonomialIndex blocks(n - 1);
  const std::size_t m = ps.m, dim = blocks.size() * m;
  if (n == 1) {
    ps.constraints = QMatrix(0, dim);
    ps.space = QSubspace::full(dim);
    return ps;
  }
  const MonomialIndex rows(n - 2);
  ps.constraints = QMatrix(rows.size() * m, dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Exponent& j = rows.at(r);
    ps.constraints.set_block(r * m, blocks.position(add(j, {1, 0, 0})) * m, rep.d(0));
    ps.constraints.set_block(r * m, blocks.position(add(j, {0, 1, 0})) * m, rep.d(1));
    ps.constraints.set_block(r * m, blocks.position(add(j, {0, 0, 1})) * m, -rep.d(2));
  }
  ps.space = rank_kernel(ps.constraints).kernel;
  return ps;
}

std::vector<CurvePoint> pencil_points(const DetRep& rep, const Gauss& x1, const Gauss& x2, double tol) {
  const QPoly poly = pencil_det_poly(rep.d(0), rep.d(1), rep.d(2), x1, x2);
  if (poly.is_zero()) throw InputError("det(x0·D0 + x1·D1 − x2·D2) vanishes identically on this line");
  std::vector<CurvePoint> out;
  if (poly.total_degree() < 1) return out;
  const auto roots = poly_roots(poly, tol);
  for (const auto& cl : roots.clusters) {
    const Gauss q = rationalize_complex(cl.value);
    CurvePoint p;
    if (poly.evaluate({q}).is_zero()) {
      p = exact_curve_point(rep, {q, x1, x2});
    } else {
      p.x = {cl.value, x1.to_complex(), x2.to_complex()};
      p.kernel = rank_kernel(rep.pencil(p.x), tol, rep.size() - 1).kernel.basis;
    }
    p.multiplicity = cl.multiplicity;
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

bool smooth_at(const DetRep& rep, std::span<const PrescribedPoint> pts) {
  const QPoly delta = rep.delta();
  for (const auto& pt : pts) {
    bool singular = true;
    for (int v = 0; v < 3; ++v)
      singular = singular && derivative(delta, v).evaluate({pt.x[0], pt.x[1], pt.x[2]}).is_zero();
    if (singular) return false;
  }
  return true;
}

}  // namespace

DetRep detrep_through_points(std::span<const PrescribedPoint> pts, std::size_t m, Rng& rng, bool real_symmetric) {
  if (m == 0) throw InputError("m must be at least 1");
  // Real parameters of one hermitian m x m matrix, as elementary matrices.
  std::vector<QMatrix> elem;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      QMatrix e(m, m);
      e(i, j) = Gauss(1);
      e(j, i) = Gauss(1);
      elem.push_back(e);
      if (!real_symmetric && i != j) {
        QMatrix f(m, m);
        f(i, j) = Gauss(0, 1);
        f(j, i) = Gauss(0, -1);
        elem.push_back(f);
      }
    }
  const std::size_t per = elem.size(), params = 3 * per;
  QMatrix a(2 * m * pts.size(), params);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    const auto& pt = pts[p];
    if (pt.e.size() != m) throw InputError("prescribed kernel vector has wrong length");
    if (pt.x[0].is_zero() && pt.x[1].is_zero() && pt.x[2].is_zero())
      throw InputError("(0, 0, 0) is not a projective point");
    const std::array<Gauss, 3> coef{pt.x[0], pt.x[1], -pt.x[2]};
    const QMatrix e = QMatrix::column(pt.e);
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t q = 0; q < per; ++q) {
        const QMatrix v = elem[q] * e * coef[k];
        for (std::size_t r = 0; r < m; ++r) {
          a(2 * m * p + 2 * r, k * per + q) = Gauss(v(r, 0).re());
          a(2 * m * p + 2 * r + 1, k * per + q) = Gauss(v(r, 0).im());
        }
      }
  }
  const auto ker = rank_kernel(a).kernel;
  if (ker.dim() == 0) throw InputError("no nonzero hermitian pencil satisfies the prescribed kernel data");
  std::optional<DetRep> fallback;
  for (int attempt = 0; attempt < 20; ++attempt) {
    QMatrix t(params, 1);
    bool nonzero = false;
    for (std::size_t c = 0; c < ker.dim(); ++c) {
      const Gauss w(random_rational(rng, -3, 3));
      if (!w.is_zero()) nonzero = true;
      for (std::size_t r = 0; r < params; ++r) t(r, 0) += ker.basis(r, c) * w;
    }
    if (!nonzero) continue;
    std::array<QMatrix, 3> d{QMatrix(m, m), QMatrix(m, m), QMatrix(m, m)};
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t q = 0; q < per; ++q) d[k] += elem[q] * t(k * per + q, 0);
    try {
      DetRep rep(d[0], d[1], d[2]);
      if (smooth_at(rep, pts)) return rep;
      if (!fallback) fallback = std::move(rep);
    } catch (const InputError&) {
    }
  }
  // The kernel data may force a singular point; return what was found.
  if (fallback) return *fallback;
  throw InputError("every sampled solution gives Δ ≡ 0 (20 attempts)");
}

BetaTriple bezout_decomposition(const QPoly& p, const QPoly& q, int n) {
  if (n < 1) throw InputError("n must be at least 1");
  require_homogeneous(p, n, "p");
  require_homogeneous(q, n, "q");
  const MonomialIndex mon(n), half(n - 1);
  const std::size_t M = mon.size(), N = half.size(), S = N * (N + 1) / 2;
  auto tri = [N](std::size_t a, std::size_t b) { return a * N - a * (a - 1) / 2 + (b - a); };
  QMatrix sys(M * M, 3 * S + 1);
  const auto& gens = generators();
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = a; b < N; ++b) {
        const std::size_t col = k * S + tri(a, b);
        for (const auto& g : gens[k]) {
          sys(mon.position(add(half.at(a), g.x)) * M + mon.position(add(half.at(b), g.y)), col) += Gauss(g.sign);
          if (a != b)
            sys(mon.position(add(half.at(b), g.x)) * M + mon.position(add(half.at(a), g.y)), col) += Gauss(g.sign);
        }
      }
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < M; ++j)
      sys(i * M + j, 3 * S) = p.coeff(mon.at(i)) * q.coeff(mon.at(j)) - q.coeff(mon.at(i)) * p.coeff(mon.at(j));
  const Echelon ech = rref(sys);
  std::vector<Gauss> x(3 * S);
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == 3 * S) throw InternalError("bezout_decomposition: inconsistent system");
    x[ech.pivots[r]] = ech.reduced(r, 3 * S);
  }
  BetaTriple out{n, QMatrix(N, N), QMatrix(N, N), QMatrix(N, N)};
  std::array<QMatrix*, 3> mats{&out.b10, &out.b20, &out.b12};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t a = 0; a < N; ++a)
      for (std::size_t b = a; b < N; ++b) {
        (*mats[k])(a, b) = x[k * S + tri(a, b)];
        (*mats[k])(b, a) = x[k * S + tri(a, b)];
      }
  return out;
}

bool verify_bezout_identity(const QPoly& p, const QPoly& q, const BetaTriple& beta) {
  using Key = std::pair<Exponent, Exponent>;
  std::map<Key, Gauss> diff;
  auto bump = [&diff](const Key& k, const Gauss& v) {
    auto& slot = diff[k];
    slot += v;
    if (slot.is_zero()) diff.erase(k);
  };
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) {
      bump({a, b}, ca * cb);
      bump({b, a}, -(ca * cb));
    }
  const MonomialIndex half(beta.n - 1);
  const auto& gens = generators();
  const std::array<const QMatrix*, 3> mats{&beta.b10, &beta.b20, &beta.b12};
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t a = 0; a < half.size(); ++a)
      for (std::size_t b = 0; b < half.size(); ++b) {
        const Gauss& v = (*mats[k])(a, b);
        if (v.is_zero()) continue;
        for (const auto& g : gens[k]) bump({add(half.at(a), g.x), add(half.at(b), g.y)}, -(v * Gauss(g.sign)));
      }
  return diff.empty();
}

GeneralizedBezout curve_bezout(const QPoly& p, const QPoly& q, const DetRep& rep, int n,
                               const PrincipalSubspace& vn, BetaPairing pairing) {
  if (vn.n != n || vn.m != rep.size()) throw InputError("principal subspace does not match (n, m)");
  GeneralizedBezout g;
  g.n = n;
  g.beta = bezout_decomposition(p, q, n);
  g.blown = blown_bezout(g.beta, rep, pairing);
  g.restricted = congruence_restrict(g.blown, vn.space);
  return g;
}

GeneralizedBezout curve_bezout(const QPoly& p, const QPoly& q, const DetRep& rep, int n, BetaPairing pairing) {
  return curve_bezout(p, q, rep, n, principal_subspace(rep, n), pairing);
}

std::size_t curve_common_zero_count(const QPoly& p, const QPoly& q, const DetRep& rep, int n) {
  const auto g = curve_bezout(p, q, rep, n);
  return rank_kernel(g.restricted).kernel.dim();
}

BilinearReport bilinear_vanishing_check(const QPoly& p, const QPoly& q, const DetRep& rep, int n,
                                        std::size_t samples, Rng& rng, BetaPairing pairing, double tol) {
  const auto g = curve_bezout(p, q, rep, n, pairing);
  const CMatrix blown = to_complex(g.blown);
  const double bnorm = std::max(blown.frobenius(), 1e-300);
  const std::array<CMatrix, 3> d{to_complex(rep.d(0)), to_complex(rep.d(1)), to_complex(rep.d(2))};
  const double dnorm = std::max({d[0].frobenius(), d[1].frobenius(), d[2].frobenius()});
  const CPoly pc = to_complex(p), qc = to_complex(q);

  std::vector<CurvePoint> pool;
  for (int guard = 0; pool.size() < std::max<std::size_t>(samples / 2, 3) && guard < 200; ++guard) {
    const Gauss x1(random_rational(rng, -5, 5)), x2(random_rational(rng, -5, 5));
    if (x1.is_zero() && x2.is_zero()) continue;
    try {
      for (auto& pt : pencil_points(rep, x1, x2)) pool.push_back(std::move(pt));
    } catch (const InputError&) {
    }
  }
  if (pool.size() < 2) throw ConvergenceError("bilinear_vanishing_check: could not sample curve points");

  BilinearReport rep_out;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto& px = pool[static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(pool.size()) - 1))];
    const auto& py = pool[static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(pool.size()) - 1))];
    const auto e = px.kernel.col(0), h = py.kernel.col(0);
    const CMatrix vx = vandermonde_vector<Complex>(px.x, e, n - 1);
    const CMatrix vy = vandermonde_vector<Complex>(py.x, h, n - 1);
    BilinearSample bs;
    bs.x = px.x;
    bs.y = py.x;
    const CPoint z{std::conj(py.x[0]), std::conj(py.x[1]), std::conj(py.x[2])};
    bs.lhs = (vy.adjoint() * blown * vx)(0, 0);
    const Complex px_v = evaluate_complex(pc, px.x), qx_v = evaluate_complex(qc, px.x);
    const Complex pz_v = evaluate_complex(pc, z), qz_v = evaluate_complex(qc, z);
    bs.rhs = px_v * qz_v - qx_v * pz_v;

    const CMatrix ec = CMatrix::column(e), hc = CMatrix::column(h);
    const CPoint a{(hc.adjoint() * d[0] * ec)(0, 0), (hc.adjoint() * d[1] * ec)(0, 0),
                   -(hc.adjoint() * d[2] * ec)(0, 0)};
    const double escale = vx.frobenius() * vy.frobenius();
    const CPoint xz = cross(px.x, z);
    const double xz_rel = norm2(xz) / (norm2(px.x) * norm2(z));
    if (norm2(a) <= tol * dnorm * ec.frobenius() * hc.frobenius() || xz_rel <= 1e-6) {
      ++rep_out.skipped;
      continue;
    }
    bs.lhs_zero = std::abs(bs.lhs) <= tol * bnorm * escale;
    const double rscale = std::abs(px_v) * std::abs(qz_v) + std::abs(qx_v) * std::abs(pz_v);
    bs.rhs_zero = std::abs(bs.rhs) <= tol * rscale;
    if (bs.lhs_zero != bs.rhs_zero) ++rep_out.vanishing_mismatches;
    double num = 0.0;
    for (std::size_t k = 0; k < 3; ++k) num = std::max(num, std::abs(bs.lhs * xz[k] - bs.rhs * a[k]));
    const double den = std::abs(bs.lhs) * norm2(xz) + std::abs(bs.rhs) * norm2(a);
    bs.identity_residual = den == 0.0 ? 0.0 : num / den;
    rep_out.max_identity_residual = std::max(rep_out.max_identity_residual, bs.identity_residual);
    rep_out.samples.push_back(bs);
  }
  return rep_out;
}

std::vector<CurvePoint> curve_intersections(const DetRep& rep, const QPoly& f, Rng& rng, double tol) {
  if (f.nvars() != 3 || f.is_zero()) throw InputError("f must be a nonzero polynomial in x0, x1, x2");
  const int d = f.total_degree();
  if (!f.is_homogeneous(d)) throw InputError("f must be homogeneous");
  const int m = static_cast<int>(rep.size());
  if (d == 0) return {};

  for (int attempt = 0; attempt < 12; ++attempt) {
    QMatrix t(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) t(i, j) = Gauss(random_rational(rng, -4, 4));
    if (determinant(t).is_zero()) continue;
    const QPoly dt = substitute_linear(rep.delta(), t), ft = substitute_linear(f, t);
    if (dt.coeff({0, m, 0}).is_zero() || ft.coeff({0, d, 0}).is_zero()) continue;
    const QPoly g = dehomogenize(dt), h = dehomogenize(ft);

    const std::size_t deg_r = static_cast<std::size_t>(m * d);
    const auto nodes = interpolation_nodes<Gauss>(deg_r + 1);
    std::vector<Gauss> vals(deg_r + 1);
    for (std::size_t k = 0; k <= deg_r; ++k)
      vals[k] = resultant_dense(slice_u1(g, m, nodes[k]), slice_u1(h, d, nodes[k]));
    const auto res = interpolate<Gauss>(nodes, vals);
    if (std::all_of(res.begin(), res.end(), [](const Gauss& c) { return c.is_zero(); }))
      throw InputError("f shares a component with the curve");
    // A drop in degree means intersections on u0 = 0; try another chart.
    if (res.back().is_zero()) continue;

    std::vector<Complex> rc;
    for (const auto& c : res) rc.push_back(c.to_complex());
    RootResult roots;
    try {
      roots = poly_roots(rc, 1e-6);
    } catch (const ConvergenceError&) {
      continue;
    }
    const CPoly gc = to_complex(g), hc = to_complex(h);
    std::vector<CurvePoint> pts;
    bool separating = true;
    for (const auto& cl : roots.clusters) {
      const auto cand = poly_roots(slice_u1_c(gc, m, cl.value), 1e-6);
      std::vector<Complex> good;
      Complex best{};
      double best_res = std::numeric_limits<double>::infinity();
      for (const auto& u1 : cand.roots) {
        const double r = rel_res2(hc, u1, cl.value);
        if (r < best_res) {
          best_res = r;
          best = u1;
        }
        if (r <= 1e-6 && std::none_of(good.begin(), good.end(), [&](Complex w) {
              return std::abs(w - u1) <= 1e-5 * std::max(1.0, std::abs(u1));
            }))
          good.push_back(u1);
      }
      if (good.size() > 1) {
        separating = false;
        break;
      }
      const auto [u1, u2] = newton2(gc, hc, best, cl.value);
      const CMatrix tc = to_complex(t);
      CPoint x{};
      for (std::size_t i = 0; i < 3; ++i) x[i] = tc(i, 0) + tc(i, 1) * u1 + tc(i, 2) * u2;
      CurvePoint cp = locate_curve_point(rep, x, tol);
      cp.multiplicity = cl.multiplicity;
      // Near-coincident roots of a tangency may land in separate clusters.
      bool merged = false;
      for (auto& other : pts) {
        double dist = 0.0;
        const CPoint a = normalized(other.x), b = normalized(cp.x);
        for (std::size_t k = 0; k < 3; ++k) dist = std::max(dist, std::abs(a[k] - b[k]));
        if (dist <= 1e-5) {
          other.multiplicity += cp.multiplicity;
          merged = true;
          break;
        }
      }
      if (!merged) pts.push_back(std::move(cp));
    }
    if (!separating) continue;
    return pts;
  }
  throw ConvergenceError("curve_intersections: no generic projection found after 12 attempts");
}

BasepointReduction basepoint_reduce(const QPoly& p0, const QPoly& p1, const QPoly& p2, const DetRep& rep,
                                    int n, Rng& rng, double tol) {
  require_homogeneous(p0, n, "P0");
  require_homogeneous(p1, n, "P1");
  require_homogeneous(p2, n, "P2");
  if (p0.is_zero() && p1.is_zero() && p2.is_zero()) throw InputError("the map (P0 : P1 : P2) is identically zero");
  BasepointReduction out;
  out.vn = principal_subspace(rep, n);

  std::vector<CurvePoint> cand;
  bool found = false;
  for (int attempt = 0; attempt < 6 && !found; ++attempt) {
    const Gauss a(random_rational(rng, -3, 3, 3)), b(random_rational(rng, -3, 3, 3));
    const QPoly f = p0 + p1 * a + p2 * b;
    if (f.is_zero()) continue;
    try {
      cand = curve_intersections(rep, f, rng, tol);
      found = true;
    } catch (const InputError&) {
    }
  }
  if (!found) throw InputError("P0, P1, P2 all vanish on a component of the curve");

  const CPoly c0 = to_complex(p0), c1 = to_complex(p1), c2 = to_complex(p2);
  for (auto& pt : cand) {
    bool base;
    if (pt.is_exact()) {
      const std::span<const Gauss> x(*pt.exact);
      base = p0.evaluate(x).is_zero() && p1.evaluate(x).is_zero() && p2.evaluate(x).is_zero();
    } else {
      const double lim = 1e3 * tol;
      base = relative_residual(c0, pt.x) <= lim && relative_residual(c1, pt.x) <= lim &&
             relative_residual(c2, pt.x) <= lim;
    }
    if (base) out.basepoints.push_back(std::move(pt));
  }

  out.exact = std::all_of(out.basepoints.begin(), out.basepoints.end(),
                          [](const CurvePoint& p) { return p.is_exact(); });
  if (out.exact) {
    QMatrix remove(out.vn.space.ambient, 0);
    for (const auto& bp : out.basepoints) remove = hstack(remove, point_vandermonde(bp, n - 1));
    out.removed = remove.cols();
    out.vbar = complement_within(out.vn.space, remove);
    out.vbar_c = {out.vbar.ambient, to_complex(out.vbar.basis)};
  } else {
    CMatrix remove(out.vn.space.ambient, 0);
    for (const auto& bp : out.basepoints) remove = hstack(remove, point_vandermonde_c(bp, n - 1));
    out.removed = remove.cols();
    const CSubspace vn_c{out.vn.space.ambient, to_complex(out.vn.space.basis)};
    out.vbar_c = complement_within(vn_c, remove, tol);
  }
  return out;
}

ImageDetRep image_detrep(const QPoly& p0, const QPoly& p1, const QPoly& p2, const DetRep& rep, int n, Rng& rng,
                         double tol) {
  ImageDetRep out;
  out.reduction = basepoint_reduce(p0, p1, p2, rep, n, rng, tol);
  out.b12 = blown_bezout(bezout_decomposition(p1, p2, n), rep, BetaPairing::Validated);
  out.b20 = blown_bezout(bezout_decomposition(p2, p0, n), rep, BetaPairing::Validated);
  out.b10 = blown_bezout(bezout_decomposition(p1, p0, n), rep, BetaPairing::Validated);
  out.exact = out.reduction.exact;
  if (out.exact) {
    const auto& vb = out.reduction.vbar;
    std::array<QMatrix, 3> c{congruence_restrict(out.b12, vb), congruence_restrict(out.b20, vb),
                             -congruence_restrict(out.b10, vb)};
    out.poly = homogeneous_det_poly<Gauss>(c[0], c[1], c[2]);
    out.poly_c = to_complex(*out.poly);
    out.compressed_c = {to_complex(c[0]), to_complex(c[1]), to_complex(c[2])};
    out.compressed = std::move(c);
    out.degenerate = out.poly->is_zero() || out.poly->total_degree() < 1;
  } else {
    const auto& vb = out.reduction.vbar_c;
    out.compressed_c = {congruence_restrict(to_complex(out.b12), vb), congruence_restrict(to_complex(out.b20), vb),
                        -congruence_restrict(to_complex(out.b10), vb)};
    const auto& c = out.compressed_c;
    out.poly_c = homogeneous_det_poly<Complex>(c[0], c[1], c[2]);
    const double s = std::max({c[0].max_abs(), c[1].max_abs(), c[2].max_abs(), 1e-300});
    double cmax = 0.0;
    for (const auto& [e, v] : out.poly_c.terms()) cmax = std::max(cmax, std::abs(v));
    const double dim = static_cast<double>(vb.dim());
    out.degenerate = vb.dim() == 0 || cmax <= tol * std::pow(s, dim);
  }
  return out;
}

ImageVanishing image_vanishing_check(const ImageDetRep& img, const QPoly& p0, const QPoly& p1, const QPoly& p2,
                                     const DetRep& rep, std::size_t samples, Rng& rng, double tol) {
  ImageVanishing out;
  out.ok = !img.degenerate;
  if (img.degenerate) return out;
  for (int guard = 0; out.samples.size() < samples && guard < 500; ++guard) {
    const Gauss x1(random_rational(rng, -6, 6)), x2(random_rational(rng, -6, 6));
    if (x1.is_zero() && x2.is_zero()) continue;
    std::vector<CurvePoint> pts;
    try {
      pts = pencil_points(rep, x1, x2);
    } catch (const InputError&) {
      continue;  // the line is a component of the curve
    }
    for (const auto& pt : pts) {
      if (out.samples.size() >= samples) break;
      ImageVanishingSample s;
      s.x = pt.x;
      if (pt.is_exact() && img.poly) {
        const std::span<const Gauss> x(*pt.exact);
        const QPoint y{p0.evaluate(x), p1.evaluate(x), p2.evaluate(x)};
        if (y[0].is_zero() && y[1].is_zero() && y[2].is_zero()) {
          ++out.skipped;
          continue;
        }
        s.exact = true;
        if (!img.poly->evaluate(std::span<const Gauss>(y)).is_zero()) {
          const CPoint yc{y[0].to_complex(), y[1].to_complex(), y[2].to_complex()};
          s.residual = std::max(relative_residual(img.poly_c, yc), std::numeric_limits<double>::min());
          out.ok = false;
        }
      } else {
        const CPoint y{evaluate_complex(p0, pt.x), evaluate_complex(p1, pt.x), evaluate_complex(p2, pt.x)};
        if (std::abs(y[0]) + std::abs(y[1]) + std::abs(y[2]) <= 1e-10) {
          ++out.skipped;
          continue;
        }
        s.residual = relative_residual(img.poly_c, y);
        if (!(s.residual < tol)) out.ok = false;
      }
      out.max_residual = std::max(out.max_residual, s.residual);
      out.samples.push_back(s);
    }
  }
  return out;
}

DetRep conic_detrep() {
  return DetRep(QMatrix::identity(2), QMatrix{{1, 0}, {0, -1}}, QMatrix{{0, 1}, {1, 0}});
}

}  // namespace curvelim
