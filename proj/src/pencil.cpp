#include "curvelim/pencil.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace curvelim {

QPoly pencil_det_poly(const QMatrix& d0, const QMatrix& d1, const QMatrix& d2, const Gauss& x1,
                      const Gauss& x2) {
  const std::size_t m = d0.rows();
  if (!d0.is_square() || d1.rows() != m || d2.rows() != m || !d1.is_square() || !d2.is_square())
    throw InputError("pencil_det_poly: D matrices must be square and of equal size");
  const QMatrix fixed = d1 * x1 - d2 * x2;
  const auto nodes = interpolation_nodes<Gauss>(m + 1);
  std::vector<Gauss> vals(m + 1);
  for (std::size_t k = 0; k <= m; ++k) vals[k] = determinant(d0 * nodes[k] + fixed);
  const auto c = interpolate<Gauss>(nodes, vals);
  return from_dense<Gauss>(c);
}

namespace {

struct Eval {
  Complex value;
  Complex deriv;
  double scale;  // Σ|c_k||z|^k
};

Eval horner(std::span<const Complex> c, Complex z) {
  Complex p{}, dp{};
  double s = 0.0;
  const double az = std::abs(z);
  for (std::size_t k = c.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[k];
    s = s * az + std::abs(c[k]);
  }
  return {p, dp, s};
}

double rel_residual(std::span<const Complex> c, Complex z) {
  const auto e = horner(c, z);
  return e.scale == 0.0 ? 0.0 : std::abs(e.value) / e.scale;
}

}  // namespace

RootResult poly_roots(std::span<const Complex> coeffs_in, double tol) {
  std::vector<Complex> c(coeffs_in.begin(), coeffs_in.end());
  while (!c.empty() && c.back() == Complex{}) c.pop_back();
  if (c.size() < 2) throw InputError("poly_roots: degree must be at least 1");
  RootResult out;

  // Zero roots are split off exactly.
  std::size_t zeros = 0;
  while (c[zeros] == Complex{}) ++zeros;
  std::vector<Complex> q(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end());
  const std::size_t nq = q.size() - 1;

  std::vector<Complex> z(nq);
  if (nq > 0) {
    // Initial guesses on a circle whose radius is the geometric mean of |roots|.
    const double radius = std::pow(std::abs(q[0] / q[nq]), 1.0 / static_cast<double>(nq));
    for (std::size_t k = 0; k < nq; ++k)
      z[k] = std::polar(radius, 2.0 * M_PI * (static_cast<double>(k) + 0.25) / static_cast<double>(nq) + 0.4);
  }
  const int cap = 1000;
  int it = 0;
  std::vector<bool> done(nq, false);
  for (; it < cap && nq > 0; ++it) {
    bool all = true;
    for (std::size_t k = 0; k < nq; ++k) {
      if (done[k]) continue;
      const auto e = horner(q, z[k]);
      if (e.scale == 0.0 || std::abs(e.value) <= 4.0 * std::numeric_limits<double>::epsilon() * e.scale) {
        done[k] = true;
        continue;
      }
      all = false;
      const Complex w = e.value / e.deriv;
      Complex s{};
      for (std::size_t j = 0; j < nq; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      const Complex step = w / (1.0 - w * s);
      z[k] -= step;
      if (std::abs(step) <= 1e-15 * std::max(1.0, std::abs(z[k]))) done[k] = true;
    }
    if (all) break;
  }
  out.iterations = it;
  for (auto& r : z) {
    // Newton polish; keeps the iterate when a step does not reduce the residual.
    for (int k = 0; k < 3; ++k) {
      const auto e = horner(q, r);
      if (e.deriv == Complex{}) break;
      const Complex cand = r - e.value / e.deriv;
      if (rel_residual(q, cand) < rel_residual(q, r)) r = cand;
      else break;
    }
  }
  out.roots.assign(zeros, Complex{});
  out.roots.insert(out.roots.end(), z.begin(), z.end());
  for (const auto& r : out.roots) out.max_residual = std::max(out.max_residual, rel_residual(c, r));
  if (out.max_residual >= tol) {
    std::ostringstream os;
    os << "poly_roots: no convergence after " << it << " iterations (max residual "
       << out.max_residual << "); best iterate:";
    for (const auto& r : out.roots) os << " (" << r.real() << "," << r.imag() << ")";
    throw ConvergenceError(os.str());
  }
  std::sort(out.roots.begin(), out.roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (const auto& r : out.roots) {
    bool merged = false;
    for (auto& cl : out.clusters)
      if (std::abs(cl.value - r) <= 10.0 * tol * std::max(1.0, std::abs(r))) {
        cl.value = (cl.value * static_cast<double>(cl.multiplicity) + r) /
                   static_cast<double>(cl.multiplicity + 1);
        ++cl.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.clusters.push_back({r, 1});
  }
  return out;
}

RootResult poly_roots(const QPoly& p, double tol) {
  const auto dense = dense_coefficients(p);
  std::vector<Complex> c;
  c.reserve(dense.size());
  for (const auto& v : dense) c.push_back(v.to_complex());
  return poly_roots(c, tol);
}

Gauss rationalize_complex(Complex z, long max_den) {
  const double snap = 1e-12 * std::max(1.0, std::abs(z));
  const Rational re = std::abs(z.real()) <= snap ? Rational(0) : rationalize(z.real(), max_den);
  const Rational im = std::abs(z.imag()) <= snap ? Rational(0) : rationalize(z.imag(), max_den);
  return {re, im};
}

std::vector<std::optional<Gauss>> promote_roots(const QPoly& p, std::span<const Complex> roots) {
  std::vector<std::optional<Gauss>> out;
  out.reserve(roots.size());
  for (const auto& r : roots) {
    const Gauss q = rationalize_complex(r);
    if (p.evaluate({q}).is_zero()) out.emplace_back(q);
    else out.emplace_back(std::nullopt);
  }
  return out;
}

}  // namespace curvelim
