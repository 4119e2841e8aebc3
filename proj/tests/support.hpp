#ifndef CURVELIM_TESTS_SUPPORT_HPP
#define CURVELIM_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include "curvelim/curve.hpp"
#include "curvelim/linalg.hpp"
#include "curvelim/poly.hpp"
#include "curvelim/random.hpp"

namespace testsupport {

using namespace curvelim;

inline QPoly poly(int nvars, std::initializer_list<std::pair<Exponent, long>> terms) {
  QPoly p(nvars);
  for (const auto& [e, c] : terms) p.add_term(e, Gauss(c));
  return p;
}

/// Univariate polynomial from dense integer coefficients, lowest first.
inline QPoly upoly(std::initializer_list<long> c) {
  QPoly p(1);
  int k = 0;
  for (long v : c) p.add_term({k++, 0, 0}, Gauss(v));
  return p;
}

inline QPoly x(int k) { return QPoly::variable(3, k); }

inline QMatrix qm(std::initializer_list<std::initializer_list<long>> rows) {
  QMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long v : r) m(i, j++) = Gauss(v);
    ++i;
  }
  return m;
}

inline QMatrix qcol(std::initializer_list<long> v) {
  QMatrix m(v.size(), 1);
  std::size_t i = 0;
  for (long e : v) m(i++, 0) = Gauss(e);
  return m;
}

/// a = c·b for some nonzero scalar c.
inline bool proportional(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return false;
  const auto& [e0, c0] = *b.terms().begin();
  const Gauss ratio = a.coeff(e0) / c0;
  if (ratio.is_zero()) return false;
  return a == b * ratio;
}

inline QMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long range = 4, bool complex = false) {
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = complex ? Gauss(random_rational(rng, -range, range), random_rational(rng, -range, range))
                        : Gauss(random_rational(rng, -range, range, 3));
  return m;
}

inline QMatrix random_hermitian(Rng& rng, std::size_t n, long range = 4, bool complex = true) {
  QMatrix a = random_matrix(rng, n, n, range, complex);
  return a + a.adjoint();
}

/// Random homogeneous polynomial of degree n with small integer coefficients.
inline QPoly random_form(Rng& rng, int n, long range = 3) {
  QPoly p(3);
  const MonomialIndex idx(n);
  for (const auto& e : idx.list()) p.add_term(e, Gauss(random_int(rng, -range, range)));
  return p;
}

/// Random form of degree n vanishing at the given points: a random element
/// of the kernel of the evaluation map.
inline QPoly random_form_through(Rng& rng, int n, const std::vector<QPoint>& pts) {
  const MonomialIndex idx(n);
  QMatrix ev(pts.size(), idx.size());
  for (std::size_t r = 0; r < pts.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c)
      ev(r, c) = QPoly::monomial(3, idx.at(c), Gauss(1)).evaluate({pts[r][0], pts[r][1], pts[r][2]});
  const QMatrix k = pts.empty() ? QMatrix::identity(idx.size()) : rank_kernel(ev).kernel.basis;
  QPoly p(3);
  for (std::size_t j = 0; j < k.cols(); ++j) {
    const Gauss w(random_int(rng, -3, 3));
    for (std::size_t c = 0; c < idx.size(); ++c) p.add_term(idx.at(c), k(c, j) * w);
  }
  return p;
}

inline Gauss eval3(const QPoly& p, const QPoint& x) { return p.evaluate({x[0], x[1], x[2]}); }

}  // namespace testsupport

#endif
