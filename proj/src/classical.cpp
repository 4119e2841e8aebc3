#include "curvelim/classical.hpp"

#include "curvelim/pencil.hpp"

namespace curvelim {

namespace {

std::vector<Gauss> padded(const QPoly& p, int n, const char* name) {
  if (p.nvars() != 1) throw InputError(std::string(name) + " must be univariate");
  if (p.total_degree() > n)
    throw InputError(std::string(name) + " has degree " + std::to_string(p.total_degree()) +
                     " > n = " + std::to_string(n));
  auto c = dense_coefficients(p);
  c.resize(static_cast<std::size_t>(n) + 1, Gauss(0));
  return c;
}

}  // namespace

BezoutMatrix bezout_matrix(const QPoly& p, const QPoly& q, int n) {
  if (n < 1) throw InputError("bezout_matrix: n must be at least 1");
  const auto pc = padded(p, n, "p");
  const auto qc = padded(q, n, "q");
  const auto N = static_cast<std::size_t>(n);
  // f[a][b]: coefficient of x^a y^b in p(x)q(y) − q(x)p(y).
  std::vector<std::vector<Gauss>> f(N + 1, std::vector<Gauss>(N + 1));
  for (std::size_t a = 0; a <= N; ++a)
    for (std::size_t b = 0; b <= N; ++b) f[a][b] = pc[a] * qc[b] - qc[a] * pc[b];
  // Coefficient of x^a y^b on the right: b[a-1][b] − b[a][b-1].
  QMatrix bm(N, N);
  for (std::size_t a = N; a >= 1; --a)
    for (std::size_t b = 0; b < N; ++b) {
      Gauss v = f[a][b];
      if (b > 0 && a < N) v += bm(a, b - 1);
      bm(a - 1, b) = v;
    }
  for (std::size_t b = 1; b <= N; ++b) {
    // x^0 y^b row: −b[0][b−1] must equal f[0][b].
    if (-bm(0, b - 1) != f[0][b]) throw InternalError("bezout_matrix: division by (x − y) failed");
  }
  for (std::size_t a = 1; a < N; ++a)
    if (-bm(a, N - 1) != f[a][N]) throw InternalError("bezout_matrix: division by (x − y) failed");
  return {n, std::move(bm), p, q};
}

bool verify_bezout_matrix(const BezoutMatrix& b) {
  // Bivariate in (x, y).
  auto lift = [](const QPoly& u, int var) {
    QPoly r(2);
    for (const auto& [e, c] : u.terms()) {
      Exponent f{0, 0, 0};
      f[static_cast<std::size_t>(var)] = e[0];
      r.add_term(f, c);
    }
    return r;
  };
  const QPoly lhs = lift(b.p, 0) * lift(b.q, 1) - lift(b.q, 0) * lift(b.p, 1);
  const QPoly x_minus_y = QPoly::variable(2, 0) - QPoly::variable(2, 1);
  QPoly rhs(2);
  for (std::size_t i = 0; i < b.entries.rows(); ++i)
    for (std::size_t j = 0; j < b.entries.cols(); ++j)
      rhs.add_term({static_cast<int>(i), static_cast<int>(j), 0}, b.entries(i, j));
  return lhs == rhs * x_minus_y;
}

QMatrix sylvester_matrix(const QPoly& p, const QPoly& q, int n) {
  const auto pc = padded(p, n, "p");
  const auto qc = padded(q, n, "q");
  const auto N = static_cast<std::size_t>(n);
  QMatrix s(2 * N, 2 * N);
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t k = 0; k <= N; ++k) {
      s(r, r + k) = pc[N - k];
      s(N + r, r + k) = qc[N - k];
    }
  return s;
}

Gauss sylvester_resultant(const QPoly& p, const QPoly& q, int n) {
  if (p.is_zero() || q.is_zero()) throw InputError("sylvester_resultant: polynomials must be nonzero");
  if (n < 0) n = std::max(p.total_degree(), q.total_degree());
  if (n == 0) return Gauss(1);
  return determinant(sylvester_matrix(p, q, n));
}

std::size_t common_zero_count_line(const QPoly& p, const QPoly& q, int n) {
  return rank_kernel(bezout_matrix(p, q, n).entries).kernel.dim();
}

LineImage line_image_detrep(const QPoly& p0, const QPoly& p1, const QPoly& p2, int n) {
  if (p0.is_zero()) throw InputError("line_image_detrep: p0 is identically zero");
  LineImage out{bezout_matrix(p1, p0, n), bezout_matrix(p2, p0, n), bezout_matrix(p1, p2, n), QPoly(2)};
  // Homogeneous form det(x0·B12 + x1·B20 − x2·B10), then x0 = 1.
  const auto hom = homogeneous_det_poly<Gauss>(out.b12.entries, out.b20.entries, -out.b10.entries);
  out.poly = dehomogenize(hom);
  out.degenerate = out.poly.is_zero();
  return out;
}

QPoly random_univariate(Rng& rng, int degree, long range) {
  QPoly p(1);
  for (int k = 0; k < degree; ++k) p.add_term({k, 0, 0}, Gauss(random_rational(rng, -range, range)));
  p.add_term({degree, 0, 0}, Gauss(random_nonzero_rational(rng, -range, range)));
  return p;
}

PlantedPair planted_gcd_pair(Rng& rng, int degree, int gcd_degree) {
  if (gcd_degree < 0 || gcd_degree > degree) throw InputError("planted_gcd_pair: need 0 <= gcd_degree <= degree");
  const int rest = degree - gcd_degree;
  const QPoly g = random_univariate(rng, gcd_degree);
  for (;;) {
    const QPoly u = random_univariate(rng, rest), v = random_univariate(rng, rest);
    if (rest > 0 && sylvester_resultant(u, v, rest).is_zero()) continue;
    return {g * u, g * v, g};
  }
}

}  // namespace curvelim
