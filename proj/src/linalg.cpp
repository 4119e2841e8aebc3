#include "curvelim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace curvelim {

Echelon rref(const QMatrix& input) {
  QMatrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Gauss inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Gauss f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

RankKernel<Gauss> rank_kernel(const QMatrix& m, double /*tol*/) {
  RankKernel<Gauss> out;
  const auto ech = rref(m);
  out.rank = ech.pivots.size();
  out.pivots = ech.pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  QMatrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = Gauss(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      basis(ech.pivots[r], k) = -ech.reduced(r, free[k]);
  }
  out.kernel = {m.cols(), std::move(basis)};
  return out;
}

RankKernel<Complex> rank_kernel(const CMatrix& input, double tol, std::size_t max_rank) {
  RankKernel<Complex> out;
  CMatrix m = input;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<std::size_t> perm(nc);
  std::iota(perm.begin(), perm.end(), 0);
  const double cut = tol * std::max(m.max_abs(), std::numeric_limits<double>::min());
  std::size_t k = 0;
  out.min_accepted_pivot = std::numeric_limits<double>::infinity();
  for (; k < std::min({nr, nc, max_rank}); ++k) {
    std::size_t pr = k, pc = k;
    double best = -1.0;
    for (std::size_t i = k; i < nr; ++i)
      for (std::size_t j = k; j < nc; ++j)
        if (std::abs(m(i, j)) > best) {
          best = std::abs(m(i, j));
          pr = i;
          pc = j;
        }
    if (best <= cut) {
      out.max_rejected_pivot = best;
      break;
    }
    out.min_accepted_pivot = std::min(out.min_accepted_pivot, best);
    if (pr != k)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(pr, j), m(k, j));
    if (pc != k) {
      for (std::size_t i = 0; i < nr; ++i) std::swap(m(i, pc), m(i, k));
      std::swap(perm[pc], perm[k]);
    }
    for (std::size_t i = k + 1; i < nr; ++i) {
      const Complex f = m(i, k) / m(k, k);
      if (f == Complex{}) continue;
      for (std::size_t j = k; j < nc; ++j) m(i, j) -= f * m(k, j);
    }
  }
  out.rank = k;
  if (k == 0) out.min_accepted_pivot = 0.0;
  if (k > 0 && out.max_rejected_pivot > 0.0)
    out.ill_conditioned = out.min_accepted_pivot / out.max_rejected_pivot < 1e3;
  for (std::size_t i = 0; i < k; ++i) out.pivots.push_back(perm[i]);

  // Back substitution on the leading k x k upper triangle for each free column.
  CMatrix basis(nc, nc - k);
  for (std::size_t f = k; f < nc; ++f) {
    std::vector<Complex> x(nc, Complex{});
    x[f] = 1.0;
    for (std::size_t ii = k; ii-- > 0;) {
      Complex s = -m(ii, f);
      for (std::size_t j = ii + 1; j < k; ++j) s -= m(ii, j) * x[j];
      x[ii] = s / m(ii, ii);
    }
    double norm = 0.0;
    for (const auto& v : x) norm += std::norm(v);
    norm = std::sqrt(norm);
    for (std::size_t j = 0; j < nc; ++j) basis(perm[j], f - k) = x[j] / norm;
  }
  out.kernel = {nc, std::move(basis)};
  return out;
}

Gauss determinant(const QMatrix& input) {
  if (!input.is_square()) throw InputError("determinant of non-square matrix " + input.shape());
  const std::size_t n = input.rows();
  if (n == 0) return Gauss(1);
  QMatrix m = input;
  Gauss prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Gauss(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = Gauss(0);
    }
    prev = m(k, k);
  }
  Gauss d = m(n - 1, n - 1);
  return negate ? -d : d;
}

Complex determinant(const CMatrix& input) {
  if (!input.is_square()) throw InputError("determinant of non-square matrix " + input.shape());
  CMatrix m = input;
  const std::size_t n = m.rows();
  Complex det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (m(p, k) == Complex{}) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = m(i, k) / m(k, k);
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

QMatrix solve(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows()) throw InputError("solve: row mismatch " + a.shape() + " / " + b.shape());
  const auto ech = rref(hstack(a, b));
  QMatrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    const std::size_t pc = ech.pivots[r];
    if (pc >= a.cols()) throw InputError("solve: inconsistent linear system");
    for (std::size_t j = 0; j < b.cols(); ++j) x(pc, j) = ech.reduced(r, a.cols() + j);
  }
  return x;
}

CMatrix solve(const CMatrix& a, const CMatrix& b, double tol) {
  const CMatrix ah = a.adjoint();
  return inverse(ah * a, tol) * (ah * b);
}

QMatrix inverse(const QMatrix& a) {
  if (!a.is_square()) throw InputError("inverse of non-square matrix " + a.shape());
  const std::size_t n = a.rows();
  const auto ech = rref(hstack(a, QMatrix::identity(n)));
  if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1))
    throw InputError("inverse: singular matrix");
  return ech.reduced.block(0, n, n, n);
}

CMatrix inverse(const CMatrix& a, double tol) {
  if (!a.is_square()) throw InputError("inverse of non-square matrix " + a.shape());
  const std::size_t n = a.rows();
  CMatrix m = a;
  CMatrix inv = CMatrix::identity(n);
  const double cut = tol * std::max(a.max_abs(), std::numeric_limits<double>::min());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (std::abs(m(p, k)) <= cut) throw InputError("inverse: numerically singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    const Complex d = m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) /= d;
      inv(k, j) /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Complex f = m(i, k);
      if (f == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

QSubspace column_space(const QMatrix& m) {
  const auto ech = rref(m);
  return {m.rows(), m.cols_subset(ech.pivots)};
}

CSubspace column_space(const CMatrix& m, double tol) {
  auto rk = rank_kernel(m, tol);
  std::vector<std::size_t> piv = rk.pivots;
  std::sort(piv.begin(), piv.end());
  return {m.rows(), m.cols_subset(piv)};
}

}  // namespace curvelim
