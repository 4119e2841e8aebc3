#ifndef CURVELIM_LINALG_HPP
#define CURVELIM_LINALG_HPP

#include <cstddef>
#include <vector>

#include "curvelim/matrix.hpp"

namespace curvelim {

/// Default relative tolerance of the float path.
inline constexpr double kDefaultTol = 1e-9;

/// A subspace of T^ambient given by a basis with full column rank.
template <class T>
struct Subspace {
  std::size_t ambient = 0;
  Matrix<T> basis;  // ambient x dim

  std::size_t dim() const { return basis.cols(); }

  static Subspace full(std::size_t n) { return {n, Matrix<T>::identity(n)}; }
  static Subspace zero(std::size_t n) { return {n, Matrix<T>(n, 0)}; }
};

using QSubspace = Subspace<Gauss>;
using CSubspace = Subspace<Complex>;

template <class T>
struct RankKernel {
  std::size_t rank = 0;
  Subspace<T> kernel;
  std::vector<std::size_t> pivots;  // pivot columns in elimination order
  // Float path only: decision margins of the rank cut.
  double min_accepted_pivot = 0.0;
  double max_rejected_pivot = 0.0;
  bool ill_conditioned = false;
};

struct Echelon {
  QMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form; pivots chosen by increasing column index and the
/// first nonzero row, so the result is canonical.
Echelon rref(const QMatrix& m);

/// Exact rank and kernel. The kernel basis has one vector per free column f,
/// carrying 1 at f and zeros at the other free columns.
RankKernel<Gauss> rank_kernel(const QMatrix& m, double tol = kDefaultTol);

/// Float rank and kernel by complete-pivoting elimination. A pivot is
/// accepted when it exceeds tol·max|m|; the cut is flagged ill-conditioned
/// when smallest accepted / largest rejected pivot < 1e3. Elimination stops
/// after max_rank pivots, which forces a kernel of at least cols − max_rank.
RankKernel<Complex> rank_kernel(const CMatrix& m, double tol = kDefaultTol,
                                std::size_t max_rank = static_cast<std::size_t>(-1));

/// Fraction-free (Bareiss) determinant, exact.
Gauss determinant(const QMatrix& m);
Complex determinant(const CMatrix& m);

/// Solves a·x = b. Exact path requires consistency (free variables set to 0)
/// and throws InputError otherwise. Float path requires full column rank and
/// returns the least-squares solution via the normal equations.
QMatrix solve(const QMatrix& a, const QMatrix& b);
CMatrix solve(const CMatrix& a, const CMatrix& b, double tol = kDefaultTol);

QMatrix inverse(const QMatrix& a);
CMatrix inverse(const CMatrix& a, double tol = kDefaultTol);

/// Basis of the column space made of the pivot columns of m.
QSubspace column_space(const QMatrix& m);
CSubspace column_space(const CMatrix& m, double tol = kDefaultTol);

/// Coordinates of the columns of v in the given basis: basis·x = v.
template <class T>
Matrix<T> coordinates(const Subspace<T>& s, const Matrix<T>& v, double tol = kDefaultTol) {
  if constexpr (ScalarTraits<T>::exact)
    return solve(s.basis, v);
  else
    return solve(s.basis, v, tol);
}

/// The basis-coordinate realization Cᴴ·M·C of restricting M to the subspace.
template <class T>
Matrix<T> congruence_restrict(const Matrix<T>& m, const Subspace<T>& c) {
  if (!m.is_square() || m.rows() != c.ambient)
    throw InputError("congruence_restrict: matrix " + m.shape() + " vs ambient " +
                     std::to_string(c.ambient));
  return c.basis.adjoint() * m * c.basis;
}

/// P = C(CᴴC)⁻¹Cᴴ; exact for Gaussian-rational bases.
template <class T>
Matrix<T> orthogonal_projector(const Subspace<T>& s, double tol = kDefaultTol) {
  if (s.dim() == 0) return Matrix<T>(s.ambient, s.ambient);
  const Matrix<T> gram = s.basis.adjoint() * s.basis;
  Matrix<T> gi;
  try {
    if constexpr (ScalarTraits<T>::exact)
      gi = inverse(gram);
    else
      gi = inverse(gram, tol);
  } catch (const InputError&) {
    throw InternalError("orthogonal_projector: singular Gram matrix");
  }
  return s.basis * gi * s.basis.adjoint();
}

/// Orthogonal complement, inside span(within), of the span of the columns of
/// `remove` (which must lie in span(within)). Result basis is within·U.
template <class T>
Subspace<T> complement_within(const Subspace<T>& within, const Matrix<T>& remove,
                              double tol = kDefaultTol) {
  if (remove.cols() == 0) return within;
  const Matrix<T> constraint = remove.adjoint() * within.basis;
  auto rk = rank_kernel(constraint, tol);
  return {within.ambient, within.basis * rk.kernel.basis};
}

}  // namespace curvelim

#endif
