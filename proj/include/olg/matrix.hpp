// SPDX-License-Identifier: Apache-2.0
//
// Exact dense matrices and characteristic polynomials.

#ifndef OLG_MATRIX_HPP
#define OLG_MATRIX_HPP

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "olg/polynomial.hpp"
#include "olg/scalar.hpp"

namespace olg {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<BigInt>;
using GaussianMatrix = DenseMatrix<GaussianInt>;

template <typename Scalar>
DenseMatrix<Scalar> zero_matrix(Eigen::Index order) {
  return DenseMatrix<Scalar>::Constant(order, order, Scalar(0));
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
/// Every division is exact in any integral domain, so Scalar may be BigInt
/// or GaussianInt.
template <typename Scalar>
Scalar bareiss_determinant(DenseMatrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar prev(1);
  Scalar tmp;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (is_zero(m(k, k))) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && is_zero(m(pivot, k))) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        tmp = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(tmp, prev);
      }
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? Scalar(-det) : det;
}

/// t*I - M
template <typename Scalar>
DenseMatrix<Scalar> shifted(const DenseMatrix<Scalar> &m, const BigInt &t) {
  DenseMatrix<Scalar> out = -m;
  for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, i) += Scalar(t);
  return out;
}

/// Points 0, 1, -1, 2, -2, ... used for evaluation-interpolation.
std::vector<BigInt> evaluation_points(std::size_t count);

/// The unique polynomial of degree < points.size() through the given values,
/// by Newton divided differences over Q.
RationalPolynomial interpolate(const std::vector<BigInt> &points, const std::vector<BigRational> &values);

/// True when m equals its conjugate transpose.
bool is_hermitian(const GaussianMatrix &m);
bool is_symmetric(const IntMatrix &m);

/// det(xI - M), computed by evaluating det(tI - M) at order+1 integers with
/// Bareiss elimination and interpolating exactly.
IntPolynomial charpoly_exact(const IntMatrix &m);

/// det(xI - H) for a Hermitian Gaussian-integer matrix. Rejects
/// non-Hermitian input and checks every evaluated determinant is real.
IntPolynomial charpoly_exact(const GaussianMatrix &h);

/// Entry-wise conversion to the Gaussian integers.
GaussianMatrix to_gaussian(const IntMatrix &m);

}  // namespace olg

#endif  // OLG_MATRIX_HPP
