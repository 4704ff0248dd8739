// SPDX-License-Identifier: Apache-2.0

#include "olg/matrix.hpp"

#include <stdexcept>

namespace olg {

std::vector<BigInt> evaluation_points(std::size_t count) {
  std::vector<BigInt> pts;
  pts.reserve(count);
  for (long k = 0; pts.size() < count; ++k) {
    pts.emplace_back(k);
    if (k != 0 && pts.size() < count) pts.emplace_back(-k);
  }
  return pts;
}

RationalPolynomial interpolate(const std::vector<BigInt> &points, const std::vector<BigRational> &values) {
  const std::size_t n = points.size();
  if (values.size() != n) throw std::invalid_argument("interpolate: size mismatch");
  std::vector<BigRational> dd(values);
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / BigRational(points[i] - points[i - level]);
    }
  }
  RationalPolynomial acc;
  for (std::size_t k = n; k-- > 0;) {
    acc = acc * RationalPolynomial::linear(BigRational(points[k])) + RationalPolynomial::constant(dd[k]);
  }
  return acc;
}

bool is_hermitian(const GaussianMatrix &m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = i; j < m.cols(); ++j)
      if (m(i, j) != m(j, i).conj()) return false;
  return true;
}

bool is_symmetric(const IntMatrix &m) { return m.rows() == m.cols() && m == m.transpose(); }

GaussianMatrix to_gaussian(const IntMatrix &m) {
  return m.unaryExpr([](const BigInt &a) { return GaussianInt(a); });
}

namespace {

IntPolynomial monic_integer(const RationalPolynomial &p, Eigen::Index order) {
  auto out = to_integer(p);
  if (!out || out->degree() != order || !out->is_monic())
    throw std::logic_error("charpoly_exact: interpolated polynomial is not monic integral");
  return std::move(*out);
}

}  // namespace

IntPolynomial charpoly_exact(const IntMatrix &m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly_exact: matrix is not square");
  const auto pts = evaluation_points(static_cast<std::size_t>(m.rows()) + 1);
  std::vector<BigRational> vals;
  vals.reserve(pts.size());
  for (const auto &t : pts) vals.emplace_back(bareiss_determinant(shifted(m, t)));
  return monic_integer(interpolate(pts, vals), m.rows());
}

IntPolynomial charpoly_exact(const GaussianMatrix &h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("charpoly_exact: matrix is not square");
  if (!is_hermitian(h)) throw std::invalid_argument("charpoly_exact: Gaussian matrix is not Hermitian");
  const auto pts = evaluation_points(static_cast<std::size_t>(h.rows()) + 1);
  std::vector<BigRational> vals;
  vals.reserve(pts.size());
  for (const auto &t : pts) {
    const GaussianInt det = bareiss_determinant(shifted(h, t));
    if (!det.is_real()) throw std::logic_error("charpoly_exact: Hermitian determinant has nonzero imaginary part");
    vals.emplace_back(det.re);
  }
  return monic_integer(interpolate(pts, vals), h.rows());
}

}  // namespace olg
