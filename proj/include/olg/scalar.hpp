// SPDX-License-Identifier: Apache-2.0
//
// Exact scalar types shared by the polynomial and matrix layers.

#ifndef OLG_SCALAR_HPP
#define OLG_SCALAR_HPP

#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace olg {

// Expression templates are disabled so the types behave as plain values
// inside Eigen containers and `auto` deductions.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

/// Element of the ring T[i]. With T = BigInt these are the Gaussian integers.
template <typename T>
struct Gaussian {
  T re{};
  T im{};

  Gaussian() = default;
  Gaussian(T real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(int real) : re(real) {}           // NOLINT(google-explicit-constructor)
  Gaussian(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}

  static Gaussian i() { return {T(0), T(1)}; }

  [[nodiscard]] Gaussian conj() const { return {re, -im}; }
  [[nodiscard]] T norm() const { return re * re + im * im; }
  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] bool is_real() const { return im == 0; }

  Gaussian &operator+=(const Gaussian &o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Gaussian &operator-=(const Gaussian &o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Gaussian &operator*=(const Gaussian &o) {
    T r = re * o.re - im * o.im;
    T s = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(s);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian &b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian &b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian &b) { return a *= b; }
  friend Gaussian operator-(const Gaussian &a) { return {-a.re, -a.im}; }
  friend bool operator==(const Gaussian &a, const Gaussian &b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const Gaussian &a, const Gaussian &b) { return !(a == b); }

  friend std::ostream &operator<<(std::ostream &os, const Gaussian &z) {
    return os << '(' << z.re << (z.im < 0 ? "" : "+") << z.im << "i)";
  }
};

using GaussianInt = Gaussian<BigInt>;

/// Exact quotient in the integers; throws if b does not divide a.
inline BigInt exact_quotient(const BigInt &a, const BigInt &b) {
  if (b == 0) throw std::domain_error("exact_quotient: division by zero");
  BigInt q = a / b;
  if (q * b != a) throw std::domain_error("exact_quotient: inexact division");
  return q;
}

/// Exact quotient in Z[i]; throws if b does not divide a.
inline GaussianInt exact_quotient(const GaussianInt &a, const GaussianInt &b) {
  if (b.im == 0 && b.re != 0) return {exact_quotient(a.re, b.re), exact_quotient(a.im, b.re)};
  const BigInt n = b.norm();
  if (n == 0) throw std::domain_error("exact_quotient: division by zero");
  const GaussianInt num = a * b.conj();
  return {exact_quotient(num.re, n), exact_quotient(num.im, n)};
}

inline bool is_zero(const BigInt &a) { return a == 0; }
inline bool is_zero(const BigRational &a) { return a == 0; }
inline bool is_zero(const GaussianInt &a) { return a.is_zero(); }

inline std::string to_decimal(const BigInt &a) { return a.str(); }

/// Parses a decimal integer with optional sign; throws std::invalid_argument.
BigInt parse_decimal(const std::string &text);

}  // namespace olg

namespace Eigen {

template <typename T>
struct NumTraits<olg::Gaussian<T>> : GenericNumTraits<olg::Gaussian<T>> {
  using Real = olg::Gaussian<T>;
  using NonInteger = olg::Gaussian<T>;
  using Literal = olg::Gaussian<T>;
  using Nested = olg::Gaussian<T>;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 32,
  };
};

}  // namespace Eigen

#endif  // OLG_SCALAR_HPP
