// SPDX-License-Identifier: Apache-2.0
//
// Dense univariate polynomials over an exact coefficient ring.

#ifndef OLG_POLYNOMIAL_HPP
#define OLG_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "olg/scalar.hpp"

namespace olg {

/// Polynomial with coefficients in T, stored in ascending degree order.
/// Always normalized: no trailing zero coefficients, the zero polynomial is
/// the empty coefficient vector.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }
  /// x - root
  static Polynomial linear(const T &root) { return Polynomial(std::vector<T>{-root, T(1)}); }
  static Polynomial monomial(std::size_t degree, T c = T(1)) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// Degree, or -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<T> &coeffs() const { return coeffs_; }
  [[nodiscard]] T coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }
  [[nodiscard]] const T &leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  [[nodiscard]] bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  [[nodiscard]] T operator()(const T &t) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Polynomial &operator+=(const Polynomial &o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }
  Polynomial &operator-=(const Polynomial &o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
  }
  Polynomial &operator*=(const T &c) {
    for (auto &a : coeffs_) a *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial &b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto &c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const T &c) { return a *= c; }
  friend Polynomial operator*(const T &c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (olg::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial &operator*=(const Polynomial &o) { return *this = *this * o; }

  friend bool operator==(const Polynomial &a, const Polynomial &b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial &a, const Polynomial &b) { return !(a == b); }

 private:
  void normalize() {
    while (!coeffs_.empty() && olg::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RationalPolynomial = Polynomial<BigRational>;

template <typename T>
Polynomial<T> pow(Polynomial<T> base, unsigned exponent) {
  Polynomial<T> acc = Polynomial<T>::constant(T(1));
  while (exponent != 0) {
    if (exponent & 1U) acc *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return acc;
}

/// Product of factors raised to their exponents; the empty product is 1.
template <typename T>
Polynomial<T> product_power(const std::vector<std::pair<Polynomial<T>, unsigned>> &factors) {
  Polynomial<T> acc = Polynomial<T>::constant(T(1));
  for (const auto &[factor, exponent] : factors) acc *= pow(factor, exponent);
  return acc;
}

/// p(q(x)), by Horner's scheme in the outer polynomial.
template <typename T>
Polynomial<T> compose(const Polynomial<T> &p, const Polynomial<T> &q) {
  Polynomial<T> acc;
  const auto &c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * q + Polynomial<T>::constant(*it);
  return acc;
}

/// p(x + c)
template <typename T>
Polynomial<T> shift(const Polynomial<T> &p, const T &c) {
  return compose(p, Polynomial<T>({c, T(1)}));
}

/// Quotient and remainder over a field.
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T> &num, const Polynomial<T> &den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem = num.coeffs();
  const int dd = den.degree();
  const int dq = num.degree() - dd;
  if (dq < 0) return {Polynomial<T>{}, num};
  std::vector<T> quot(static_cast<std::size_t>(dq) + 1, T(0));
  const T &lead = den.leading();
  for (int k = dq; k >= 0; --k) {
    T c = rem[static_cast<std::size_t>(k + dd)] / lead;
    if (olg::is_zero(c)) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= c * den.coeffs()[static_cast<std::size_t>(j)];
    quot[static_cast<std::size_t>(k)] = std::move(c);
  }
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(rem))};
}

RationalPolynomial to_rational(const IntPolynomial &p);
/// Converts back to integers; std::nullopt when some coefficient is not integral.
std::optional<IntPolynomial> to_integer(const RationalPolynomial &p);

/// Outcome of an exact division attempt in Z[x].
struct DivisionResult {
  bool divisible = false;
  IntPolynomial quotient;  // meaningful when divisible
  /// Remainder of the division over Q[x]; zero when divisible. When the
  /// remainder is zero but the quotient is not integral this holds zero too
  /// and `divisible` is false.
  RationalPolynomial remainder;
};

/// Decides whether den divides num in Z[x], returning the quotient if so.
DivisionResult exact_divide(const IntPolynomial &num, const IntPolynomial &den);

/// Integer roots with multiplicity, in descending root order.
using RootMultiset = std::vector<std::pair<BigInt, unsigned>>;

/// Result of extracting integer roots from a monic polynomial.
struct IntegerRootSplit {
  RootMultiset roots;
  IntPolynomial cofactor;  // 1 when the polynomial splits over Z
  [[nodiscard]] bool splits() const { return cofactor.degree() == 0; }
};

/// Repeatedly strips integer roots (candidates are divisors of the constant
/// term, bounded by a root bound) by exact division.
IntegerRootSplit extract_integer_roots(const IntPolynomial &p);

/// The integer root multiset when p splits completely over Z.
std::optional<RootMultiset> integrality_check(const IntPolynomial &p);

/// Expanded form such as "x^4 - 6*x^2 - 8*x - 3".
std::string to_string(const IntPolynomial &p);
/// Factored form such as "(x-3)(x+1)^3"; unsplit cofactors appear in brackets.
std::string factored_string(const IntPolynomial &p);

/// Lowest degree at which the two polynomials differ, if any.
std::optional<std::size_t> first_difference(const IntPolynomial &a, const IntPolynomial &b);

}  // namespace olg

#endif  // OLG_POLYNOMIAL_HPP
