// SPDX-License-Identifier: Apache-2.0

#include "olg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace olg {

BigInt parse_decimal(const std::string &text) {
  std::size_t i = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("not a decimal integer: '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return BigInt(text);
}

RationalPolynomial to_rational(const IntPolynomial &p) {
  std::vector<BigRational> c;
  c.reserve(p.coeffs().size());
  for (const auto &a : p.coeffs()) c.emplace_back(a);
  return RationalPolynomial(std::move(c));
}

std::optional<IntPolynomial> to_integer(const RationalPolynomial &p) {
  std::vector<BigInt> c;
  c.reserve(p.coeffs().size());
  for (const auto &a : p.coeffs()) {
    if (boost::multiprecision::denominator(a) != 1) return std::nullopt;
    c.emplace_back(boost::multiprecision::numerator(a));
  }
  return IntPolynomial(std::move(c));
}

DivisionResult exact_divide(const IntPolynomial &num, const IntPolynomial &den) {
  if (den.is_zero()) throw std::domain_error("exact_divide: division by the zero polynomial");
  auto [q, r] = divmod(to_rational(num), to_rational(den));
  DivisionResult out;
  out.remainder = std::move(r);
  if (!out.remainder.is_zero()) return out;
  if (auto qi = to_integer(q)) {
    out.divisible = true;
    out.quotient = std::move(*qi);
  }
  return out;
}

namespace {

// Smallest B >= 1 with B^k >= |c_{n-k}| for every k; every complex root of a
// monic polynomial then has modulus at most 2B (Fujiwara).
BigInt fujiwara_half_bound(const IntPolynomial &p) {
  const int n = p.degree();
  BigInt bound = 1;
  for (int k = 1; k <= n; ++k) {
    const BigInt target = abs(p.coeffs()[static_cast<std::size_t>(n - k)]);
    auto reaches = [&](const BigInt &b) {
      BigInt acc = 1;
      for (int j = 0; j < k; ++j) {
        acc *= b;
        if (acc >= target) return true;
      }
      return acc >= target;
    };
    if (reaches(bound)) continue;
    BigInt lo = bound, hi = bound * 2;
    while (!reaches(hi)) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      BigInt mid = (lo + hi) / 2;
      if (reaches(mid))
        hi = mid;
      else
        lo = mid;
    }
    bound = hi;
  }
  return bound;
}

// Divides p by (x - r) once; p(r) must be zero.
IntPolynomial deflate(const IntPolynomial &p, const BigInt &r) {
  const auto &c = p.coeffs();
  std::vector<BigInt> q(c.size() - 1);
  BigInt carry = 0;
  for (std::size_t k = c.size() - 1; k > 0; --k) {
    carry = carry * r + c[k];
    q[k - 1] = carry;
  }
  return IntPolynomial(std::move(q));
}

constexpr long kMaxRootSearch = 50'000'000;

}  // namespace

IntegerRootSplit extract_integer_roots(const IntPolynomial &p) {
  if (p.is_zero()) throw std::domain_error("extract_integer_roots: zero polynomial");
  if (!p.is_monic()) throw std::domain_error("extract_integer_roots: polynomial must be monic");
  IntPolynomial rest = p;
  RootMultiset found;
  unsigned zeros = 0;
  while (rest.degree() > 0 && rest.coeffs()[0] == 0) {
    rest = deflate(rest, BigInt(0));
    ++zeros;
  }
  if (zeros != 0) found.emplace_back(BigInt(0), zeros);
  if (rest.degree() > 0) {
    const BigInt limit = std::min(2 * fujiwara_half_bound(rest), BigInt(abs(rest.coeffs()[0])));
    if (limit > kMaxRootSearch)
      throw std::range_error("extract_integer_roots: root bound " + limit.str() + " too large");
    const long lim = limit.convert_to<long>();
    for (long t = 1; t <= lim && rest.degree() > 0; ++t) {
      for (const long s : {t, -t}) {
        const BigInt r(s);
        unsigned mult = 0;
        while (rest.degree() > 0 && rest.coeffs()[0] % r == 0 && rest(r) == 0) {
          rest = deflate(rest, r);
          ++mult;
        }
        if (mult != 0) found.emplace_back(r, mult);
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) { return a.first > b.first; });
  return {std::move(found), std::move(rest)};
}

std::optional<RootMultiset> integrality_check(const IntPolynomial &p) {
  auto split = extract_integer_roots(p);
  if (!split.splits()) return std::nullopt;
  return std::move(split.roots);
}

std::string to_string(const IntPolynomial &p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const BigInt &c = p.coeffs()[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::string factored_string(const IntPolynomial &p) {
  if (p.is_zero()) return "0";
  const BigInt lead = p.leading();
  if (p.degree() == 0) return lead.str();
  IntPolynomial monic = p;
  if (lead != 1) {
    // Integer-root extraction needs a monic input; fall back to expanded form.
    if (lead == -1) monic = -p;
    else return to_string(p);
  }
  const auto split = extract_integer_roots(monic);
  std::ostringstream os;
  if (lead == -1) os << '-';
  for (const auto &[root, mult] : split.roots) {
    if (root == 0) {
      os << 'x';
    } else {
      os << "(x" << (root > 0 ? "-" : "+") << abs(root) << ')';
    }
    if (mult > 1) os << '^' << mult;
  }
  if (!split.splits()) os << '[' << to_string(split.cofactor) << ']';
  return os.str();
}

std::optional<std::size_t> first_difference(const IntPolynomial &a, const IntPolynomial &b) {
  const std::size_t n = std::max(a.coeffs().size(), b.coeffs().size());
  for (std::size_t k = 0; k < n; ++k) {
    if (a.coeff(k) != b.coeff(k)) return k;
  }
  return std::nullopt;
}

}  // namespace olg
