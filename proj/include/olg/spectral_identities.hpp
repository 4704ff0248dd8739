// SPDX-License-Identifier: Apache-2.0
//
// Closed-form characteristic polynomials of the operators built from a
// connected d-regular graph (d >= 3), expressed through char(A;x) and
// char(A^2;x) only, and their verification against direct computation.
//
// Every product over the adjacency eigenvalues lambda_1..lambda_n becomes a
// substitution: with pA(y) = prod (y - lambda_i) and pA2(y) = prod (y - lambda_i^2),
//   prod ((x - lambda_i)^2 - c^2)     = pA(x - c) * pA(x + c)
//   prod (x^2 + d^2 - lambda_i^2)     = pA2(x^2 + d^2)
//   prod (x^2 + lambda_i^2 - d^2)     = (-1)^n pA2(d^2 - x^2)
//   prod (x^2 - lambda_i x + (d - 1)) = sum_k a_k (x^2 + d - 1)^k x^(n-k)
// so no eigenvalue is ever computed.

#ifndef OLG_SPECTRAL_IDENTITIES_HPP
#define OLG_SPECTRAL_IDENTITIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "olg/graph.hpp"
#include "olg/line_operators.hpp"
#include "olg/polynomial.hpp"

namespace olg {

/// A validated regular graph with char(A;x) and char(A^2;x).
struct RegularSpectrumHandle {
  Graph graph;
  RegularParams params;
  IntPolynomial char_a;
  IntPolynomial char_a2;

  /// Throws HypothesisError when g is not connected d-regular with d >= 3.
  static RegularSpectrumHandle from_graph(const Graph &g);
};

/// char(L*(G)) = (x^2-4)^(m-n) prod ((x-lambda_i)^2 - (d-2)^2)
IntPolynomial formula_lstar(const RegularSpectrumHandle &h);
/// char(L(G)) = (x+2)^(m-n) prod (x - lambda_i - (d-2))
IntPolynomial formula_line(const RegularSpectrumHandle &h);
/// char(B - B^T) = x^(2(m-n)) prod (x^2 + d^2 - lambda_i^2)
IntPolynomial formula_skew(const RegularSpectrumHandle &h);
/// char of the Hermitian adjacency of OL(G) = x^(2(m-n)) prod (x^2 + lambda_i^2 - d^2)
IntPolynomial formula_hermitian(const RegularSpectrumHandle &h);
/// char of the signed line graph = (x-2)^(m-n) prod (x - lambda_i + d - 2)
IntPolynomial formula_signed(const RegularSpectrumHandle &h);
/// char(B) = (x^2-1)^(m-n) prod (x^2 - lambda_i x + (d-1))
IntPolynomial formula_nonbacktracking(const RegularSpectrumHandle &h);

enum class Identity { LStar, Line, Skew, Hermitian, Signed, NonBacktracking };

inline constexpr Identity kAllIdentities[] = {Identity::LStar,  Identity::Line,   Identity::Skew,
                                              Identity::Hermitian, Identity::Signed, Identity::NonBacktracking};

std::string_view to_string(Identity id);
std::optional<Identity> parse_identity(std::string_view name);
OperatorKind operator_for(Identity id);

IntPolynomial formula(const RegularSpectrumHandle &h, Identity id);

/// Direct side: charpoly_exact of the operator matrix.
IntPolynomial direct_charpoly(const Graph &g, Identity id, const Orientation *orientation = nullptr);

struct VerificationReport {
  std::string graph;  // graph6
  Identity identity = Identity::LStar;
  IntPolynomial formula;
  IntPolynomial direct;
  bool equal = false;
  /// Lowest degree with differing coefficients, when not equal.
  std::optional<std::size_t> mismatch_degree;
};

/// Compares formula and direct polynomials exactly. Hypothesis violations
/// propagate as HypothesisError; Signed requires an orientation.
VerificationReport verify_identity(const Graph &g, Identity id, const Orientation *orientation = nullptr);
VerificationReport verify_identity(const RegularSpectrumHandle &h, Identity id,
                                   const Orientation *orientation = nullptr);

}  // namespace olg

#endif  // OLG_SPECTRAL_IDENTITIES_HPP
