// SPDX-License-Identifier: Apache-2.0

#include "olg/spectral_identities.hpp"

#include <stdexcept>

#include "olg/graph6.hpp"

namespace olg {

namespace {

IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (const long a : ascending) c.emplace_back(a);
  return IntPolynomial(std::move(c));
}

unsigned excess(const RegularSpectrumHandle &h) { return static_cast<unsigned>(h.params.m - h.params.n); }

}  // namespace

RegularSpectrumHandle RegularSpectrumHandle::from_graph(const Graph &g) {
  RegularSpectrumHandle h;
  h.params = validate_regular_connected(g);
  h.graph = g;
  const IntMatrix a = adjacency_matrix(g);
  h.char_a = charpoly_exact(a);
  h.char_a2 = charpoly_exact(IntMatrix(a * a));
  return h;
}

IntPolynomial formula_lstar(const RegularSpectrumHandle &h) {
  const BigInt c = h.params.d - 2;
  return pow(poly({-4, 0, 1}), excess(h)) * shift(h.char_a, BigInt(-c)) * shift(h.char_a, c);
}

IntPolynomial formula_line(const RegularSpectrumHandle &h) {
  const BigInt c = h.params.d - 2;
  return pow(poly({2, 1}), excess(h)) * shift(h.char_a, BigInt(-c));
}

IntPolynomial formula_skew(const RegularSpectrumHandle &h) {
  const long d = h.params.d;
  return IntPolynomial::monomial(2 * excess(h)) * compose(h.char_a2, poly({d * d, 0, 1}));
}

IntPolynomial formula_hermitian(const RegularSpectrumHandle &h) {
  const long d = h.params.d;
  IntPolynomial p = IntPolynomial::monomial(2 * excess(h)) * compose(h.char_a2, poly({d * d, 0, -1}));
  return (h.params.n % 2 == 0) ? p : -p;
}

IntPolynomial formula_signed(const RegularSpectrumHandle &h) {
  const BigInt c = h.params.d - 2;
  return pow(poly({-2, 1}), excess(h)) * shift(h.char_a, c);
}

IntPolynomial formula_nonbacktracking(const RegularSpectrumHandle &h) {
  const int n = h.params.n;
  const IntPolynomial quad = poly({h.params.d - 1, 0, 1});
  IntPolynomial sum;
  IntPolynomial quad_power = IntPolynomial::constant(1);
  for (int k = 0; k <= n; ++k) {
    sum += quad_power * IntPolynomial::monomial(static_cast<std::size_t>(n - k), h.char_a.coeff(static_cast<std::size_t>(k)));
    quad_power *= quad;
  }
  return pow(poly({-1, 0, 1}), excess(h)) * sum;
}

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::LStar: return "lstar";
    case Identity::Line: return "line";
    case Identity::Skew: return "skew";
    case Identity::Hermitian: return "hermitian";
    case Identity::Signed: return "signed";
    case Identity::NonBacktracking: return "nb";
  }
  return "unknown";
}

std::optional<Identity> parse_identity(std::string_view name) {
  for (const Identity id : kAllIdentities)
    if (to_string(id) == name) return id;
  if (name == "nonbacktracking") return Identity::NonBacktracking;
  return std::nullopt;
}

OperatorKind operator_for(Identity id) {
  switch (id) {
    case Identity::LStar: return OperatorKind::AdjacencyLStar;
    case Identity::Line: return OperatorKind::AdjacencyLine;
    case Identity::Skew: return OperatorKind::Skew;
    case Identity::Hermitian: return OperatorKind::Hermitian;
    case Identity::Signed: return OperatorKind::Signed;
    case Identity::NonBacktracking: return OperatorKind::NonBacktracking;
  }
  throw std::logic_error("unknown identity");
}

IntPolynomial formula(const RegularSpectrumHandle &h, Identity id) {
  switch (id) {
    case Identity::LStar: return formula_lstar(h);
    case Identity::Line: return formula_line(h);
    case Identity::Skew: return formula_skew(h);
    case Identity::Hermitian: return formula_hermitian(h);
    case Identity::Signed: return formula_signed(h);
    case Identity::NonBacktracking: return formula_nonbacktracking(h);
  }
  throw std::logic_error("unknown identity");
}

IntPolynomial direct_charpoly(const Graph &g, Identity id, const Orientation *orientation) {
  const auto m = operator_matrix(g, operator_for(id), orientation);
  return std::visit([](const auto &mat) { return charpoly_exact(mat); }, m);
}

VerificationReport verify_identity(const RegularSpectrumHandle &h, Identity id, const Orientation *orientation) {
  if (id == Identity::Signed && orientation == nullptr)
    throw InvalidParameter("the signed identity requires an orientation");
  VerificationReport r;
  r.graph = write_graph6(h.graph);
  r.identity = id;
  r.formula = formula(h, id);
  r.direct = direct_charpoly(h.graph, id, orientation);
  r.mismatch_degree = first_difference(r.formula, r.direct);
  r.equal = !r.mismatch_degree.has_value();
  return r;
}

VerificationReport verify_identity(const Graph &g, Identity id, const Orientation *orientation) {
  return verify_identity(RegularSpectrumHandle::from_graph(g), id, orientation);
}

}  // namespace olg
