// SPDX-License-Identifier: Apache-2.0

#include "olg/spectral_identities.hpp"

#include <gtest/gtest.h>

#include "olg/error.hpp"
#include "olg/graph6.hpp"
#include "oracles.hpp"

namespace olg {
namespace {

using oracle::from_roots;
using oracle::P;

std::vector<Graph> small_regular() {
  const int wagner[] = {1, 4};
  return {complete_graph(4), complete_graph(5), complete_bipartite_graph(3, 3), hypercube_graph(3),
          circulant_graph(8, wagner), petersen_graph()};
}

// Every connected cubic graph on 4..10 vertices.
const std::vector<Graph> &cubic_corpus() {
  static const std::vector<Graph> corpus = [] {
    std::vector<Graph> out;
    for (int n = 4; n <= 10; n += 2)
      for (auto &g : oracle::connected_cubic_graphs(n)) out.push_back(std::move(g));
    return out;
  }();
  return corpus;
}

// char(iS) from char(S) for a real skew matrix S of even order: the
// coefficient of x^k picks up i^(N-k), and only N-k even survives.
IntPolynomial rotate_skew_charpoly(const IntPolynomial &s, int order) {
  std::vector<BigInt> c(static_cast<std::size_t>(order) + 1, BigInt(0));
  for (int k = 0; k <= order; ++k) {
    const BigInt sk = s.coeff(static_cast<std::size_t>(k));
    if ((order - k) % 2 != 0) {
      EXPECT_EQ(sk, 0);
      continue;
    }
    c[static_cast<std::size_t>(k)] = ((order - k) / 2) % 2 == 0 ? sk : BigInt(-sk);
  }
  return IntPolynomial(std::move(c));
}

TEST(Formula, K4Values) {
  const auto h = RegularSpectrumHandle::from_graph(complete_graph(4));
  EXPECT_EQ(h.char_a, P({-3, -8, -6, 0, 1}));
  EXPECT_EQ(formula_lstar(h), from_roots({{4, 1}, {2, 3}, {-2, 5}, {0, 3}}));
  EXPECT_EQ(formula_line(h), from_roots({{-2, 2}, {4, 1}, {0, 3}}));
  EXPECT_EQ(formula_skew(h), pow(P({0, 1}), 6) * pow(P({8, 0, 1}), 3));
  EXPECT_EQ(formula_hermitian(h), pow(P({0, 1}), 6) * pow(P({-8, 0, 1}), 3));
  EXPECT_EQ(formula_signed(h), from_roots({{2, 3}, {-2, 3}}));
  EXPECT_EQ(formula_nonbacktracking(h),
            pow(P({-1, 0, 1}), 2) * from_roots({{1, 1}, {2, 1}}) * pow(P({2, 1, 1}), 3));
}

TEST(Formula, PetersenValues) {
  const auto h = RegularSpectrumHandle::from_graph(petersen_graph());
  EXPECT_EQ(h.char_a, from_roots({{3, 1}, {1, 5}, {-2, 4}}));
  EXPECT_EQ(formula_lstar(h), from_roots({{4, 1}, {2, 11}, {-2, 5}, {-1, 4}, {0, 5}, {-3, 4}}));
  EXPECT_EQ(formula_line(h), from_roots({{-2, 5}, {4, 1}, {2, 5}, {-1, 4}}));
}

TEST(Formula, HandleRejectsHypothesisViolations) {
  const Graph triangle_with_pendant(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  EXPECT_THROW(RegularSpectrumHandle::from_graph(triangle_with_pendant), HypothesisError);
  EXPECT_THROW(verify_identity(triangle_with_pendant, Identity::LStar), HypothesisError);
  EXPECT_THROW(verify_identity(cycle_graph(6), Identity::Skew), HypothesisError);
}

TEST(Formula, MatchesFaddeevLeverrierOracle) {
  for (const auto &g : small_regular()) {
    const auto h = RegularSpectrumHandle::from_graph(g);
    const auto b = nonbacktracking_matrix(g);
    const IntMatrix sym = b + b.transpose(), skew = b - b.transpose();
    const auto skew_poly = oracle::faddeev_leverrier(skew);
    EXPECT_EQ(formula_lstar(h), oracle::faddeev_leverrier(sym)) << write_graph6(g);
    EXPECT_EQ(formula_skew(h), skew_poly) << write_graph6(g);
    EXPECT_EQ(formula_hermitian(h), rotate_skew_charpoly(skew_poly, static_cast<int>(skew.rows()))) << write_graph6(g);
    EXPECT_EQ(formula_nonbacktracking(h), oracle::faddeev_leverrier(b)) << write_graph6(g);
    EXPECT_EQ(formula_line(h), oracle::faddeev_leverrier(adjacency_matrix(line_graph(g)))) << write_graph6(g);
    const auto o = Orientation::random(g, 99);
    EXPECT_EQ(formula_signed(h), oracle::faddeev_leverrier(signed_adjacency(signed_line_graph(g, o)))) << write_graph6(g);
  }
}

TEST(Verify, AllIdentitiesOnCubicCorpus) {
  ASSERT_EQ(cubic_corpus().size(), 27U);
  for (const auto &g : cubic_corpus()) {
    const auto h = RegularSpectrumHandle::from_graph(g);
    const auto asc = Orientation::ascending(g), desc = Orientation::descending(g), rnd = Orientation::random(g, 1);
    for (const auto id : kAllIdentities) {
      if (id == Identity::Signed) {
        for (const auto *o : {&asc, &desc, &rnd}) EXPECT_TRUE(verify_identity(h, id, o).equal) << write_graph6(g);
      } else {
        EXPECT_TRUE(verify_identity(h, id).equal) << write_graph6(g) << " " << to_string(id);
      }
    }
  }
}

TEST(Verify, ReportsMismatchDegree) {
  const auto h = RegularSpectrumHandle::from_graph(complete_graph(4));
  const auto r = verify_identity(h, Identity::LStar);
  EXPECT_TRUE(r.equal);
  EXPECT_FALSE(r.mismatch_degree);
  EXPECT_EQ(r.graph, "C~");
  EXPECT_THROW(verify_identity(h, Identity::Signed), InvalidParameter);
}

TEST(Formula, DegreesAndProductIdentity) {
  std::vector<Graph> graphs = small_regular();
  for (const auto &g : cubic_corpus()) graphs.push_back(g);
  graphs.push_back(complete_graph(6));
  for (const auto &g : graphs) {
    const auto h = RegularSpectrumHandle::from_graph(g);
    const int m = h.params.m;
    EXPECT_EQ(h.char_a.degree(), h.params.n);
    EXPECT_EQ(h.char_a2.degree(), h.params.n);
    EXPECT_TRUE(h.char_a2.is_monic());
    EXPECT_EQ(formula_lstar(h).degree(), 2 * m);
    EXPECT_EQ(formula_skew(h).degree(), 2 * m);
    EXPECT_EQ(formula_hermitian(h).degree(), 2 * m);
    EXPECT_TRUE(formula_hermitian(h).is_monic());
    EXPECT_EQ(formula_nonbacktracking(h).degree(), 2 * m);
    EXPECT_EQ(formula_line(h).degree(), m);
    EXPECT_EQ(formula_signed(h).degree(), m);
    EXPECT_EQ(formula_line(h) * formula_signed(h), formula_lstar(h));

    const auto skew = formula_skew(h);
    for (int k = 1; k <= skew.degree(); k += 2) EXPECT_EQ(skew.coeff(static_cast<std::size_t>(k)), 0);
    EXPECT_EQ(rotate_skew_charpoly(skew, 2 * m), formula_hermitian(h));

    BigInt expected_const = 1;
    for (int i = 0; i < h.params.n; ++i) expected_const *= h.params.d - 1;
    EXPECT_EQ(abs(formula_nonbacktracking(h).coeff(0)), expected_const);
  }
}

TEST(Formula, IntegralGraphsHaveIntegralLStar) {
  std::vector<Graph> graphs = small_regular();
  for (const auto &g : cubic_corpus()) graphs.push_back(g);
  graphs.push_back(complete_graph(6));
  int integral = 0;
  for (const auto &g : graphs) {
    const auto h = RegularSpectrumHandle::from_graph(g);
    if (integrality_check(h.char_a)) {
      ++integral;
      EXPECT_TRUE(integrality_check(formula_lstar(h))) << write_graph6(g);
    }
  }
  EXPECT_GE(integral, 5);
}

TEST(Identity, Names) {
  for (const auto id : kAllIdentities) EXPECT_EQ(parse_identity(to_string(id)), id);
  EXPECT_EQ(parse_identity("nb"), Identity::NonBacktracking);
  EXPECT_FALSE(parse_identity("all"));
}

}  // namespace
}  // namespace olg
