// SPDX-License-Identifier: Apache-2.0
//
// Star colorings and the constrained homomorphisms that characterize them:
// locally bijective homomorphisms (LBH) between graphs, and out-neighbourhood
// injective / bijective homomorphisms (ONIH / ONBH) between digraphs.

#ifndef OLG_STAR_HOMOMORPHISM_HPP
#define OLG_STAR_HOMOMORPHISM_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "olg/graph.hpp"
#include "olg/line_operators.hpp"
#include "olg/polynomial.hpp"

namespace olg {

/// f: V(G) -> {0..q-1}
struct Coloring {
  std::vector<int> color;
  int q = 0;
  friend bool operator==(const Coloring &, const Coloring &) = default;
};

/// Total map from source vertices to target vertices.
struct VertexMap {
  std::vector<Vertex> image;
  friend bool operator==(const VertexMap &, const VertexMap &) = default;
};

/// Why a checker rejected its input. `kind` is one of a fixed set of tags
/// ("improper-edge", "bicolored-path", "collision", ...), `vertices` the
/// offending vertices in source order.
struct Violation {
  std::string kind;
  std::vector<Vertex> vertices;
  std::string detail;
};

/// Thrown when an operation requires a valid witness and gets an invalid one.
class WitnessError : public std::invalid_argument {
 public:
  explicit WitnessError(Violation v)
      : std::invalid_argument(v.kind + (v.detail.empty() ? "" : ": " + v.detail)), violation_(std::move(v)) {}
  [[nodiscard]] const Violation &violation() const { return violation_; }

 private:
  Violation violation_;
};

/// nullopt when c is a star coloring of g: proper, and no path u-v-w-x on
/// four distinct vertices has f(u) = f(w) and f(v) = f(x).
std::optional<Violation> is_star_coloring(const Graph &g, const Coloring &c);

/// A star q-coloring, by backtracking (vertices by descending degree, first
/// vertex fixed to color 0, a new color only one above the largest used).
std::optional<Coloring> find_star_coloring(const Graph &g, int q);

struct StarChromatic {
  int q = 0;
  Coloring witness;
};

/// Smallest q <= qmax with a star q-coloring; nullopt when none exists.
std::optional<StarChromatic> star_chromatic_number(const Graph &g, int qmax);

std::optional<Violation> is_lbh(const Graph &src, const Graph &dst, const VertexMap &m);

enum class OnhMode { Injective, Bijective };

/// For every v: psi maps N+(v) into N+(psi(v)) injectively, and (Bijective)
/// onto it.
std::optional<Violation> is_onh(const Digraph &src, const Digraph &dst, const VertexMap &m, OnhMode mode);

/// D(K_q), the complete symmetric digraph on 0..q-1.
Digraph complete_symmetric_digraph(int q);

struct OnihWitness {
  Orientation orientation;
  VertexMap map;  // into D(K_q)
};

/// Orients every bicolored star leaf -> center (a bare edge points at its
/// smaller endpoint) and keeps psi = f. Throws WitnessError for a
/// non-star coloring.
OnihWitness coloring_to_onih(const Graph &g, const Coloring &c);

struct OnihColoring {
  Coloring coloring;
  /// Set when the ONIH's coloring is not a star coloring, i.e. the input is
  /// an ONIH that does not arise from a star coloring.
  std::optional<Violation> counterexample;
};

/// Reads f = psi off an ONIH into D(K_q). Throws WitnessError when the input
/// is not an ONIH into D(K_q).
OnihColoring onih_to_coloring(const Orientation &o, const VertexMap &m, int q);

/// Backtracking LBH search; the result always passes is_lbh.
std::optional<VertexMap> find_lbh(const Graph &src, const Graph &dst);
/// Backtracking ONIH/ONBH search; the result always passes is_onh.
std::optional<VertexMap> find_onh(const Digraph &src, const Digraph &dst, OnhMode mode);

/// Size of the largest independent set inside any open neighbourhood.
int max_neighborhood_independence(const Graph &g);
/// No induced K_{1,t}: no vertex has t pairwise non-adjacent neighbours.
bool is_k1t_free(const Graph &g, int t);

/// (x-2p)(x+2)^((p-1)(p+2)/2)(x-2)^(p(p+1)/2)(x-p+2)^(p+1)(x+p)^(p+1)
IntPolynomial divisibility_divisor(int p);

struct HypothesisVerdict {
  bool holds = false;
  std::string detail;
};

struct DivisibilityReport {
  int p = 0;
  HypothesisVerdict regular;       // 2p-regular
  HypothesisVerdict claw_free;     // K_{1,p+1}-free
  HypothesisVerdict colorable;     // star (p+2)-colorable
  std::optional<Coloring> star_coloring;
  IntPolynomial char_a;
  IntPolynomial divisor;
  /// Present when every hypothesis holds, or when forced.
  std::optional<DivisionResult> division;

  [[nodiscard]] bool hypotheses_hold() const { return regular.holds && claw_free.holds && colorable.holds; }
};

/// Checks the hypotheses of the divisibility statement for star
/// (p+2)-colorable K_{1,p+1}-free 2p-regular graphs and, when they hold (or
/// force_division is set), divides char(A(g)) by the divisor. The divisor is
/// cross-checked against the closed form for char(L*(K_{p+2})).
DivisibilityReport divisibility_check(const Graph &g, int p, bool force_division = false);

}  // namespace olg

#endif  // OLG_STAR_HOMOMORPHISM_HPP
