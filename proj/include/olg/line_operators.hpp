// SPDX-License-Identifier: Apache-2.0
//
// Arc-based constructions over a simple graph G:
//   D(G)   symmetric digraph, each edge replaced by two opposite arcs;
//   L(G)   line graph, vertices are the edges of G;
//   OL(G)  oriented line graph on the arcs of D(G), (u,v) -> (v,w) iff u != w;
//   L*(G)  underlying undirected graph of OL(G), a 2-lift of L(G);
// together with the matrices built from them.

#ifndef OLG_LINE_OPERATORS_HPP
#define OLG_LINE_OPERATORS_HPP

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "olg/graph.hpp"
#include "olg/matrix.hpp"

namespace olg {

/// Dense numbering 0..2m-1 of the arcs of D(G), in sorted (tail, head) order.
class ArcIndex {
 public:
  ArcIndex() = default;
  explicit ArcIndex(const Graph &g);

  [[nodiscard]] int size() const { return static_cast<int>(arcs_.size()); }
  [[nodiscard]] const std::vector<Arc> &arcs() const { return arcs_; }
  [[nodiscard]] const Arc &arc(int i) const { return arcs_[static_cast<std::size_t>(i)]; }
  /// Index of arc (u,v), or -1 when it is not an arc of D(G).
  [[nodiscard]] int index_of(Vertex u, Vertex v) const;
  /// Index of the reversed arc; a fixed-point-free involution.
  [[nodiscard]] int reverse(int i) const { return reverse_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Arc> arcs_;
  std::vector<int> reverse_;
};

/// One chosen arc per edge of the base graph.
class Orientation {
 public:
  /// forward[i] selects (u,v) with u < v for base.edges()[i], else (v,u).
  Orientation(Graph base, std::vector<bool> forward);
  /// Throws InvalidParameter unless arcs contains exactly one arc per edge.
  static Orientation from_arcs(Graph base, const std::vector<Arc> &arcs);
  /// Every edge from its lower endpoint to its higher one.
  static Orientation ascending(Graph base);
  /// Every edge from its higher endpoint to its lower one.
  static Orientation descending(Graph base);
  /// Independent fair coin per edge, reproducible for a given seed.
  static Orientation random(Graph base, std::uint64_t seed);

  [[nodiscard]] const Graph &base() const { return base_; }
  [[nodiscard]] const std::vector<bool> &forward() const { return forward_; }
  [[nodiscard]] Arc chosen_arc(int edge) const;
  [[nodiscard]] std::vector<Arc> arcs() const;
  /// The oriented graph itself.
  [[nodiscard]] Digraph digraph() const;

 private:
  Graph base_;
  std::vector<bool> forward_;
};

/// psi: vertices of L*(G) (arcs of G) onto vertices of L(G) (edges of G),
/// (u,v) -> {u,v}.
struct LineProjection {
  std::vector<int> psi;  // indexed by ArcIndex

  /// The two arcs over a given edge, ascending arc first.
  [[nodiscard]] std::pair<int, int> fiber(int edge, const ArcIndex &idx, const Graph &g) const;
};

struct OrientedLineGraph {
  Digraph digraph;  // vertex i is idx.arc(i)
  ArcIndex index;
};

struct LineGraphs {
  Graph lstar;
  Graph line;
  LineProjection projection;
};

/// The two sides of a partition of V(OL(G)), as sorted arc indices.
struct ArcPartition {
  std::vector<int> v0;
  std::vector<int> v1;
  std::vector<char> side;  // side[i] in {0,1} for each arc index
};

/// An edge {e,f} of L(G) and whether each of its two lifts in L*(G) joins
/// the two sides of an orientation partition.
struct LineEdgeLift {
  int e = 0;
  int f = 0;
  std::pair<int, int> lift_a;  // arc indices (u,v), (v,w)
  std::pair<int, int> lift_b;  // arc indices (w,v), (v,u)
  bool a_crosses = false;
  bool b_crosses = false;
};

Digraph symmetric_digraph(const Graph &g);
OrientedLineGraph oriented_line_graph(const Graph &g);
Graph line_graph(const Graph &g);
LineGraphs underlying_and_line_graph(const Graph &g);

ArcPartition orientation_partition(const Orientation &o, const ArcIndex &idx);

/// Every edge of L(G) with the crossing status of both lifts; no regularity
/// hypothesis is needed.
std::vector<LineEdgeLift> line_edge_lifts(const Graph &g, const Orientation &o);

/// The signed line graph (L(G), s) whose signed adjacency spectrum together
/// with that of L(G) makes up the spectrum of L*(G). An edge of L(G) gets
/// sign +1 when its lifts stay inside V0 or inside V1, and -1 when they join
/// V0 to V1. Requires g connected d-regular with d >= 3.
SignedGraph signed_line_graph(const Graph &g, const Orientation &o);

enum class OperatorKind { AdjacencyLStar, AdjacencyLine, NonBacktracking, Skew, Hermitian, Signed };

std::optional<OperatorKind> parse_operator_kind(std::string_view name);
std::string_view to_string(OperatorKind kind);

/// B, the adjacency matrix of OL(G), in ArcIndex order.
IntMatrix nonbacktracking_matrix(const Graph &g);
/// B + B^T, which equals the adjacency matrix of L*(G).
IntMatrix lstar_adjacency(const Graph &g);
/// B - B^T
IntMatrix skew_adjacency(const Graph &g);
/// i for each arc a -> b of OL(G) at (a,b), -i at (b,a).
GaussianMatrix hermitian_adjacency(const Graph &g);
IntMatrix line_adjacency(const Graph &g);
IntMatrix signed_adjacency(const SignedGraph &s);

using OperatorMatrix = std::variant<IntMatrix, GaussianMatrix>;

/// Dispatches on kind; Signed requires an orientation.
OperatorMatrix operator_matrix(const Graph &g, OperatorKind kind, const Orientation *orientation = nullptr);

}  // namespace olg

#endif  // OLG_LINE_OPERATORS_HPP
