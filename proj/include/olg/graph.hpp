// SPDX-License-Identifier: Apache-2.0
//
// Simple graphs and digraphs on dense vertex ids 0..n-1.

#ifndef OLG_GRAPH_HPP
#define OLG_GRAPH_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "olg/error.hpp"
#include "olg/matrix.hpp"

namespace olg {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;  // stored with first < second
using Arc = std::pair<Vertex, Vertex>;   // (tail, head)

/// Simple undirected graph. Edges are kept sorted lexicographically with
/// u < v, so iteration order is canonical.
class Graph {
 public:
  Graph() = default;
  /// Throws InvalidParameter on loops, duplicates, or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int size() const { return static_cast<int>(edges_.size()); }
  [[nodiscard]] const std::vector<Edge> &edges() const { return edges_; }
  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  /// Index of edge {u,v} in edges(), or -1.
  [[nodiscard]] int edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph &a, const Graph &b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

/// Simple directed graph: no loops or parallel arcs, but (u,v) and (v,u)
/// may both be present.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Arc> arcs);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] int size() const { return static_cast<int>(arcs_.size()); }
  [[nodiscard]] const std::vector<Arc> &arcs() const { return arcs_; }
  [[nodiscard]] std::span<const Vertex> out_neighbors(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] std::span<const Vertex> in_neighbors(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] bool has_arc(Vertex u, Vertex v) const;

  friend bool operator==(const Digraph &a, const Digraph &b) { return a.n_ == b.n_ && a.arcs_ == b.arcs_; }

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Graph with a sign in {+1,-1} on every edge, aligned with base.edges().
struct SignedGraph {
  Graph base;
  std::vector<int> sign;

  SignedGraph(Graph g, std::vector<int> signs);
};

// Generators. Vertex sets are 0..n-1.
Graph complete_graph(int q);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Vertices 0..n-1, i ~ i±a (mod n) for each offset a.
Graph circulant_graph(int n, std::span<const int> offsets);
/// Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
Graph petersen_graph();
Graph hypercube_graph(int dim);
Graph complete_bipartite_graph(int a, int b);

bool is_connected(const Graph &g);

/// Hypothesis data of the regular-graph identities.
struct RegularParams {
  int d = 0;
  int n = 0;
  int m = 0;
  friend bool operator==(const RegularParams &, const RegularParams &) = default;
};

/// Returns (d, n, m) when g is connected and d-regular with d >= 3, and
/// throws HypothesisError naming the first violated hypothesis otherwise.
RegularParams validate_regular_connected(const Graph &g);

IntMatrix adjacency_matrix(const Graph &g);
IntMatrix adjacency_matrix(const Digraph &g);

}  // namespace olg

#endif  // OLG_GRAPH_HPP
