// SPDX-License-Identifier: Apache-2.0

#include "olg/graph.hpp"

#include <algorithm>
#include <string>

namespace olg {

const char *to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Regular: return "not-regular";
    case Hypothesis::Connected: return "not-connected";
    case Hypothesis::DegreeAtLeast3: return "degree-below-3";
    case Hypothesis::Orientation: return "bad-orientation";
  }
  return "unknown";
}

namespace {

void check_endpoints(int n, Vertex u, Vertex v, const char *what) {
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw InvalidParameter(std::string(what) + " endpoint out of range: (" + std::to_string(u) + "," +
                           std::to_string(v) + ") with n=" + std::to_string(n));
  if (u == v) throw InvalidParameter(std::string(what) + " is a loop at " + std::to_string(u));
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidParameter("negative vertex count");
  for (auto &[u, v] : edges_) {
    check_endpoints(n, u, v, "edge");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidParameter("duplicate edge");
  adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto &[u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto &a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

Digraph::Digraph(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw InvalidParameter("negative vertex count");
  for (const auto &[u, v] : arcs_) check_endpoints(n, u, v, "arc");
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
    throw InvalidParameter("duplicate arc");
  out_.assign(static_cast<std::size_t>(n), {});
  in_.assign(static_cast<std::size_t>(n), {});
  for (const auto &[u, v] : arcs_) {
    out_[static_cast<std::size_t>(u)].push_back(v);
    in_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto &a : in_) std::sort(a.begin(), a.end());
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

SignedGraph::SignedGraph(Graph g, std::vector<int> signs) : base(std::move(g)), sign(std::move(signs)) {
  if (sign.size() != base.edges().size()) throw InvalidParameter("sign vector does not match the edge set");
  for (const int s : sign)
    if (s != 1 && s != -1) throw InvalidParameter("edge sign must be +1 or -1");
}

Graph complete_graph(int q) {
  if (q < 1) throw InvalidParameter("complete_graph: q must be positive");
  std::vector<Edge> e;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v) e.emplace_back(u, v);
  return {q, std::move(e)};
}

Graph empty_graph(int n) { return {n, {}}; }

Graph path_graph(int n) {
  if (n < 1) throw InvalidParameter("path_graph: n must be positive");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return {n, std::move(e)};
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidParameter("cycle_graph: n must be at least 3");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return {n, std::move(e)};
}

Graph circulant_graph(int n, std::span<const int> offsets) {
  if (n < 1) throw InvalidParameter("circulant_graph: n must be positive");
  std::vector<Edge> e;
  for (const int raw : offsets) {
    const int a = ((raw % n) + n) % n;
    if (a == 0) throw InvalidParameter("circulant_graph: offset is a multiple of n");
    for (int v = 0; v < n; ++v) {
      int u = v, w = (v + a) % n;
      if (u > w) std::swap(u, w);
      e.emplace_back(u, w);
    }
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return {n, std::move(e)};
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> subsets;
  for (int a = 0; a < 5; ++a)
    for (int b = a + 1; b < 5; ++b) subsets.emplace_back(a, b);
  std::vector<Edge> e;
  for (int i = 0; i < 10; ++i)
    for (int j = i + 1; j < 10; ++j) {
      const auto [a, b] = subsets[static_cast<std::size_t>(i)];
      const auto [c, d] = subsets[static_cast<std::size_t>(j)];
      if (a != c && a != d && b != c && b != d) e.emplace_back(i, j);
    }
  return {10, std::move(e)};
}

Graph hypercube_graph(int dim) {
  if (dim < 0 || dim > 20) throw InvalidParameter("hypercube_graph: dimension out of range");
  const int n = 1 << dim;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (const int w = v ^ (1 << b); v < w) e.emplace_back(v, w);
  return {n, std::move(e)};
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InvalidParameter("complete_bipartite_graph: part sizes must be positive");
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return {a + b, std::move(e)};
}

bool is_connected(const Graph &g) {
  if (g.order() == 0) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Vertex w : g.neighbors(v)) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == g.order();
}

RegularParams validate_regular_connected(const Graph &g) {
  if (g.order() == 0) throw HypothesisError(Hypothesis::Connected, "graph has no vertices");
  const int d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d)
      throw HypothesisError(Hypothesis::Regular, "vertex 0 has degree " + std::to_string(d) + " but vertex " +
                                                     std::to_string(v) + " has degree " +
                                                     std::to_string(g.degree(v)));
  }
  if (!is_connected(g)) throw HypothesisError(Hypothesis::Connected, "graph is disconnected");
  if (d < 3) throw HypothesisError(Hypothesis::DegreeAtLeast3, "graph is " + std::to_string(d) + "-regular");
  return {d, g.order(), g.size()};
}

IntMatrix adjacency_matrix(const Graph &g) {
  IntMatrix a = zero_matrix<BigInt>(g.order());
  for (const auto &[u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

IntMatrix adjacency_matrix(const Digraph &g) {
  IntMatrix a = zero_matrix<BigInt>(g.order());
  for (const auto &[u, v] : g.arcs()) a(u, v) = 1;
  return a;
}

}  // namespace olg
