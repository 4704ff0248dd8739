// SPDX-License-Identifier: Apache-2.0

#include "olg/line_operators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace olg {

ArcIndex::ArcIndex(const Graph &g) {
  arcs_.reserve(2 * g.edges().size());
  for (const auto &[u, v] : g.edges()) {
    arcs_.emplace_back(u, v);
    arcs_.emplace_back(v, u);
  }
  std::sort(arcs_.begin(), arcs_.end());
  reverse_.resize(arcs_.size());
  for (std::size_t i = 0; i < arcs_.size(); ++i)
    reverse_[i] = index_of(arcs_[i].second, arcs_[i].first);
}

int ArcIndex::index_of(Vertex u, Vertex v) const {
  const auto it = std::lower_bound(arcs_.begin(), arcs_.end(), Arc{u, v});
  if (it == arcs_.end() || *it != Arc{u, v}) return -1;
  return static_cast<int>(it - arcs_.begin());
}

Orientation::Orientation(Graph base, std::vector<bool> forward) : base_(std::move(base)), forward_(std::move(forward)) {
  if (forward_.size() != base_.edges().size())
    throw InvalidParameter("orientation must choose exactly one arc per edge");
}

Orientation Orientation::from_arcs(Graph base, const std::vector<Arc> &arcs) {
  std::vector<int> seen(base.edges().size(), 0);
  std::vector<bool> forward(base.edges().size(), true);
  for (const auto &[u, v] : arcs) {
    const int e = base.edge_index(u, v);
    if (e < 0)
      throw InvalidParameter("arc (" + std::to_string(u) + "," + std::to_string(v) + ") is not on an edge");
    if (seen[static_cast<std::size_t>(e)]++ != 0)
      throw InvalidParameter("edge {" + std::to_string(u) + "," + std::to_string(v) + "} oriented twice");
    forward[static_cast<std::size_t>(e)] = u < v;
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw InvalidParameter("orientation leaves an edge unoriented");
  return {std::move(base), std::move(forward)};
}

Orientation Orientation::ascending(Graph base) {
  std::vector<bool> fwd(base.edges().size(), true);
  return {std::move(base), std::move(fwd)};
}

Orientation Orientation::descending(Graph base) {
  std::vector<bool> fwd(base.edges().size(), false);
  return {std::move(base), std::move(fwd)};
}

Orientation Orientation::random(Graph base, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bool> fwd(base.edges().size());
  for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = ((rng() >> 63) & 1U) != 0;
  return {std::move(base), std::move(fwd)};
}

Arc Orientation::chosen_arc(int edge) const {
  const auto &[u, v] = base_.edges()[static_cast<std::size_t>(edge)];
  return forward_[static_cast<std::size_t>(edge)] ? Arc{u, v} : Arc{v, u};
}

std::vector<Arc> Orientation::arcs() const {
  std::vector<Arc> out;
  out.reserve(forward_.size());
  for (int e = 0; e < base_.size(); ++e) out.push_back(chosen_arc(e));
  return out;
}

Digraph Orientation::digraph() const { return {base_.order(), arcs()}; }

std::pair<int, int> LineProjection::fiber(int edge, const ArcIndex &idx, const Graph &g) const {
  const auto &[u, v] = g.edges()[static_cast<std::size_t>(edge)];
  return {idx.index_of(u, v), idx.index_of(v, u)};
}

Digraph symmetric_digraph(const Graph &g) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * g.edges().size());
  for (const auto &[u, v] : g.edges()) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return {g.order(), std::move(arcs)};
}

OrientedLineGraph oriented_line_graph(const Graph &g) {
  ArcIndex idx(g);
  std::vector<Arc> arcs;
  for (int i = 0; i < idx.size(); ++i) {
    const auto [u, v] = idx.arc(i);
    for (const Vertex w : g.neighbors(v)) {
      if (w != u) arcs.emplace_back(i, idx.index_of(v, w));
    }
  }
  return {Digraph(idx.size(), std::move(arcs)), std::move(idx)};
}

Graph line_graph(const Graph &g) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) edges.emplace_back(g.edge_index(v, nb[a]), g.edge_index(v, nb[b]));
  }
  return {g.size(), std::move(edges)};
}

LineGraphs underlying_and_line_graph(const Graph &g) {
  const auto ol = oriented_line_graph(g);
  std::vector<Edge> edges;
  edges.reserve(ol.digraph.arcs().size());
  for (const auto &[a, b] : ol.digraph.arcs()) edges.emplace_back(std::min(a, b), std::max(a, b));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  LineProjection proj;
  proj.psi.reserve(static_cast<std::size_t>(ol.index.size()));
  for (const auto &[u, v] : ol.index.arcs()) proj.psi.push_back(g.edge_index(u, v));
  return {Graph(ol.index.size(), std::move(edges)), line_graph(g), std::move(proj)};
}

ArcPartition orientation_partition(const Orientation &o, const ArcIndex &idx) {
  ArcPartition part;
  part.side.assign(static_cast<std::size_t>(idx.size()), 1);
  for (int e = 0; e < o.base().size(); ++e) {
    const auto [u, v] = o.chosen_arc(e);
    const int a = idx.index_of(u, v);
    if (a < 0) throw InvalidParameter("orientation does not match the arc index");
    part.side[static_cast<std::size_t>(a)] = 0;
  }
  for (int i = 0; i < idx.size(); ++i) (part.side[static_cast<std::size_t>(i)] == 0 ? part.v0 : part.v1).push_back(i);
  return part;
}

std::vector<LineEdgeLift> line_edge_lifts(const Graph &g, const Orientation &o) {
  if (!(o.base() == g)) throw InvalidParameter("orientation is for a different graph");
  const ArcIndex idx(g);
  const auto part = orientation_partition(o, idx);
  const Graph lg = line_graph(g);
  auto side = [&](int a) { return part.side[static_cast<std::size_t>(a)]; };

  std::vector<LineEdgeLift> out;
  out.reserve(lg.edges().size());
  for (const auto &[e, f] : lg.edges()) {
    const auto [a, b] = g.edges()[static_cast<std::size_t>(e)];
    const auto [c, d] = g.edges()[static_cast<std::size_t>(f)];
    const Vertex v = (a == c || a == d) ? a : b;
    const Vertex u = (a == v) ? b : a;
    const Vertex w = (c == v) ? d : c;
    LineEdgeLift lift;
    lift.e = e;
    lift.f = f;
    lift.lift_a = {idx.index_of(u, v), idx.index_of(v, w)};
    lift.lift_b = {idx.index_of(w, v), idx.index_of(v, u)};
    lift.a_crosses = side(lift.lift_a.first) != side(lift.lift_a.second);
    lift.b_crosses = side(lift.lift_b.first) != side(lift.lift_b.second);
    out.push_back(lift);
  }
  return out;
}

SignedGraph signed_line_graph(const Graph &g, const Orientation &o) {
  validate_regular_connected(g);
  const auto lifts = line_edge_lifts(g, o);
  std::vector<int> sign;
  sign.reserve(lifts.size());
  for (const auto &l : lifts) {
    if (l.a_crosses != l.b_crosses) throw std::logic_error("lifts of a line-graph edge disagree on crossing");
    sign.push_back(l.a_crosses ? -1 : 1);
  }
  return {line_graph(g), std::move(sign)};
}

std::optional<OperatorKind> parse_operator_kind(std::string_view name) {
  if (name == "lstar") return OperatorKind::AdjacencyLStar;
  if (name == "line") return OperatorKind::AdjacencyLine;
  if (name == "nb" || name == "nonbacktracking") return OperatorKind::NonBacktracking;
  if (name == "skew") return OperatorKind::Skew;
  if (name == "hermitian") return OperatorKind::Hermitian;
  if (name == "signed") return OperatorKind::Signed;
  return std::nullopt;
}

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::AdjacencyLStar: return "lstar";
    case OperatorKind::AdjacencyLine: return "line";
    case OperatorKind::NonBacktracking: return "nb";
    case OperatorKind::Skew: return "skew";
    case OperatorKind::Hermitian: return "hermitian";
    case OperatorKind::Signed: return "signed";
  }
  return "unknown";
}

IntMatrix nonbacktracking_matrix(const Graph &g) { return adjacency_matrix(oriented_line_graph(g).digraph); }

IntMatrix lstar_adjacency(const Graph &g) {
  const IntMatrix b = nonbacktracking_matrix(g);
  return b + b.transpose();
}

IntMatrix skew_adjacency(const Graph &g) {
  const IntMatrix b = nonbacktracking_matrix(g);
  return b - b.transpose();
}

GaussianMatrix hermitian_adjacency(const Graph &g) {
  const auto ol = oriented_line_graph(g);
  GaussianMatrix h = zero_matrix<GaussianInt>(ol.digraph.order());
  for (const auto &[a, b] : ol.digraph.arcs()) {
    h(a, b) = GaussianInt::i();
    h(b, a) = -GaussianInt::i();
  }
  return h;
}

IntMatrix line_adjacency(const Graph &g) { return adjacency_matrix(line_graph(g)); }

IntMatrix signed_adjacency(const SignedGraph &s) {
  IntMatrix a = zero_matrix<BigInt>(s.base.order());
  for (std::size_t k = 0; k < s.base.edges().size(); ++k) {
    const auto &[u, v] = s.base.edges()[k];
    a(u, v) = s.sign[k];
    a(v, u) = s.sign[k];
  }
  return a;
}

OperatorMatrix operator_matrix(const Graph &g, OperatorKind kind, const Orientation *orientation) {
  switch (kind) {
    case OperatorKind::AdjacencyLStar: return lstar_adjacency(g);
    case OperatorKind::AdjacencyLine: return line_adjacency(g);
    case OperatorKind::NonBacktracking: return nonbacktracking_matrix(g);
    case OperatorKind::Skew: return skew_adjacency(g);
    case OperatorKind::Hermitian: return hermitian_adjacency(g);
    case OperatorKind::Signed:
      if (orientation == nullptr) throw InvalidParameter("signed operator requires an orientation");
      return signed_adjacency(signed_line_graph(g, *orientation));
  }
  throw std::logic_error("unknown operator kind");
}

}  // namespace olg
