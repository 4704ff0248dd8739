// SPDX-License-Identifier: Apache-2.0

#include "olg/star_homomorphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "olg/spectral_identities.hpp"

namespace olg {

namespace {

using std::size_t;

int at(const std::vector<int> &v, Vertex i) { return v[static_cast<size_t>(i)]; }

// Bicolored 4-vertex path through x among colored vertices (uncolored = -1),
// or a monochromatic edge at x.
std::optional<std::vector<Vertex>> local_violation(const Graph &g, const std::vector<int> &col, Vertex x) {
  const int cx = at(col, x);
  for (const Vertex y : g.neighbors(x))
    if (at(col, y) == cx) return std::vector<Vertex>{x, y};
  auto bicolored = [&](Vertex a, Vertex v, Vertex w, Vertex b) {
    const int ca = at(col, a), cv = at(col, v), cw = at(col, w), cb = at(col, b);
    return ca >= 0 && cv >= 0 && ca == cw && cv == cb;
  };
  // x second on the path a-x-w-b
  for (const Vertex w : g.neighbors(x)) {
    if (at(col, w) < 0) continue;
    for (const Vertex a : g.neighbors(x)) {
      if (a == w || at(col, a) != at(col, w)) continue;
      for (const Vertex b : g.neighbors(w))
        if (b != x && b != a && bicolored(a, x, w, b)) return std::vector<Vertex>{a, x, w, b};
    }
  }
  // x first on the path x-v-w-b
  for (const Vertex v : g.neighbors(x)) {
    if (at(col, v) < 0) continue;
    for (const Vertex w : g.neighbors(v)) {
      if (w == x || at(col, w) != cx) continue;
      for (const Vertex b : g.neighbors(w))
        if (b != v && b != x && bicolored(x, v, w, b)) return std::vector<Vertex>{x, v, w, b};
    }
  }
  return std::nullopt;
}

Violation violation(std::string kind, std::vector<Vertex> vertices, std::string detail = {}) {
  return {std::move(kind), std::move(vertices), std::move(detail)};
}

std::optional<Violation> check_map_shape(int src_order, int dst_order, const VertexMap &m) {
  if (static_cast<int>(m.image.size()) != src_order)
    return violation("map-size", {}, "map has " + std::to_string(m.image.size()) + " entries for " +
                                         std::to_string(src_order) + " vertices");
  for (Vertex v = 0; v < src_order; ++v) {
    const Vertex t = m.image[static_cast<size_t>(v)];
    if (t < 0 || t >= dst_order) return violation("image-out-of-range", {v}, "image " + std::to_string(t));
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> is_star_coloring(const Graph &g, const Coloring &c) {
  if (static_cast<int>(c.color.size()) != g.order())
    return violation("size-mismatch", {}, "coloring has " + std::to_string(c.color.size()) + " entries");
  for (Vertex v = 0; v < g.order(); ++v) {
    const int k = at(c.color, v);
    if (k < 0 || k >= c.q) return violation("color-out-of-range", {v}, "color " + std::to_string(k));
  }
  for (const auto &[u, v] : g.edges())
    if (at(c.color, u) == at(c.color, v)) return violation("improper-edge", {u, v});
  for (const auto &[v, w] : g.edges()) {
    for (const Vertex a : g.neighbors(v)) {
      if (a == w || at(c.color, a) != at(c.color, w)) continue;
      for (const Vertex b : g.neighbors(w))
        if (b != v && b != a && at(c.color, b) == at(c.color, v)) return violation("bicolored-path", {a, v, w, b});
    }
  }
  return std::nullopt;
}

std::optional<Coloring> find_star_coloring(const Graph &g, int q) {
  if (q < 1) return std::nullopt;
  const int n = g.order();
  std::vector<Vertex> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  std::vector<int> col(static_cast<size_t>(n), -1);
  std::function<bool(int, int)> place = [&](int pos, int used) -> bool {
    if (pos == n) return true;
    const Vertex v = order[static_cast<size_t>(pos)];
    const int top = std::min(q - 1, used);  // colors 0..used-1 are in use
    for (int k = 0; k <= top; ++k) {
      col[static_cast<size_t>(v)] = k;
      if (!local_violation(g, col, v) && place(pos + 1, std::max(used, k + 1))) return true;
    }
    col[static_cast<size_t>(v)] = -1;
    return false;
  };
  if (!place(0, 0)) return std::nullopt;
  // Rename colors by first appearance in vertex order, so vertex 0 gets 0.
  std::vector<int> rename(static_cast<size_t>(q), -1);
  int next = 0;
  for (int &c : col) {
    int &r = rename[static_cast<size_t>(c)];
    if (r < 0) r = next++;
    c = r;
  }
  return Coloring{std::move(col), q};
}

std::optional<StarChromatic> star_chromatic_number(const Graph &g, int qmax) {
  for (int q = 1; q <= qmax; ++q) {
    if (auto c = find_star_coloring(g, q)) return StarChromatic{q, std::move(*c)};
  }
  return std::nullopt;
}

std::optional<Violation> is_lbh(const Graph &src, const Graph &dst, const VertexMap &m) {
  if (auto bad = check_map_shape(src.order(), dst.order(), m)) return bad;
  auto psi = [&](Vertex v) { return m.image[static_cast<size_t>(v)]; };
  for (Vertex v = 0; v < src.order(); ++v) {
    const Vertex t = psi(v);
    if (src.degree(v) != dst.degree(t))
      return violation("size-mismatch", {v}, "deg " + std::to_string(src.degree(v)) + " maps onto deg " +
                                                 std::to_string(dst.degree(t)));
    std::vector<std::pair<Vertex, Vertex>> seen;  // (image, preimage)
    for (const Vertex w : src.neighbors(v)) {
      if (!dst.adjacent(t, psi(w))) return violation("non-edge-image", {v, w});
      for (const auto &[img, pre] : seen)
        if (img == psi(w)) return violation("collision", {v, pre, w});
      seen.emplace_back(psi(w), w);
    }
  }
  return std::nullopt;
}

std::optional<Violation> is_onh(const Digraph &src, const Digraph &dst, const VertexMap &m, OnhMode mode) {
  if (auto bad = check_map_shape(src.order(), dst.order(), m)) return bad;
  auto psi = [&](Vertex v) { return m.image[static_cast<size_t>(v)]; };
  for (Vertex v = 0; v < src.order(); ++v) {
    const Vertex t = psi(v);
    const auto out = src.out_neighbors(v);
    if (mode == OnhMode::Bijective && out.size() != dst.out_neighbors(t).size())
      return violation("size-mismatch", {v}, "out-degree " + std::to_string(out.size()) + " maps onto out-degree " +
                                                 std::to_string(dst.out_neighbors(t).size()));
    std::vector<std::pair<Vertex, Vertex>> seen;
    for (const Vertex w : out) {
      if (!dst.has_arc(t, psi(w))) return violation("non-arc-image", {v, w});
      for (const auto &[img, pre] : seen)
        if (img == psi(w)) return violation("collision", {v, pre, w});
      seen.emplace_back(psi(w), w);
    }
  }
  return std::nullopt;
}

Digraph complete_symmetric_digraph(int q) { return symmetric_digraph(complete_graph(q)); }

OnihWitness coloring_to_onih(const Graph &g, const Coloring &c) {
  if (auto bad = is_star_coloring(g, c)) throw WitnessError(std::move(*bad));
  auto count_colored = [&](Vertex x, int k) {
    int cnt = 0;
    for (const Vertex y : g.neighbors(x)) cnt += at(c.color, y) == k ? 1 : 0;
    return cnt;
  };
  std::vector<bool> forward(g.edges().size());
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const auto [u, v] = g.edges()[e];
    const int cu = count_colored(u, at(c.color, v));  // u's neighbours sharing v's color
    const int cv = count_colored(v, at(c.color, u));
    if (cu >= 2 && cv >= 2) throw std::logic_error("bicolored component is not a star");
    Vertex center = u;  // bare edge: smaller endpoint
    if (cu >= 2)
      center = u;
    else if (cv >= 2)
      center = v;
    forward[e] = (center == v);  // arc leaf -> center
  }
  return {Orientation(g, std::move(forward)), VertexMap{c.color}};
}

OnihColoring onih_to_coloring(const Orientation &o, const VertexMap &m, int q) {
  if (auto bad = is_onh(o.digraph(), complete_symmetric_digraph(q), m, OnhMode::Injective))
    throw WitnessError(std::move(*bad));
  OnihColoring out;
  out.coloring = Coloring{m.image, q};
  out.counterexample = is_star_coloring(o.base(), out.coloring);
  return out;
}

std::optional<VertexMap> find_lbh(const Graph &src, const Graph &dst) {
  const int n = src.order();
  if (n == 0) return VertexMap{};
  if (dst.order() == 0) return std::nullopt;

  // BFS order per component; roots are the only vertices with free choice.
  std::vector<Vertex> order;
  std::vector<char> queued(static_cast<size_t>(n), 0);
  for (Vertex r = 0; r < n; ++r) {
    if (queued[static_cast<size_t>(r)]) continue;
    queued[static_cast<size_t>(r)] = 1;
    size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      const Vertex v = order[head++];
      for (const Vertex w : src.neighbors(v)) {
        if (queued[static_cast<size_t>(w)]) continue;
        queued[static_cast<size_t>(w)] = 1;
        order.push_back(w);
      }
    }
  }

  std::vector<Vertex> psi(static_cast<size_t>(n), -1);
  auto img = [&](Vertex v) { return psi[static_cast<size_t>(v)]; };
  auto consistent = [&](Vertex v, Vertex c) {
    if (src.degree(v) != dst.degree(c)) return false;
    for (const Vertex u : src.neighbors(v)) {
      const Vertex iu = img(u);
      if (iu < 0) continue;
      if (!dst.adjacent(iu, c)) return false;
      // c must be new inside N(u), and iu new inside N(v)
      for (const Vertex x : src.neighbors(u))
        if (x != v && img(x) == c) return false;
      for (const Vertex x : src.neighbors(v))
        if (x != u && img(x) == iu) return false;
    }
    return true;
  };

  std::function<bool(size_t)> place = [&](size_t pos) -> bool {
    if (pos == order.size()) return true;
    const Vertex v = order[pos];
    Vertex anchor = -1;
    for (const Vertex u : src.neighbors(v))
      if (img(u) >= 0) {
        anchor = u;
        break;
      }
    std::vector<Vertex> candidates;
    if (anchor >= 0) {
      const auto nb = dst.neighbors(img(anchor));
      candidates.assign(nb.begin(), nb.end());
    } else {
      candidates.resize(static_cast<size_t>(dst.order()));
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (const Vertex c : candidates) {
      if (!consistent(v, c)) continue;
      psi[static_cast<size_t>(v)] = c;
      if (place(pos + 1)) return true;
    }
    psi[static_cast<size_t>(v)] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  VertexMap out{std::move(psi)};
  if (is_lbh(src, dst, out)) throw std::logic_error("find_lbh produced an invalid map");
  return out;
}

std::optional<VertexMap> find_onh(const Digraph &src, const Digraph &dst, OnhMode mode) {
  const int n = src.order();
  if (n == 0) return VertexMap{};
  if (dst.order() == 0) return std::nullopt;
  std::vector<Vertex> psi(static_cast<size_t>(n), -1);
  auto img = [&](Vertex v) { return psi[static_cast<size_t>(v)]; };

  auto consistent = [&](Vertex v, Vertex c) {
    if (mode == OnhMode::Bijective && src.out_neighbors(v).size() != dst.out_neighbors(c).size()) return false;
    for (const Vertex w : src.out_neighbors(v))  // arcs v -> w
      if (img(w) >= 0 && !dst.has_arc(c, img(w))) return false;
    for (const Vertex u : src.in_neighbors(v)) {  // arcs u -> v
      if (img(u) < 0) continue;
      if (!dst.has_arc(img(u), c)) return false;
      for (const Vertex x : src.out_neighbors(u))
        if (x != v && img(x) == c) return false;
    }
    const auto out = src.out_neighbors(v);
    for (size_t a = 0; a < out.size(); ++a)
      for (size_t b = a + 1; b < out.size(); ++b)
        if (img(out[a]) >= 0 && img(out[a]) == img(out[b])) return false;
    return true;
  };

  std::function<bool(Vertex)> place = [&](Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex c = 0; c < dst.order(); ++c) {
      if (!consistent(v, c)) continue;
      psi[static_cast<size_t>(v)] = c;
      if (place(v + 1)) return true;
    }
    psi[static_cast<size_t>(v)] = -1;
    return false;
  };
  if (!place(0)) return std::nullopt;
  VertexMap out{std::move(psi)};
  if (is_onh(src, dst, out, mode)) throw std::logic_error("find_onh produced an invalid map");
  return out;
}

int max_neighborhood_independence(const Graph &g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto nb = g.neighbors(v);
    std::vector<Vertex> chosen;
    std::function<void(size_t)> grow = [&](size_t from) {
      best = std::max(best, static_cast<int>(chosen.size()));
      if (chosen.size() + (nb.size() - from) <= static_cast<size_t>(best)) return;
      for (size_t i = from; i < nb.size(); ++i) {
        const bool free = std::none_of(chosen.begin(), chosen.end(), [&](Vertex c) { return g.adjacent(c, nb[i]); });
        if (!free) continue;
        chosen.push_back(nb[i]);
        grow(i + 1);
        chosen.pop_back();
      }
    };
    grow(0);
  }
  return best;
}

bool is_k1t_free(const Graph &g, int t) { return max_neighborhood_independence(g) < t; }

IntPolynomial divisibility_divisor(int p) {
  if (p < 2) throw InvalidParameter("divisibility_divisor: p must be at least 2");
  auto lin = [](long root) { return IntPolynomial::linear(BigInt(root)); };
  const auto pu = static_cast<unsigned>(p);
  return product_power<BigInt>({{lin(2L * p), 1U},
                                {lin(-2), (pu - 1) * (pu + 2) / 2},
                                {lin(2), pu * (pu + 1) / 2},
                                {lin(p - 2L), pu + 1},
                                {lin(-static_cast<long>(p)), pu + 1}});
}

DivisibilityReport divisibility_check(const Graph &g, int p, bool force_division) {
  if (p < 2) throw InvalidParameter("divisibility_check: p must be at least 2");
  DivisibilityReport r;
  r.p = p;

  const int d = 2 * p;
  r.regular.holds = g.order() > 0;
  for (Vertex v = 0; v < g.order() && r.regular.holds; ++v) {
    if (g.degree(v) != d) {
      r.regular.holds = false;
      r.regular.detail = "not " + std::to_string(d) + "-regular: vertex " + std::to_string(v) + " has degree " +
                         std::to_string(g.degree(v));
    }
  }
  if (r.regular.holds) r.regular.detail = std::to_string(d) + "-regular";

  const int alpha = max_neighborhood_independence(g);
  r.claw_free.holds = alpha < p + 1;
  r.claw_free.detail = "largest independent set in a neighbourhood has " + std::to_string(alpha) +
                       " vertices; K_{1," + std::to_string(p + 1) + "}-free requires at most " + std::to_string(p);

  r.star_coloring = find_star_coloring(g, p + 2);
  r.colorable.holds = r.star_coloring.has_value();
  r.colorable.detail = r.colorable.holds ? "star " + std::to_string(p + 2) + "-coloring found"
                                         : "no star " + std::to_string(p + 2) + "-coloring exists";

  r.divisor = divisibility_divisor(p);
  if (formula_lstar(RegularSpectrumHandle::from_graph(complete_graph(p + 2))) != r.divisor)
    throw std::logic_error("divisor disagrees with char(L*(K_{p+2}))");

  r.char_a = charpoly_exact(adjacency_matrix(g));
  if (r.hypotheses_hold() || force_division) r.division = exact_divide(r.char_a, r.divisor);
  return r;
}

}  // namespace olg
