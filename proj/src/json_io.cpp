// SPDX-License-Identifier: Apache-2.0

#include "olg/json_io.hpp"

#include "olg/graph6.hpp"

namespace olg {

Json coeffs_json(const IntPolynomial &p) {
  Json out = Json::array();
  for (const auto &c : p.coeffs()) out.push_back(c.str());
  return out;
}

Json polynomial_json(const IntPolynomial &p) {
  Json out;
  out["coeffs"] = coeffs_json(p);
  if (p.degree() > 0 && (p.is_monic() || p.leading() == -1)) {
    const auto split = extract_integer_roots(p.is_monic() ? p : IntPolynomial(-p));
    if (!split.roots.empty()) out["factored"] = factored_string(p);
  }
  return out;
}

IntPolynomial polynomial_from_json(const Json &j) {
  const Json &arr = j.is_object() ? j.at("coeffs") : j;
  std::vector<BigInt> c;
  for (const auto &e : arr) c.push_back(e.is_string() ? parse_decimal(e.get<std::string>()) : BigInt(e.get<long long>()));
  return IntPolynomial(std::move(c));
}

Json matrix_json(const IntMatrix &m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

Json matrix_json(const GaussianMatrix &m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(Json::array({m(i, j).re.str(), m(i, j).im.str()}));
    out.push_back(std::move(row));
  }
  return out;
}

Json graph_json(const Graph &g) {
  Json edges = Json::array();
  for (const auto &[u, v] : g.edges()) edges.push_back({u, v});
  Json out;
  out["n"] = g.order();
  out["m"] = g.size();
  out["graph6"] = write_graph6(g);
  out["edges"] = std::move(edges);
  return out;
}

Json arcs_json(const std::vector<Arc> &arcs) {
  Json out = Json::array();
  for (const auto &[u, v] : arcs) out.push_back({u, v});
  return out;
}

std::vector<Arc> arcs_from_json(const Json &j) {
  std::vector<Arc> out;
  for (const auto &a : j) {
    if (!a.is_array() || a.size() != 2) throw InvalidParameter("arc must be a [tail, head] pair");
    out.emplace_back(a[0].get<Vertex>(), a[1].get<Vertex>());
  }
  return out;
}

Json digraph_json(const Digraph &g) {
  Json out;
  out["n"] = g.order();
  out["arcs"] = arcs_json(g.arcs());
  return out;
}

Json report_json(const VerificationReport &r) {
  Json out;
  out["graph"] = r.graph;
  out["identity"] = std::string(to_string(r.identity));
  out["verdict"] = r.equal ? "equal" : "mismatch";
  out["formula_coeffs"] = coeffs_json(r.formula);
  out["direct_coeffs"] = coeffs_json(r.direct);
  const auto pj = polynomial_json(r.formula);
  if (pj.contains("factored")) out["factored"] = pj["factored"];
  if (r.mismatch_degree) {
    const auto k = *r.mismatch_degree;
    out["mismatch"] = {{"degree", k}, {"formula", r.formula.coeff(k).str()}, {"direct", r.direct.coeff(k).str()}};
  }
  return out;
}

Json violation_json(const Violation &v) {
  Json out;
  out["kind"] = v.kind;
  out["vertices"] = v.vertices;
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

Json coloring_json(const Coloring &c) { return c.color; }

Json vertex_map_json(const VertexMap &m) { return m.image; }

VertexMap vertex_map_from_json(const Json &j) {
  if (!j.is_array()) throw InvalidParameter("vertex map must be a JSON array of target indices");
  return VertexMap{j.get<std::vector<Vertex>>()};
}

Json divisibility_json(const DivisibilityReport &r) {
  auto verdict = [](const HypothesisVerdict &h) { return Json{{"holds", h.holds}, {"detail", h.detail}}; };
  Json out;
  out["p"] = r.p;
  out["hypotheses"] = {{"regular", verdict(r.regular)},
                       {"claw_free", verdict(r.claw_free)},
                       {"star_colorable", verdict(r.colorable)}};
  if (r.star_coloring) out["star_coloring"] = coloring_json(*r.star_coloring);
  out["divisor"] = polynomial_json(r.divisor);
  out["char_a"] = polynomial_json(r.char_a);
  if (r.division) {
    Json d;
    d["divisible"] = r.division->divisible;
    if (r.division->divisible) {
      d["quotient"] = polynomial_json(r.division->quotient);
    } else {
      Json rem = Json::array();
      for (const auto &c : r.division->remainder.coeffs()) rem.push_back(c.str());
      d["remainder"] = std::move(rem);
    }
    out["division"] = std::move(d);
  }
  return out;
}

}  // namespace olg
