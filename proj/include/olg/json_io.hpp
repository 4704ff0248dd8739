// SPDX-License-Identifier: Apache-2.0
//
// JSON forms of the library's values. Big integers are always decimal
// strings so no precision is lost.

#ifndef OLG_JSON_IO_HPP
#define OLG_JSON_IO_HPP

#include <string_view>
#include <vector>

#include <json.hpp>

#include "olg/graph.hpp"
#include "olg/line_operators.hpp"
#include "olg/polynomial.hpp"
#include "olg/spectral_identities.hpp"
#include "olg/star_homomorphism.hpp"

namespace olg {

using Json = nlohmann::ordered_json;

/// Ascending-degree decimal coefficient strings.
Json coeffs_json(const IntPolynomial &p);
/// {"coeffs": [...], "factored": "..."}; "factored" only when p has an integer root.
Json polynomial_json(const IntPolynomial &p);
IntPolynomial polynomial_from_json(const Json &j);

Json matrix_json(const IntMatrix &m);
/// Entries as ["re", "im"] pairs of decimal strings.
Json matrix_json(const GaussianMatrix &m);

Json graph_json(const Graph &g);
Json digraph_json(const Digraph &g);
Json arcs_json(const std::vector<Arc> &arcs);
std::vector<Arc> arcs_from_json(const Json &j);

Json report_json(const VerificationReport &r);
Json violation_json(const Violation &v);
Json coloring_json(const Coloring &c);
Json vertex_map_json(const VertexMap &m);
VertexMap vertex_map_from_json(const Json &j);
Json divisibility_json(const DivisibilityReport &r);

}  // namespace olg

#endif  // OLG_JSON_IO_HPP
