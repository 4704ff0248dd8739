// SPDX-License-Identifier: Apache-2.0
//
// graph6 encoding of simple undirected graphs.
//
// Layout: N(n) followed by the upper triangle of the adjacency matrix in
// column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), six bits per byte,
// most significant bit first, zero padded, each byte offset by 63.
// N(n) is one byte n+63 for n <= 62, '~' plus three bytes for n <= 258047,
// and "~~" plus six bytes beyond that.

#ifndef OLG_GRAPH6_HPP
#define OLG_GRAPH6_HPP

#include <string>
#include <string_view>

#include "olg/graph.hpp"

namespace olg {

/// Largest vertex count this implementation reads or writes.
inline constexpr long kGraph6MaxOrder = 258047;

/// Parses one graph6 line; an optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError carrying the byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 string (no header, no newline).
std::string write_graph6(const Graph &g);

}  // namespace olg

#endif  // OLG_GRAPH6_HPP
