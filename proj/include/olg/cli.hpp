// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes: 0 success, 1 verification mismatch or
// failed search/check, 2 invalid input or violated hypothesis.

#ifndef OLG_CLI_HPP
#define OLG_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "olg/graph.hpp"
#include "olg/line_operators.hpp"

namespace olg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInvalid = 2;

struct NamedGraph {
  std::string label;
  Graph graph;
};

/// Resolves an input source: a generator spec ("complete:5", "petersen",
/// "cycle:n", "path:n", "circulant:n:a,b", "hypercube:k", "bipartite:a,b",
/// "empty:n"), a wrapped spec ("lstar:<src>", "line:<src>"), a file of
/// graph6 lines ("file:<path>" or "@<path>"), "-" for stdin, or a graph6 string.
std::vector<NamedGraph> read_graphs(std::string_view source, std::istream &in);

/// Digraph sources: "dline:<src>" for D(G), "olg:<src>" for OL(G),
/// "orient:<src>" for the ascending orientation of G, "dk:q" for D(K_q),
/// "arcs:n:[[u,v],...]" for an explicit arc list; a plain graph source means D(G).
Digraph read_digraph(std::string_view source, std::istream &in);

/// "auto" (lower -> higher endpoint), "reverse", "random:SEED", or a JSON arc list.
Orientation parse_orientation(const Graph &g, std::string_view spec);

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace olg::cli

#endif  // OLG_CLI_HPP
