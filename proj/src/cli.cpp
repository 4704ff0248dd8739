// SPDX-License-Identifier: Apache-2.0

#include "olg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "olg/graph6.hpp"
#include "olg/json_io.hpp"
#include "olg/spectral_identities.hpp"
#include "olg/star_homomorphism.hpp"

namespace olg::cli {

namespace {

int to_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto *end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end)
    throw InvalidParameter(std::string(what) + ": expected an integer, got '" + std::string(s) + "'");
  return value;
}

std::vector<int> int_list(std::string_view s, std::string_view what) {
  std::vector<int> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    out.push_back(to_int(s.substr(0, comma), what));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  if (out.empty()) throw InvalidParameter(std::string(what) + ": empty list");
  return out;
}

std::pair<std::string_view, std::string_view> split_head(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {s, {}};
  return {s.substr(0, colon), s.substr(colon + 1)};
}

std::optional<Graph> generator(std::string_view spec) {
  const auto [head, rest] = split_head(spec);
  if (head == "petersen" && rest.empty()) return petersen_graph();
  if (head == "complete") return complete_graph(to_int(rest, "complete"));
  if (head == "cycle") return cycle_graph(to_int(rest, "cycle"));
  if (head == "path") return path_graph(to_int(rest, "path"));
  if (head == "empty") return empty_graph(to_int(rest, "empty"));
  if (head == "hypercube") return hypercube_graph(to_int(rest, "hypercube"));
  if (head == "bipartite") {
    const auto parts = int_list(rest, "bipartite");
    if (parts.size() != 2) throw InvalidParameter("bipartite: expected two part sizes");
    return complete_bipartite_graph(parts[0], parts[1]);
  }
  if (head == "circulant") {
    const auto [n, offsets] = split_head(rest);
    return circulant_graph(to_int(n, "circulant"), int_list(offsets, "circulant offsets"));
  }
  return std::nullopt;
}

std::vector<NamedGraph> read_lines(std::istream &in) {
  std::vector<NamedGraph> out;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    out.push_back({line, parse_graph6(line)});
  }
  return out;
}

Json error_json(const std::string &label, const std::string &kind, const std::string &message) {
  Json j;
  j["input"] = label;
  j["error"] = {{"kind", kind}, {"message", message}};
  return j;
}

struct Context {
  std::istream &in;
  std::ostream &out;
  std::ostream &err;
  bool json = false;
};

// Runs body per graph, mapping exceptions to exit code 2; returns the worst code.
int for_each_graph(Context &ctx, const std::string &source,
                   const std::function<int(const NamedGraph &)> &body) {
  int worst = kExitOk;
  for (const auto &ng : read_graphs(source, ctx.in)) {
    int code = kExitOk;
    try {
      code = body(ng);
    } catch (const HypothesisError &e) {
      ctx.err << ng.label << ": hypothesis violated: " << e.what() << '\n';
      if (ctx.json) ctx.out << error_json(ng.label, to_string(e.violated()), e.what()).dump() << '\n';
      code = kExitInvalid;
    } catch (const std::invalid_argument &e) {
      ctx.err << ng.label << ": " << e.what() << '\n';
      if (ctx.json) ctx.out << error_json(ng.label, "invalid-input", e.what()).dump() << '\n';
      code = kExitInvalid;
    }
    worst = std::max(worst, code);
  }
  return worst;
}

std::string arc_list_string(const std::vector<Arc> &arcs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < arcs.size(); ++i) os << (i ? " " : "") << arcs[i].first << "->" << arcs[i].second;
  return os.str();
}

int cmd_build(Context &ctx, const std::string &op, const std::string &source) {
  return for_each_graph(ctx, source, [&](const NamedGraph &ng) {
    const Graph &g = ng.graph;
    Json j;
    j["input"] = ng.label;
    j["op"] = op;
    if (op == "dline") {
      const Digraph d = symmetric_digraph(g);
      j["digraph"] = digraph_json(d);
      if (!ctx.json) ctx.out << ng.label << ": D(G) n=" << d.order() << " arcs=" << d.size() << '\n' << arc_list_string(d.arcs()) << '\n';
    } else if (op == "olg") {
      const auto ol = oriented_line_graph(g);
      j["digraph"] = digraph_json(ol.digraph);
      j["vertices"] = arcs_json(ol.index.arcs());
      if (!ctx.json) {
        ctx.out << ng.label << ": OL(G) n=" << ol.digraph.order() << " arcs=" << ol.digraph.size() << '\n';
        for (int i = 0; i < ol.index.size(); ++i)
          ctx.out << "  " << i << " = (" << ol.index.arc(i).first << "," << ol.index.arc(i).second << ")\n";
        ctx.out << arc_list_string(ol.digraph.arcs()) << '\n';
      }
    } else {
      const auto lg = underlying_and_line_graph(g);
      const Graph &h = op == "lstar" ? lg.lstar : lg.line;
      j["graph"] = graph_json(h);
      if (op == "lstar") j["projection"] = lg.projection.psi;
      if (!ctx.json) ctx.out << ng.label << ": " << op << " n=" << h.order() << " m=" << h.size() << " graph6=" << write_graph6(h) << '\n';
    }
    if (ctx.json) ctx.out << j.dump() << '\n';
    return kExitOk;
  });
}

int cmd_charpoly(Context &ctx, const std::string &matrix, const std::string &source, const std::string &orient) {
  const auto kind = parse_operator_kind(matrix);
  if (!kind) throw InvalidParameter("unknown matrix kind '" + matrix + "'");
  return for_each_graph(ctx, source, [&](const NamedGraph &ng) {
    std::optional<Orientation> o;
    if (*kind == OperatorKind::Signed) o = parse_orientation(ng.graph, orient);
    const auto m = operator_matrix(ng.graph, *kind, o ? &*o : nullptr);
    const IntPolynomial p = std::visit([](const auto &mat) { return charpoly_exact(mat); }, m);
    if (ctx.json) {
      Json j;
      j["input"] = ng.label;
      j["matrix"] = std::string(to_string(*kind));
      const Json poly = polynomial_json(p);
      for (const auto &[k, v] : poly.items()) j[k] = v;
      ctx.out << j.dump() << '\n';
    } else {
      ctx.out << ng.label << " " << to_string(*kind) << ": " << to_string(p) << '\n';
      ctx.out << "  factored: " << factored_string(p) << '\n';
    }
    return kExitOk;
  });
}

int cmd_verify(Context &ctx, const std::string &identity, const std::string &source, const std::string &orient) {
  std::vector<Identity> ids;
  if (identity == "all") {
    ids.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
  } else if (auto id = parse_identity(identity)) {
    ids.push_back(*id);
  } else {
    throw InvalidParameter("unknown identity '" + identity + "'");
  }
  if (!ctx.json) ctx.out << std::left << std::setw(14) << "graph" << std::setw(11) << "identity" << std::setw(10) << "verdict" << "formula\n";
  return for_each_graph(ctx, source, [&](const NamedGraph &ng) {
    const auto h = RegularSpectrumHandle::from_graph(ng.graph);
    const Orientation o = parse_orientation(ng.graph, orient);
    int code = kExitOk;
    for (const Identity id : ids) {
      const auto r = verify_identity(h, id, &o);
      if (!r.equal) code = kExitFailure;
      if (ctx.json) {
        Json j = report_json(r);
        j["input"] = ng.label;
        ctx.out << j.dump() << '\n';
      } else {
        ctx.out << std::left << std::setw(14) << ng.label << std::setw(11) << to_string(id) << std::setw(10)
                << (r.equal ? "equal" : "MISMATCH") << factored_string(r.formula) << '\n';
        if (!r.equal) {
          const auto k = *r.mismatch_degree;
          ctx.out << "  first difference at x^" << k << ": formula " << r.formula.coeff(k) << ", direct "
                  << r.direct.coeff(k) << '\n';
        }
      }
    }
    return code;
  });
}

int cmd_starcolor(Context &ctx, const std::string &source, int qmax) {
  return for_each_graph(ctx, source, [&](const NamedGraph &ng) {
    const int limit = qmax > 0 ? qmax : std::max(1, ng.graph.order());
    const auto res = star_chromatic_number(ng.graph, limit);
    Json j;
    j["input"] = ng.label;
    if (res) {
      j["q"] = res->q;
      j["witness"] = coloring_json(res->witness);
      if (!ctx.json) ctx.out << ng.label << ": star chromatic number " << res->q << ", witness " << j["witness"].dump() << '\n';
    } else {
      j["q"] = nullptr;
      j["exceeds"] = limit;
      if (!ctx.json) ctx.out << ng.label << ": no star coloring with at most " << limit << " colors\n";
    }
    if (ctx.json) ctx.out << j.dump() << '\n';
    return res ? kExitOk : kExitFailure;
  });
}

int emit_hom(Context &ctx, Json j, bool ok, const std::string &human) {
  if (ctx.json)
    ctx.out << j.dump() << '\n';
  else
    ctx.out << human << '\n';
  return ok ? kExitOk : kExitFailure;
}

int cmd_hom(Context &ctx, const std::string &kind, const std::string &src, const std::string &dst,
            const std::string &map_text) {
  Json j;
  j["kind"] = kind;
  const bool checking = !map_text.empty();
  std::optional<VertexMap> map;
  if (checking) map = vertex_map_from_json(Json::parse(map_text));

  if (kind == "lbh") {
    const auto s = read_graphs(src, ctx.in);
    const auto d = read_graphs(dst, ctx.in);
    if (s.size() != 1 || d.size() != 1) throw InvalidParameter("hom expects exactly one source and one target graph");
    if (checking) {
      const auto bad = is_lbh(s[0].graph, d[0].graph, *map);
      j["valid"] = !bad;
      if (bad) j["violation"] = violation_json(*bad);
      return emit_hom(ctx, j, !bad, bad ? "not an LBH: " + violation_json(*bad).dump() : "valid LBH");
    }
    const auto found = find_lbh(s[0].graph, d[0].graph);
    j["found"] = found.has_value();
    if (found) j["map"] = vertex_map_json(*found);
    return emit_hom(ctx, j, found.has_value(), found ? "LBH found: " + j["map"].dump() : "no LBH exists");
  }
  if (kind == "onih" || kind == "onbh") {
    const OnhMode mode = kind == "onih" ? OnhMode::Injective : OnhMode::Bijective;
    const Digraph s = read_digraph(src, ctx.in);
    const Digraph d = read_digraph(dst, ctx.in);
    if (checking) {
      const auto bad = is_onh(s, d, *map, mode);
      j["valid"] = !bad;
      if (bad) j["violation"] = violation_json(*bad);
      return emit_hom(ctx, j, !bad, bad ? "not an " + kind + ": " + violation_json(*bad).dump() : "valid " + kind);
    }
    const auto found = find_onh(s, d, mode);
    j["found"] = found.has_value();
    if (found) j["map"] = vertex_map_json(*found);
    return emit_hom(ctx, j, found.has_value(), found ? kind + " found: " + j["map"].dump() : "no " + kind + " exists");
  }
  throw InvalidParameter("unknown homomorphism kind '" + kind + "'");
}

int cmd_divisibility(Context &ctx, const std::string &source, int p, bool force) {
  return for_each_graph(ctx, source, [&](const NamedGraph &ng) {
    const auto r = divisibility_check(ng.graph, p, force);
    const bool divisible = r.division && r.division->divisible;
    if (ctx.json) {
      Json j = divisibility_json(r);
      j["input"] = ng.label;
      ctx.out << j.dump() << '\n';
    } else {
      auto line = [&](const char *name, const HypothesisVerdict &h) {
        ctx.out << "  " << std::left << std::setw(16) << name << (h.holds ? "holds    " : "FAILS    ") << h.detail << '\n';
      };
      ctx.out << ng.label << ", p=" << p << '\n';
      line("regular", r.regular);
      line("claw-free", r.claw_free);
      line("star-colorable", r.colorable);
      ctx.out << "  divisor         " << factored_string(r.divisor) << '\n';
      if (r.division) {
        ctx.out << "  divisible       " << (divisible ? "yes, quotient " + factored_string(r.division->quotient) : std::string("no"))
                << '\n';
      }
    }
    if (!r.hypotheses_hold()) {
      ctx.err << ng.label << ": hypothesis violated for p=" << p << '\n';
      return kExitInvalid;
    }
    return divisible ? kExitOk : kExitFailure;
  });
}

}  // namespace

std::vector<NamedGraph> read_graphs(std::string_view source, std::istream &in) {
  if (source.empty()) throw InvalidParameter("empty input source");
  if (source == "-") return read_lines(in);
  const auto [head, rest] = split_head(source);
  if (source[0] == '@' || head == "file") {
    const std::string path(source[0] == '@' ? source.substr(1) : rest);
    std::ifstream f(path);
    if (!f) throw InvalidParameter("cannot open '" + path + "'");
    return read_lines(f);
  }
  if (head == "lstar" || head == "line") {
    auto inner = read_graphs(rest, in);
    for (auto &ng : inner) {
      const auto lg = underlying_and_line_graph(ng.graph);
      ng.graph = head == "lstar" ? lg.lstar : lg.line;
      ng.label = std::string(head) + ":" + ng.label;
    }
    return inner;
  }
  if (auto g = generator(source)) return {{std::string(source), std::move(*g)}};
  return {{std::string(source), parse_graph6(source)}};
}

Digraph read_digraph(std::string_view source, std::istream &in) {
  const auto [head, rest] = split_head(source);
  auto single = [&](std::string_view s) {
    auto gs = read_graphs(s, in);
    if (gs.size() != 1) throw InvalidParameter("expected exactly one graph in '" + std::string(s) + "'");
    return std::move(gs[0].graph);
  };
  if (head == "dline") return symmetric_digraph(single(rest));
  if (head == "olg") return oriented_line_graph(single(rest)).digraph;
  if (head == "orient") return Orientation::ascending(single(rest)).digraph();
  if (head == "dk") return complete_symmetric_digraph(to_int(rest, "dk"));
  if (head == "arcs") {
    const auto [n, list] = split_head(rest);
    return {to_int(n, "arcs"), arcs_from_json(Json::parse(list))};
  }
  return symmetric_digraph(single(source));
}

Orientation parse_orientation(const Graph &g, std::string_view spec) {
  if (spec.empty() || spec == "auto") return Orientation::ascending(g);
  if (spec == "reverse") return Orientation::descending(g);
  const auto [head, rest] = split_head(spec);
  if (head == "random") {
    std::uint64_t seed = 0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), seed);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) throw InvalidParameter("bad random orientation seed");
    return Orientation::random(g, seed);
  }
  return Orientation::from_arcs(g, arcs_from_json(Json::parse(spec)));
}

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) {
  CLI::App app{"Oriented line graphs, exact characteristic polynomials and star colorings"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit JSON lines");

  std::string op, source, matrix, orient = "auto", identity, kind, src, dst, map_text;
  int qmax = 0, p = 0;
  bool force = false;

  auto *build = app.add_subcommand("build", "Construct D(G), OL(G), L*(G) or L(G)")->fallthrough();
  build->add_option("--op", op, "dline | olg | lstar | line")->required()->check(CLI::IsMember({"dline", "olg", "lstar", "line"}));
  build->add_option("--in", source, "Input source")->required();

  auto *charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial of an operator matrix")->fallthrough();
  charpoly->add_option("--matrix", matrix, "lstar | line | nb | skew | hermitian | signed")->required();
  charpoly->add_option("--in", source, "Input source")->required();
  charpoly->add_option("--orient", orient, "auto | reverse | random:SEED | JSON arc list");

  auto *verify = app.add_subcommand("verify", "Check closed forms against direct computation")->fallthrough();
  verify->add_option("--identity", identity, "lstar | line | skew | hermitian | signed | nb | all")->required();
  verify->add_option("--in", source, "Input source")->required();
  verify->add_option("--orient", orient, "Orientation for the signed identity");

  auto *starcolor = app.add_subcommand("starcolor", "Star chromatic number with a witness")->fallthrough();
  starcolor->add_option("--in", source, "Input source")->required();
  starcolor->add_option("--qmax", qmax, "Largest number of colors to try (default: n)");

  auto *hom = app.add_subcommand("hom", "Check or search LBH / ONIH / ONBH maps")->fallthrough();
  hom->add_option("--kind", kind, "lbh | onih | onbh")->required()->check(CLI::IsMember({"lbh", "onih", "onbh"}));
  hom->add_option("--src", src, "Source graph or digraph")->required();
  hom->add_option("--dst", dst, "Target graph or digraph")->required();
  hom->add_option("--map", map_text, "JSON array of target vertices; omit to search");

  auto *divis = app.add_subcommand("divisibility", "Divisibility of char(A) for star (p+2)-colorable 2p-regular graphs")->fallthrough()->alias("thm7");
  divis->add_option("--in", source, "Input source")->required();
  divis->add_option("--p", p, "p >= 2")->required();
  divis->add_flag("--force", force, "Test divisibility even when a hypothesis fails");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  Context ctx{in, out, err, json};
  try {
    if (*build) return cmd_build(ctx, op, source);
    if (*charpoly) return cmd_charpoly(ctx, matrix, source, orient);
    if (*verify) return cmd_verify(ctx, identity, source, orient);
    if (*starcolor) return cmd_starcolor(ctx, source, qmax);
    if (*hom) return cmd_hom(ctx, kind, src, dst, map_text);
    if (*divis) return cmd_divisibility(ctx, source, p, force);
  } catch (const HypothesisError &e) {
    err << "hypothesis violated: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument &e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const nlohmann::json::exception &e) {
    err << "invalid JSON: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace olg::cli
