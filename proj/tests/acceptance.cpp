// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Prints one PASS/FAIL line per criterion (with indented
// detail lines under it) and exits nonzero when any selected criterion fails.
//
//   olg_acceptance                 run all criteria
//   olg_acceptance --criterion N   run only criterion N

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "olg/graph6.hpp"
#include "olg/line_operators.hpp"
#include "olg/spectral_identities.hpp"
#include "olg/star_homomorphism.hpp"
#include "oracles.hpp"

namespace {

using namespace olg;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> details;

  void check(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      details.push_back("failed: " + what);
    }
  }
};

struct Named {
  std::string name;
  Graph graph;
};

const std::vector<Named> &corpus() {
  static const std::vector<Named> c = [] {
    const int wagner[] = {1, 4};
    std::vector<Named> out{{"K4", complete_graph(4)},
                           {"K5", complete_graph(5)},
                           {"K6", complete_graph(6)},
                           {"K3,3", complete_bipartite_graph(3, 3)},
                           {"Petersen", petersen_graph()},
                           {"Q3", hypercube_graph(3)},
                           {"circulant(8;1,4)", circulant_graph(8, wagner)}};
    for (int n = 4; n <= 10; n += 2)
      for (auto &g : oracle::connected_cubic_graphs(n)) out.push_back({"cubic:" + write_graph6(g), std::move(g)});
    return out;
  }();
  return c;
}

std::string count_of(std::size_t k, const std::string &noun) { return std::to_string(k) + " " + noun; }

Outcome criterion_lstar() {
  Outcome o;
  for (const auto &[name, g] : corpus()) {
    const auto h = RegularSpectrumHandle::from_graph(g);
    const auto b = nonbacktracking_matrix(g);
    const IntPolynomial direct = charpoly_exact(IntMatrix(b + b.transpose()));
    o.check(direct == formula_lstar(h), name + " lstar");
  }
  o.summary = "char(B+B^T) equals the L* closed form on " + count_of(corpus().size(), "corpus graphs");
  return o;
}

Outcome criterion_other_operators() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto &[name, g] : corpus()) {
    const auto h = RegularSpectrumHandle::from_graph(g);
    for (const auto id : {Identity::Line, Identity::Skew, Identity::Hermitian, Identity::NonBacktracking}) {
      o.check(verify_identity(h, id).equal, name + " " + std::string(to_string(id)));
      ++checks;
    }
  }
  o.summary = "line, skew, hermitian and non-backtracking closed forms exact (" + count_of(checks, "comparisons") + ")";
  return o;
}

Outcome criterion_signed() {
  Outcome o;
  std::size_t checks = 0;
  for (const auto &[name, g] : corpus()) {
    const auto h = RegularSpectrumHandle::from_graph(g);
    const std::vector<std::pair<std::string, Orientation>> orientations{{"auto", Orientation::ascending(g)},
                                                                        {"reverse", Orientation::descending(g)},
                                                                        {"random:1", Orientation::random(g, 1)},
                                                                        {"random:2", Orientation::random(g, 2)}};
    const auto expected = formula_signed(h);
    for (const auto &[label, orient] : orientations) {
      o.check(charpoly_exact(signed_adjacency(signed_line_graph(g, orient))) == expected, name + " signed " + label);
      ++checks;
    }
    o.check(formula_line(h) * expected == formula_lstar(h), name + " product identity");
  }
  o.summary = "signed line graph charpoly exact for " + count_of(checks, "graph/orientation pairs") +
              ", line * signed = lstar on every corpus graph";
  return o;
}

Outcome criterion_integrality() {
  Outcome o;
  for (const auto &[name, g] : corpus()) {
    const auto h = RegularSpectrumHandle::from_graph(g);
    if (integrality_check(h.char_a)) o.check(integrality_check(formula_lstar(h)).has_value(), name + " integral L*");
  }
  for (const auto *name : {"K4", "K6", "K3,3", "Petersen", "Q3"}) {
    for (const auto &[n, g] : corpus())
      if (n == name) o.check(integrality_check(formula_lstar(RegularSpectrumHandle::from_graph(g))).has_value(), n);
  }
  const auto k4 = complete_graph(4);
  const auto k4_expected = oracle::from_roots({{4, 1}, {2, 3}, {-2, 5}, {0, 3}});
  o.check(formula_lstar(RegularSpectrumHandle::from_graph(k4)) == k4_expected, "char(L*(K4)) closed form");
  o.check(charpoly_exact(lstar_adjacency(k4)) == k4_expected, "char(L*(K4)) direct 12x12");
  const auto p = petersen_graph();
  const auto p_expected = oracle::from_roots({{4, 1}, {2, 11}, {-2, 5}, {-1, 4}, {0, 5}, {-3, 4}});
  o.check(formula_lstar(RegularSpectrumHandle::from_graph(p)) == p_expected, "char(L*(Petersen)) closed form");
  o.check(charpoly_exact(lstar_adjacency(p)) == p_expected, "char(L*(Petersen)) direct 30x30");
  o.summary = "integral corpus graphs have integral L*; K4 and Petersen L* spectra match the 12x12 and 30x30 computations";
  return o;
}

Outcome criterion_star_onih() {
  Outcome o;
  std::size_t graphs = 0, forward_fail = 0, converse_fail = 0, roundtrips = 0, roundtrip_fail = 0;
  std::string first_converse;
  for (int n = 1; n <= 5; ++n)
    for (const auto &g : oracle::all_graphs_up_to_iso(n)) {
      ++graphs;
      for (int q = 1; q <= n; ++q) {
        const bool star = oracle::brute_star_colorable(g, q);
        const bool onih = oracle::brute_onih_exists(g, q);
        if (star && !onih) ++forward_fail;
        if (onih && !star) {
          if (converse_fail++ == 0)
            first_converse = write_graph6(g) + " (n=" + std::to_string(n) + ", m=" + std::to_string(g.size()) +
                             ") with q=" + std::to_string(q);
        }
        if (const auto c = find_star_coloring(g, q)) {
          ++roundtrips;
          const auto w = coloring_to_onih(g, *c);
          const bool valid = oracle::brute_is_onih(g, w.orientation.forward(), w.map.image, q);
          const auto back = onih_to_coloring(w.orientation, w.map, q);
          if (!valid || back.coloring != *c || back.counterexample) ++roundtrip_fail;
        }
      }
    }
  o.check(forward_fail == 0, "star q-colorable => ONIH exists (" + std::to_string(forward_fail) + " violations)");
  o.check(converse_fail == 0, "ONIH exists => star q-colorable (" + std::to_string(converse_fail) +
                                  " (graph, q) violations; first: " + first_converse + ")");
  o.check(roundtrip_fail == 0, "coloring -> ONIH -> coloring round trip");
  o.details.push_back("forward direction: " + std::string(forward_fail == 0 ? "holds" : "fails") + " on " +
                      count_of(graphs, "graphs"));
  o.details.push_back("round trip: " + std::to_string(roundtrips - roundtrip_fail) + "/" + std::to_string(roundtrips) +
                      " colorings");
  if (converse_fail != 0) {
    // Concrete witness: P4 coloured 0,1,0,1 oriented u->v, v->w, x->w.
    const auto p4 = path_graph(4);
    const auto orient = Orientation::from_arcs(p4, {{0, 1}, {1, 2}, {3, 2}});
    const auto r = onih_to_coloring(orient, VertexMap{{0, 1, 0, 1}}, 2);
    o.details.push_back("witness: P4 with arcs 0->1, 1->2, 3->2 and psi = [0,1,0,1] is an ONIH into D(K2); "
                        "onih_to_coloring reports " +
                        (r.counterexample ? r.counterexample->kind : std::string("nothing")) +
                        ", while the star chromatic number of P4 is " +
                        std::to_string(star_chromatic_number(p4, 4)->q));
  }
  o.summary = "star q-colorability <=> (orientation, ONIH into D(K_q)) over all graphs with n <= 5";
  return o;
}

Outcome criterion_divisibility() {
  Outcome o;
  const auto g = underlying_and_line_graph(complete_graph(4)).lstar;
  const auto r = divisibility_check(g, 2);
  o.check(r.hypotheses_hold(), "L*(K4), p=2 hypotheses");
  o.check(r.division && r.division->divisible && r.division->quotient == oracle::P({1}), "L*(K4), p=2 quotient 1");
  for (int p = 2; p <= 5; ++p)
    o.check(divisibility_divisor(p) == formula_lstar(RegularSpectrumHandle::from_graph(complete_graph(p + 2))),
            "divisor equals char(L*(K_" + std::to_string(p + 2) + "))");
  const auto c5 = divisibility_check(cycle_graph(5), 2);
  o.check(!c5.regular.holds && c5.regular.detail.find("not 4-regular") != std::string::npos, "C5 rejected as not 4-regular");
  o.summary = "divisibility check passes on L*(K4) with quotient 1, divisor = char(L*(K_{p+2})) for p=2..5, C5 rejected";
  return o;
}

Outcome criterion_star_solver() {
  Outcome o;
  const std::vector<std::tuple<std::string, Graph, int>> cases{
      {"K4", complete_graph(4), 4}, {"C5", cycle_graph(5), 4}, {"P4", path_graph(4), 3}};
  for (const auto &[name, g, expected] : cases) {
    const auto r = star_chromatic_number(g, g.order());
    o.check(r && r->q == expected, name + " star chromatic number " + std::to_string(expected));
    if (!r) continue;
    o.check(!is_star_coloring(g, r->witness), name + " witness passes the checker");
    o.check(oracle::brute_star_colorable(g, expected), name + " brute force finds a " + std::to_string(expected) + "-coloring");
    o.check(!oracle::brute_star_colorable(g, expected - 1), name + " infeasible at q-1 by exhaustion");
  }
  o.summary = "star chromatic numbers K4=4, C5=4, P4=3 with witnesses and exhaustive infeasibility at q-1";
  return o;
}

Outcome criterion_graph6() {
  Outcome o;
  const auto graphs = oracle::all_graphs_up_to_iso(5);
  o.check(graphs.size() == 34, "34 graphs on 5 vertices");
  std::vector<std::string> codes;
  for (const auto &g : graphs) {
    const auto code = write_graph6(g);
    o.check(parse_graph6(code) == g, "round trip " + code);
    codes.push_back(code);
  }
  std::sort(codes.begin(), codes.end());
  o.check(std::adjacent_find(codes.begin(), codes.end()) == codes.end(), "distinct encodings");
  o.check(parse_graph6("C~") == complete_graph(4) && write_graph6(complete_graph(4)) == "C~", "C~ <-> K4");
  o.summary = "graph6 round trip on all " + count_of(graphs.size(), "graphs with n = 5") + " and C~ <-> K4";
  return o;
}

Outcome criterion_lbh_divisibility() {
  Outcome o;
  std::vector<Named> pool = corpus();
  const auto k4 = underlying_and_line_graph(complete_graph(4));
  const auto pet = underlying_and_line_graph(petersen_graph());
  pool.push_back({"L*(K4)", k4.lstar});
  pool.push_back({"L(K4)", k4.line});
  pool.push_back({"L*(Petersen)", pet.lstar});
  pool.push_back({"L(Petersen)", pet.line});

  std::vector<IntPolynomial> char_a;
  for (const auto &x : pool) char_a.push_back(charpoly_exact(adjacency_matrix(x.graph)));
  std::size_t searched = 0, found = 0, proper = 0;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      const auto &h = pool[i].graph, &t = pool[j].graph;
      // An LBH between connected regular graphs preserves degree and has
      // equal-sized fibres.
      if (h.degree(0) != t.degree(0) || h.order() % t.order() != 0) continue;
      ++searched;
      const auto m = find_lbh(h, t);
      if (!m) continue;
      ++found;
      if (h.order() != t.order()) ++proper;
      o.check(!is_lbh(h, t, *m), pool[i].name + " -> " + pool[j].name + " map is an LBH");
      o.check(exact_divide(char_a[i], char_a[j]).divisible, "char " + pool[j].name + " divides char " + pool[i].name);
    }
  const auto direct = find_lbh(k4.lstar, k4.line);
  o.check(direct.has_value(), "L*(K4) -> L(K4) found");
  o.summary = "char(J) divides char(H) for all " + std::to_string(found) + " LBHs found (" + std::to_string(proper) +
              " proper covers) among " + count_of(searched, "searched pairs");
  return o;
}

const std::vector<std::function<Outcome()>> &criteria() {
  static const std::vector<std::function<Outcome()>> c{
      criterion_lstar,      criterion_other_operators, criterion_signed,
      criterion_integrality, criterion_star_onih,       criterion_divisibility,
      criterion_star_solver, criterion_graph6,          criterion_lbh_divisibility};
  return c;
}

}  // namespace

int main(int argc, char **argv) {
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      selected.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: olg_acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (selected.empty())
    for (int k = 1; k <= static_cast<int>(criteria().size()); ++k) selected.push_back(k);

  bool all = true;
  for (const int k : selected) {
    if (k < 1 || k > static_cast<int>(criteria().size())) {
      std::cerr << "no criterion " << k << '\n';
      return 2;
    }
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria()[static_cast<std::size_t>(k - 1)]();
    } catch (const std::exception &e) {
      out.pass = false;
      out.summary = "threw";
      out.details.push_back(e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << k << ": " << out.summary << " [" << t.str() << " s]\n";
    for (const auto &d : out.details) std::cout << "      " << d << '\n';
    all = all && out.pass;
  }
  return all ? 0 : 1;
}
