// Acceptance gate for the certification pipeline.  Each criterion prints one
// PASS/FAIL line; the process exits 0 only when every line passed.  Time
// budgets are part of the criteria: a slow pass is a failure.
#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "qsrg/analysis.hpp"
#include "qsrg/aut_search.hpp"
#include "qsrg/catalog.hpp"
#include "qsrg/gamma.hpp"
#include "qsrg/graph.hpp"
#include "qsrg/group.hpp"
#include "qsrg/perm.hpp"
#include "qsrg/perm_group.hpp"
#include "qsrg/report.hpp"
#include "qsrg/symmetry.hpp"

namespace {

using namespace qsrg;

void require(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

std::string pair_name(const FiniteGroup& g, const Subgroup& h) {
  return g.label() + ":" + h.describe();
}

// Every catalog group in the order range, paired with each of its nontrivial
// proper subgroups.
std::vector<std::pair<FiniteGroup, Subgroup>> catalog_pairs(int lo, int hi) {
  std::vector<std::pair<FiniteGroup, Subgroup>> out;
  for (int order = lo; order <= hi; ++order)
    for (const FiniteGroup& g : catalog_groups_of_order(order))
      for (const Subgroup& h : all_subgroups(g))
        if (h.order() > 1 && h.order() < g.order()) out.emplace_back(g, h);
  return out;
}

// Positions of `original` vertices inside the sorted original_vertex list of
// an induced subgraph.
std::vector<int> induced_positions(const std::vector<int>& original,
                                   const std::vector<int>& domain) {
  std::vector<int> out;
  out.reserve(original.size());
  for (int v : original) {
    auto it = std::lower_bound(domain.begin(), domain.end(), v);
    require(it != domain.end() && *it == v, "vertex missing from induced domain");
    out.push_back(static_cast<int>(it - domain.begin()));
  }
  return out;
}

void criterion_trivial_srg() {
  const std::vector<std::string> specs = {"cyclic:5", "cyclic:6", "symmetric:3",
                                          "cyclic:7", "cyclic:8"};
  for (const std::string& text : specs) {
    FiniteGroup g = realize_group(parse_group_spec(text));
    const int n = g.order();
    GammaInstance inst = build_gamma(g, trivial_subgroup(g));
    Classification c = classify(empirical_profile(inst.graph));
    require(c.kind == Classification::Kind::srg, g.label() + ": not strongly regular");
    require(c.n == n * n, g.label() + ": wrong vertex count");
    require(c.degree == 3 * n - 3, g.label() + ": degree is not 3n-3");
    require(c.a.has_value() && *c.a == n, g.label() + ": adjacent count is not n");
    require(c.c_set == std::set<int>{6}, g.label() + ": non-adjacent count is not 6");
  }
}

void criterion_parameter_match(std::string& note) {
  auto pairs = catalog_pairs(5, 12);
  require(pairs.size() == 77,
          "expected 77 catalog pairs, found " + std::to_string(pairs.size()));
  for (const auto& [g, h] : pairs) {
    ParameterMatch m = certify_parameters(g, h);
    require(m.graph_built && !m.degenerate, pair_name(g, h) + ": did not build");
    require(m.all_match, pair_name(g, h) + ": parameters disagree");
    require(m.prediction.a == g.order() - 2 * h.order() + 2,
            pair_name(g, h) + ": predicted a is off formula");
    require(m.profile.a_values == std::set<int>{m.prediction.a},
            pair_name(g, h) + ": empirical a disagrees");
    require(m.profile.c_values == m.prediction.c_set,
            pair_name(g, h) + ": empirical c-set disagrees");

    PredictionCase expect;
    if (g.order() / h.order() == 2)
      expect = PredictionCase::index2;
    else if (is_normal(g, h))
      expect = h.order() == 2 ? PredictionCase::normal_h2 : PredictionCase::normal_hbig;
    else
      expect = h.order() == 2 ? PredictionCase::nonnormal_h2 : PredictionCase::nonnormal_hbig;
    require(m.prediction.tag == expect,
            pair_name(g, h) + ": case tagged " + to_string(m.prediction.tag));
  }
  note = std::to_string(pairs.size()) + " pairs";
}

void criterion_neighbourhood_structure() {
  for (const auto& [g, h] : catalog_pairs(5, 12)) {
    GammaInstance inst = build_gamma(g, h);
    const ConnectionFamily& f = inst.family;
    const int index = g.order() / h.order();
    const std::vector<int>* sides[3] = {&f.S1, &f.S2, &f.S3};
    const std::vector<std::vector<int>>* blocks[3] = {&f.S1_blocks, &f.S2_blocks,
                                                      &f.S3_blocks};
    const std::vector<int>* extras[3] = {&f.H1, &f.H2, &f.H3};
    const std::vector<int>* unions[3] = {&f.C1, &f.C2, &f.C3};
    for (int i = 0; i < 3; ++i) {
      const std::string where = pair_name(g, h) + " branch " + std::to_string(i + 1);

      InducedSubgraph on_s = induced_subgraph(inst.graph, *sides[i]);
      std::vector<std::vector<int>> parts;
      for (const std::vector<int>& b : *blocks[i])
        parts.push_back(induced_positions(b, on_s.original_vertex));
      require(static_cast<int>(parts.size()) == index - 1,
              where + ": wrong part count off the subgroup");
      for (const std::vector<int>& p : parts)
        require(static_cast<int>(p.size()) == h.order(), where + ": wrong part size");
      require(is_complete_multipartite(on_s.graph, parts),
              where + ": branch subgraph is not complete multipartite");

      InducedSubgraph on_c = induced_subgraph(inst.graph, *unions[i]);
      std::vector<std::vector<int>> cparts;
      for (const std::vector<int>& b : *blocks[i])
        cparts.push_back(induced_positions(b, on_c.original_vertex));
      cparts.push_back(induced_positions(*extras[i], on_c.original_vertex));
      require(static_cast<int>(cparts.size()) == index,
              where + ": wrong part count with the subgroup");
      require(is_complete_multipartite(on_c.graph, cparts),
              where + ": extended branch subgraph is not complete multipartite");
    }
  }
}

void criterion_order_agreement(std::string& note) {
  auto pairs = catalog_pairs(5, 8);
  require(pairs.size() == 32,
          "expected 32 catalog pairs, found " + std::to_string(pairs.size()));
  for (const auto& [g, h] : pairs) {
    SymmetryVerdict v = certify_aut_group(build_gamma(g, h));
    require(v.applicable, pair_name(g, h) + ": prediction not applicable");
    require(v.searched_order.has_value(), pair_name(g, h) + ": search leg skipped");
    require(v.predicted_full == v.generated_order && v.generated_order == *v.searched_order,
            pair_name(g, h) + ": orders disagree (predicted " +
                std::to_string(v.predicted_full) + ", generated " +
                std::to_string(v.generated_order) + ", searched " +
                std::to_string(*v.searched_order) + ")");
  }

  // The two pinned orders, re-counted by the naive backtracking oracle.
  FiniteGroup z6 = cyclic_group(6);
  require(oracle::graph_aut_count_by_backtracking(
              build_gamma(z6, Subgroup(z6, {0, 3})).graph) == 432,
          "Z6:{0,3} naive count is not 432");
  FiniteGroup s3 = symmetric_group(3);
  require(oracle::graph_aut_count_by_backtracking(
              build_gamma(s3, Subgroup(s3, {0, 2})).graph) == 144,
          "S3:{0,2} naive count is not 144");
  note = std::to_string(pairs.size()) + " pairs";
}

void criterion_map_algebra(std::string& note) {
  int groups = 0;
  for (int order = 5; order <= 12; ++order)
    for (const FiniteGroup& g : catalog_groups_of_order(order)) {
      ++groups;
      const int n = g.order();
      const Perm sigma = swap_map(g);
      const Perm alpha = rotate_map(g);
      require(compose(sigma, sigma).is_identity(), g.label() + ": swap squared");
      require(compose(alpha, compose(alpha, alpha)).is_identity(),
              g.label() + ": rotate cubed");
      require(compose(sigma, alpha) == compose(alpha.inverse(), sigma),
              g.label() + ": swap does not invert rotate");

      std::vector<Perm> psi;
      psi.reserve(static_cast<std::size_t>(n) * n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) psi.push_back(translation_map(g, a, b));
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            for (int d = 0; d < n; ++d)
              if (compose(psi[a * n + b], psi[c * n + d]) !=
                  psi[g.mul(c, a) * n + g.mul(d, b)])
                throw std::runtime_error(g.label() + ": translation composition at (" +
                                         std::to_string(a) + "," + std::to_string(b) +
                                         ")(" + std::to_string(c) + "," +
                                         std::to_string(d) + ")");

      for (const GroupAut& f : automorphism_group(g)) {
        const Perm lift = lifted_map(g, f.mapping);
        require(compose(lift, sigma) == compose(sigma, lift),
                g.label() + ": lift does not commute with swap");
        require(compose(lift, alpha) == compose(alpha, lift),
                g.label() + ": lift does not commute with rotate");
      }
    }
  note = std::to_string(groups) + " groups";
}

void criterion_transitivity_equivalence(std::string& note) {
  int transitive = 0;
  for (const auto& [g, h] : catalog_pairs(5, 8)) {
    GammaInstance inst = build_gamma(g, h);
    PermGroup aut = automorphism_search(inst.graph);
    TransitivityVerdict t = transitivity_by_orbits(inst, aut);
    const bool condition = edge_transitivity_condition(g, h);
    require(t.edge == t.arc, pair_name(g, h) + ": edge and arc orbits disagree");
    require(t.edge == condition, pair_name(g, h) + ": orbit count " +
                                     (t.edge ? "1" : ">1") + " but condition " +
                                     (condition ? "holds" : "fails"));
    if (condition) ++transitive;
  }
  require(transitive == 9,
          "expected 9 edge-transitive pairs, found " + std::to_string(transitive));
  note = std::to_string(transitive) + " transitive";
}

void criterion_quotient_consequence(std::string& note) {
  SweepOptions options;
  options.max_order = 12;
  SweepResult result = sweep_catalog(options);
  require(result.fail_count == 0 && result.pass_count == 77,
          "sweep did not pass cleanly (" + std::to_string(result.pass_count) + "/" +
              std::to_string(result.fail_count) + ")");
  int found = 0;
  for (const CertificationReport& r : result.reports)
    if (r.symmetry && r.symmetry->edge_transitive_condition) {
      ++found;
      require(r.symmetry->elementary_abelian_quotient.has_value() &&
                  *r.symmetry->elementary_abelian_quotient,
              instance_label(r) + ": edge-transitive without elementary abelian quotient");
    }
  require(found == static_cast<int>(result.edge_transitive_instances.size()),
          "sweep summary disagrees with the reports");
  require(found == 16,
          "expected 16 edge-transitive instances, found " + std::to_string(found));
  note = std::to_string(found) + " instances";
}

void criterion_converse_failure_witness() {
  FiniteGroup g = direct_product(cyclic_group(4), cyclic_group(2));
  // Both cyclic order-4 subgroups: generated by (1,0) and by (1,1).
  for (int generator : {2, 3}) {
    Subgroup h = subgroup_generate(g, {generator});
    const std::string where = pair_name(g, h);
    require(h.order() == 4, where + ": generator does not have order 4");
    FiniteGroup q = quotient(g, h);
    require(q.order() == 2, where + ": quotient is not Z2");
    require(is_elementary_abelian(q), where + ": quotient is not elementary abelian");
    require(!edge_transitivity_condition(g, h), where + ": condition unexpectedly holds");
    GammaInstance inst = build_gamma(g, h);
    PermGroup aut = automorphism_search(inst.graph);
    require(orbits_on_edges(aut, inst.graph).size() > 1, where + ": one edge orbit");
    require(orbits_on_arcs(aut, inst.graph).size() > 1, where + ": one arc orbit");
  }
}

void check_search_against_scan(const Graph& graph, const std::string& what) {
  const std::uint64_t searched = group_order(automorphism_search(graph));
  const long long scanned = oracle::graph_aut_count_by_perm_scan(graph);
  if (searched != static_cast<std::uint64_t>(scanned))
    throw std::runtime_error(what + ": search found " + std::to_string(searched) +
                             ", scan found " + std::to_string(scanned));
}

void criterion_oracle_backstop(std::string& note) {
  for (const auto& [g, h] : catalog_pairs(5, 12))
    require(oracle::gamma_by_definition(g, h) == build_gamma(g, h).graph,
            pair_name(g, h) + ": edge sets disagree with the definition");

  long long graphs = 0;
  for (int n = 1; n <= 6; ++n) {
    const int slots = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << slots); ++mask) {
      Graph graph(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (mask >> bit++ & 1) graph.add_edge(u, v);
      check_search_against_scan(graph, "order " + std::to_string(n) + " graph " +
                                           std::to_string(mask));
      ++graphs;
    }
  }

  std::mt19937 rng(271828);
  for (int n : {7, 8}) {
    const int trials = n == 7 ? 400 : 150;
    for (int trial = 0; trial < trials; ++trial) {
      std::bernoulli_distribution coin(0.1 + 0.8 * (trial % 9) / 8.0);
      Graph graph(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (coin(rng)) graph.add_edge(u, v);
      check_search_against_scan(graph, "order " + std::to_string(n) + " trial " +
                                           std::to_string(trial));
      ++graphs;
    }
  }

  // Structured anchors with known automorphism counts.
  Graph cube(8);
  for (int u = 0; u < 8; ++u)
    for (int b : {1, 2, 4})
      if (u < (u ^ b)) cube.add_edge(u, u ^ b);
  require(oracle::graph_aut_count_by_perm_scan(cube) == 48, "cube scan is not 48");
  check_search_against_scan(cube, "cube");

  Graph k44(8);
  for (int u = 0; u < 4; ++u)
    for (int v = 4; v < 8; ++v) k44.add_edge(u, v);
  require(oracle::graph_aut_count_by_perm_scan(k44) == 1152, "K4,4 scan is not 1152");
  check_search_against_scan(k44, "K4,4");

  Graph cycle(8);
  for (int u = 0; u < 8; ++u) cycle.add_edge(u, (u + 1) % 8);
  require(oracle::graph_aut_count_by_perm_scan(cycle) == 16, "C8 scan is not 16");
  check_search_against_scan(cycle, "C8");

  Graph complete(8);
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) complete.add_edge(u, v);
  require(oracle::graph_aut_count_by_perm_scan(complete) == 40320, "K8 scan is not 40320");
  check_search_against_scan(complete, "K8");

  graphs += 4;
  note = std::to_string(graphs) + " graphs";
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  double elapsed[10] = {};
  int passed = 0;

  // budget == 0 means no time limit; `bundled_with` adds an earlier
  // criterion's time to the budgeted total.
  auto run = [&](int number, const char* name, double budget, int bundled_with,
                 auto&& body) {
    std::string note;
    std::string detail;
    bool ok = true;
    const auto start = clock::now();
    try {
      body(note);
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    elapsed[number] = std::chrono::duration<double>(clock::now() - start).count();
    const double total = elapsed[number] + (bundled_with ? elapsed[bundled_with] : 0.0);
    if (ok && budget > 0 && total > budget) {
      ok = false;
      char buf[96];
      std::snprintf(buf, sizeof buf, "time budget exceeded (%.2f s of %.0f s allowed)",
                    total, budget);
      detail = buf;
    }
    if (ok) ++passed;
    char time_buf[32];
    std::snprintf(time_buf, sizeof time_buf, "%.2f", elapsed[number]);
    std::string line = "criterion " + std::to_string(number) + ": " +
                       (ok ? "PASS " : "FAIL ") + name;
    if (!note.empty()) line += " [" + note + "]";
    line += " (" + std::string(time_buf) + " s)";
    if (!ok) line += ": " + detail;
    std::puts(line.c_str());
    std::fflush(stdout);
  };

  run(1, "trivial-subgroup strongly regular family", 10, 0,
      [](std::string&) { criterion_trivial_srg(); });
  run(2, "catalog parameter match", 120, 0,
      [](std::string& note) { criterion_parameter_match(note); });
  run(3, "neighbourhood multipartite structure", 120, 2,
      [](std::string&) { criterion_neighbourhood_structure(); });
  run(4, "automorphism order triple agreement", 300, 0,
      [](std::string& note) { criterion_order_agreement(note); });
  run(5, "named-map algebra", 60, 0,
      [](std::string& note) { criterion_map_algebra(note); });
  run(6, "transitivity three-way equivalence", 300, 4,
      [](std::string& note) { criterion_transitivity_equivalence(note); });
  run(7, "edge-transitive instances have elementary abelian quotients", 0, 0,
      [](std::string& note) { criterion_quotient_consequence(note); });
  run(8, "converse failure witness", 30, 0,
      [](std::string&) { criterion_converse_failure_witness(); });
  run(9, "independent oracle agreement", 0, 0,
      [](std::string& note) { criterion_oracle_backstop(note); });

  std::printf("acceptance: %d/9 criteria passed\n", passed);
  return passed == 9 ? 0 : 1;
}
