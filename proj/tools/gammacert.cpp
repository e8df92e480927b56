// gammacert: builds the double Cayley graph of a finite group relative to a
// subgroup, then certifies its regularity parameters, automorphism group, and
// transitivity properties against the closed-form predictions.
//
// Exit codes: 0 all claims hold, 1 some claim failed, 2 bad input or IO,
// 3 size bound exceeded or degenerate instance.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsrg/catalog.hpp"
#include "qsrg/errors.hpp"
#include "qsrg/gamma.hpp"
#include "qsrg/graph.hpp"
#include "qsrg/report.hpp"

namespace {

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_input = 2;
constexpr int exit_bound = 3;

struct PairArgs {
  std::string group_text;
  std::string subgroup_text;
  std::string out_path;
  qsrg::AnalyzeOptions options;
};

void add_pair_flags(CLI::App& cmd, PairArgs& args, bool with_search_flags) {
  cmd.add_option("--group", args.group_text,
                 "group spec: cyclic:N, dihedral:N, symmetric:N, quaternion, "
                 "product(<spec>,<spec>), or file:<path>")
      ->required();
  cmd.add_option("--subgroup", args.subgroup_text,
                 "subgroup generators: element indices, or cycles like \"(12)\" "
                 "for symmetric catalogs")
      ->required();
  cmd.add_flag("--allow-small", args.options.allow_small,
               "build graphs for groups of order below 5 (outside the certified range)");
  if (with_search_flags) {
    CLI::Option* skip = cmd.add_flag("--skip-bruteforce-aut", args.options.skip_search,
                                     "skip the independent graph-automorphism search");
    CLI::Option* force = cmd.add_flag(
        "--force-bruteforce-aut", args.options.force_search,
        "run the search up to 100 vertices instead of the default 64");
    skip->excludes(force);
    force->excludes(skip);
  }
}

std::pair<qsrg::FiniteGroup, qsrg::Subgroup> realize_pair(const PairArgs& args) {
  qsrg::GroupSpec spec = qsrg::parse_group_spec(args.group_text);
  qsrg::FiniteGroup g = qsrg::realize_group(spec);
  std::vector<int> gens = qsrg::parse_subgroup_generators(args.subgroup_text, spec, g);
  qsrg::Subgroup h = qsrg::subgroup_generate(g, gens);
  return {std::move(g), std::move(h)};
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw qsrg::parse_error("CannotWrite: cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out) throw qsrg::parse_error("CannotWrite: failed while writing " + path);
}

int run_analyze(const PairArgs& args) {
  auto [g, h] = realize_pair(args);
  qsrg::CertificationReport report = qsrg::certify_pair(g, h, args.options);
  std::cout << qsrg::render_summary(report);
  if (!args.out_path.empty()) write_text_file(args.out_path, qsrg::report_to_json(report));
  switch (report.overall) {
    case qsrg::CertificationReport::Overall::pass: return exit_pass;
    case qsrg::CertificationReport::Overall::fail: return exit_fail;
    case qsrg::CertificationReport::Overall::degenerate: return exit_bound;
  }
  return exit_fail;
}

int run_sweep(const qsrg::SweepOptions& options, const std::string& out_path) {
  if (options.max_order > 16)
    throw qsrg::parse_error("OrderBoundExceeded: --max-order is capped at 16");
  qsrg::SweepResult result = qsrg::sweep_catalog(options);
  std::cout << qsrg::render_sweep_summary(result);
  if (!out_path.empty()) write_text_file(out_path, qsrg::sweep_to_json(result));
  return result.fail_count > 0 ? exit_fail : exit_pass;
}

int run_export(const PairArgs& args) {
  auto [g, h] = realize_pair(args);
  qsrg::GammaInstance inst = qsrg::build_gamma(g, h, args.options.allow_small);

  const std::string group_path = args.out_path + ".group";
  const std::string edges_path = args.out_path + ".edges";
  {
    std::ofstream out(group_path);
    if (!out)
      throw qsrg::parse_error("CannotWrite: cannot open " + group_path + " for writing");
    qsrg::write_group_table(g, out);
    out.flush();
    if (!out) throw qsrg::parse_error("CannotWrite: failed while writing " + group_path);
  }
  {
    std::ofstream out(edges_path);
    if (!out)
      throw qsrg::parse_error("CannotWrite: cannot open " + edges_path + " for writing");
    qsrg::write_edge_list(inst.graph, out);
    out.flush();
    if (!out) throw qsrg::parse_error("CannotWrite: failed while writing " + edges_path);
  }
  std::cout << "wrote " << group_path << " (order " << g.order() << ")\n";
  std::cout << "wrote " << edges_path << " (" << inst.graph.vertex_count() << " vertices, "
            << inst.graph.edge_count() << " edges)\n";
  return exit_pass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "builds the double Cayley graph of a finite group relative to a subgroup "
      "and certifies its parameters, automorphism group, and transitivity"};
  app.require_subcommand(1);

  PairArgs analyze_args;
  CLI::App* analyze = app.add_subcommand("analyze", "certify a single (group, subgroup) pair");
  add_pair_flags(*analyze, analyze_args, true);
  analyze->add_option("--out", analyze_args.out_path, "write the structured report here");

  qsrg::SweepOptions sweep_options;
  std::string sweep_out;
  CLI::App* sweep =
      app.add_subcommand("sweep", "certify every catalog pair up to an order bound");
  sweep->add_option("--max-order", sweep_options.max_order,
                    "largest group order to include (5..16)");
  sweep->add_option("--workers", sweep_options.workers, "number of worker threads")
      ->check(CLI::PositiveNumber);
  sweep->add_flag("--allow-small", sweep_options.analyze.allow_small,
                  "build graphs for groups of order below 5 (outside the certified range)");
  {
    CLI::Option* skip = sweep->add_flag("--skip-bruteforce-aut",
                                        sweep_options.analyze.skip_search,
                                        "skip the independent graph-automorphism search");
    CLI::Option* force = sweep->add_flag(
        "--force-bruteforce-aut", sweep_options.analyze.force_search,
        "run the search up to 100 vertices instead of the default 64");
    skip->excludes(force);
    force->excludes(skip);
  }
  sweep->add_option("--out", sweep_out, "write the structured report collection here");

  PairArgs export_args;
  CLI::App* exporter =
      app.add_subcommand("export", "write the group table and graph edge list to files");
  add_pair_flags(*exporter, export_args, false);
  exporter
      ->add_option("--out", export_args.out_path,
                   "path prefix; writes <out>.group and <out>.edges")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_input;
  }

  try {
    if (*analyze) return run_analyze(analyze_args);
    if (*sweep) return run_sweep(sweep_options, sweep_out);
    return run_export(export_args);
  } catch (const qsrg::parse_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const qsrg::bound_error& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return exit_bound;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_fail;
  }
}
