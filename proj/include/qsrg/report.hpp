#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qsrg/analysis.hpp"
#include "qsrg/symmetry.hpp"

namespace qsrg {

struct AnalyzeOptions {
  bool allow_small = false;
  bool skip_search = false;   // drop the independent graph-search leg
  bool force_search = false;  // run it up to the hard bound instead of the default
};

// Search-leg sizing: by default the independent automorphism search runs for
// graphs up to `default_search_vertices`; forcing extends it to
// `max_search_vertices` (the search itself refuses anything larger).
inline constexpr int default_search_vertices = 64;
inline constexpr int max_search_vertices = 100;

// Full certification bundle for one (G, H) pair.
struct PhaseTimings {
  double build_seconds = 0;
  double parameters_seconds = 0;
  double symmetry_seconds = 0;
};

struct CertificationReport {
  std::string group_label;
  int group_order = 0;
  std::vector<int> subgroup_members;
  int subgroup_order = 0;
  int index = 0;
  bool normal = false;

  ParameterMatch parameters;
  std::optional<SymmetryVerdict> symmetry;  // skipped for degenerate pairs
  std::optional<CorollaryVerdict> corollary;
  bool corollary_violated = false;

  enum class Overall { pass, fail, degenerate };
  Overall overall = Overall::degenerate;
  std::vector<std::string> failed_claims;

  PhaseTimings timings;  // human summary only; never serialized
};

CertificationReport certify_pair(const FiniteGroup& g, const Subgroup& h,
                                 const AnalyzeOptions& options = {});

// Deterministic JSON rendering: no timings, fixed key order, sorted members.
// Byte-identical across runs for the same inputs.
std::string report_to_json(const CertificationReport& report);

// Human-readable summary, including timings.
std::string render_summary(const CertificationReport& report);

struct SweepOptions {
  int max_order = 8;  // catalog groups of order 5..max_order
  int workers = 1;
  AnalyzeOptions analyze;
};

struct SweepResult {
  std::vector<CertificationReport> reports;
  int pass_count = 0;
  int fail_count = 0;
  std::vector<std::string> edge_transitive_instances;
  std::vector<std::string> collision_instances;
  std::vector<std::string> converse_failure_instances;
};

// Certifies every nontrivial proper subgroup of every catalog group of order
// 5..max_order.  Work is split across `workers` threads; the report order is
// fixed regardless of the worker count.
SweepResult sweep_catalog(const SweepOptions& options);

std::string sweep_to_json(const SweepResult& result);
std::string render_sweep_summary(const SweepResult& result);

// Instance label used in sweep summaries: "<group>:<members>".
std::string instance_label(const CertificationReport& report);

}  // namespace qsrg
