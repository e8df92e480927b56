#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qsrg/gamma.hpp"
#include "qsrg/graph.hpp"
#include "qsrg/group.hpp"

namespace qsrg {

// Two adjacent vertex pairs whose common-neighbour counts disagree.
struct AdjacentCountConflict {
  int u1 = -1, v1 = -1, count1 = -1;
  int u2 = -1, v2 = -1, count2 = -1;
};

// Exhaustive common-neighbour statistics of a graph.
struct ParameterProfile {
  int n = 0;
  bool regular = false;
  int degree = -1;                       // when regular
  int irregular_u = -1, irregular_v = -1;  // when not
  std::set<int> a_values;                // counts over adjacent pairs
  std::set<int> c_values;                // counts over non-adjacent pairs
  std::map<int, long long> c_histogram;  // count -> number of non-adjacent pairs
  std::optional<AdjacentCountConflict> a_conflict;
};

ParameterProfile empirical_profile(const Graph& g);

enum class PredictionCase {
  improper_subgroup,  // H = G: null graph
  trivial_subgroup,   // H = {e}: strongly regular family
  index2,
  normal_h2,
  normal_hbig,
  nonnormal_h2,
  nonnormal_hbig,
};

std::string to_string(PredictionCase c);

// Parameters the theory promises for the pair (G, H): degree 3(|G|-|H|),
// every adjacent pair sharing a = |G| - 2|H| + 2 common neighbours, and a
// case-dependent set of values for non-adjacent pairs.  When |G|-|H| lands
// on one of the small constants 0/2/4/6 the formulas overlap; such
// coincidences are listed in `collisions`.
struct Prediction {
  PredictionCase tag = PredictionCase::improper_subgroup;
  int degree = 0;
  int a = 0;
  std::set<int> c_set;
  std::vector<std::string> collisions;
};

Prediction predict(const FiniteGroup& g, const Subgroup& h);

struct Classification {
  enum class Kind { srg, qsrg, not_qsrg };
  Kind kind = Kind::not_qsrg;
  int n = 0;
  int degree = -1;
  std::optional<int> a;
  std::set<int> c_set;
  // Populated for not_qsrg: either an irregular vertex pair or two adjacent
  // pairs with different counts.
  std::string reason;
};

Classification classify(const ParameterProfile& profile);

// One spot-checked non-adjacent pair per predicted c-value.
struct WitnessRecord {
  std::string label;
  int u = -1, v = -1;
  int expected = -1;
  int observed = -1;
  bool ok = false;
};

struct ParameterMatch {
  Prediction prediction;
  ParameterProfile profile;
  Classification classification;
  bool degenerate = false;   // H = G, or |G| < 5 without the small override
  bool graph_built = false;
  bool degree_match = false;
  bool a_match = false;
  bool c_set_match = false;
  std::vector<WitnessRecord> witnesses;
  bool all_match = false;
};

// Builds the graph for (G, H), profiles it exhaustively, and compares
// against predict().  Witnesses pin one concrete pair per c-value class.
ParameterMatch certify_parameters(const FiniteGroup& g, const Subgroup& h,
                                  bool allow_small = false);

// Same, on an already-built instance.
ParameterMatch certify_parameters(const GammaInstance& inst);

}  // namespace qsrg
