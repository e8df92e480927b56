#include "qsrg/analysis.hpp"

#include <algorithm>

namespace qsrg {

ParameterProfile empirical_profile(const Graph& g) {
  ParameterProfile p;
  p.n = g.vertex_count();
  const RegularityResult reg = regularity(g);
  p.regular = reg.regular;
  p.degree = reg.degree;
  p.irregular_u = reg.witness_u;
  p.irregular_v = reg.witness_v;

  int first_u = -1, first_v = -1, first_count = -1;
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      const int c = g.common_neighbour_count(u, v);
      if (g.adjacent(u, v)) {
        p.a_values.insert(c);
        if (first_u < 0) {
          first_u = u;
          first_v = v;
          first_count = c;
        } else if (!p.a_conflict && c != first_count) {
          p.a_conflict = AdjacentCountConflict{first_u, first_v, first_count, u, v, c};
        }
      } else {
        p.c_values.insert(c);
        ++p.c_histogram[c];
      }
    }
  return p;
}

std::string to_string(PredictionCase c) {
  switch (c) {
    case PredictionCase::improper_subgroup: return "improper_subgroup";
    case PredictionCase::trivial_subgroup: return "trivial_subgroup";
    case PredictionCase::index2: return "index2";
    case PredictionCase::normal_h2: return "normal_h2";
    case PredictionCase::normal_hbig: return "normal_hbig";
    case PredictionCase::nonnormal_h2: return "nonnormal_h2";
    case PredictionCase::nonnormal_hbig: return "nonnormal_hbig";
  }
  return "unknown";
}

Prediction predict(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent_order() != g.order())
    throw std::invalid_argument("GroupMismatch: subgroup belongs to a different group");
  const int n = g.order();
  const int k = h.order();
  Prediction p;
  p.degree = 3 * (n - k);
  p.a = n - 2 * k + 2;

  if (k == n) {
    p.tag = PredictionCase::improper_subgroup;
    p.a = 0;  // no adjacent pairs in the null graph
    return p;
  }
  if (k == 1) {
    p.tag = PredictionCase::trivial_subgroup;
    p.c_set = {6};
    return p;
  }

  const int index = n / k;
  if (index == 2) {
    p.tag = PredictionCase::index2;
    p.c_set = {0, 2, n - k};
  } else if (is_normal(g, h)) {
    p.tag = k == 2 ? PredictionCase::normal_h2 : PredictionCase::normal_hbig;
    p.c_set = k == 2 ? std::set<int>{2, 6, n - k} : std::set<int>{0, 2, 6, n - k};
  } else {
    p.tag = k == 2 ? PredictionCase::nonnormal_h2 : PredictionCase::nonnormal_hbig;
    p.c_set = k == 2 ? std::set<int>{2, 4, 6, n - k} : std::set<int>{0, 2, 4, 6, n - k};
  }
  if (n - k == 0 || n - k == 2 || n - k == 4 || n - k == 6)
    p.collisions.push_back("|G|-|H| = " + std::to_string(n - k) +
                           " coincides with the constant " + std::to_string(n - k));
  return p;
}

Classification classify(const ParameterProfile& profile) {
  Classification c;
  c.n = profile.n;
  if (!profile.regular) {
    c.kind = Classification::Kind::not_qsrg;
    c.reason = "vertices " + std::to_string(profile.irregular_u) + " and " +
               std::to_string(profile.irregular_v) + " have different degrees";
    return c;
  }
  c.degree = profile.degree;
  if (profile.a_values.size() > 1) {
    c.kind = Classification::Kind::not_qsrg;
    if (profile.a_conflict)
      c.reason = "adjacent pairs (" + std::to_string(profile.a_conflict->u1) + "," +
                 std::to_string(profile.a_conflict->v1) + ") and (" +
                 std::to_string(profile.a_conflict->u2) + "," +
                 std::to_string(profile.a_conflict->v2) + ") share " +
                 std::to_string(profile.a_conflict->count1) + " and " +
                 std::to_string(profile.a_conflict->count2) + " common neighbours";
    return c;
  }
  if (!profile.a_values.empty()) c.a = *profile.a_values.begin();
  c.c_set = profile.c_values;
  c.kind = profile.c_values.size() <= 1 ? Classification::Kind::srg
                                        : Classification::Kind::qsrg;
  return c;
}

namespace {

void add_witness(std::vector<WitnessRecord>& out, const Graph& graph, int home,
                 const std::string& label, int partner, int expected) {
  WitnessRecord w;
  w.label = label;
  w.expected = expected;
  if (partner >= 0) {
    w.u = home;
    w.v = partner;
    if (!graph.adjacent(home, partner)) {
      w.observed = graph.common_neighbour_count(home, partner);
      w.ok = w.observed == expected;
    }
  }
  out.push_back(std::move(w));
}

}  // namespace

ParameterMatch certify_parameters(const FiniteGroup& g, const Subgroup& h,
                                  bool allow_small) {
  ParameterMatch m;
  m.prediction = predict(g, h);
  if (g.order() < 5 && !allow_small) {
    m.degenerate = true;
    return m;
  }
  return certify_parameters(build_gamma(g, h, allow_small));
}

ParameterMatch certify_parameters(const GammaInstance& inst) {
  const FiniteGroup& g = inst.group;
  const Subgroup& h = inst.subgroup;
  const int n = g.order();
  const int k = h.order();
  ParameterMatch m;
  m.prediction = predict(g, h);
  m.graph_built = true;
  m.profile = empirical_profile(inst.graph);
  m.classification = classify(m.profile);
  if (k == n) {
    m.degenerate = true;
    return m;
  }

  m.degree_match = m.profile.regular && m.profile.degree == m.prediction.degree;
  m.a_match = m.profile.a_values == std::set<int>{m.prediction.a};
  m.c_set_match = m.profile.c_values == m.prediction.c_set;

  // One concrete non-adjacent pair per predicted class, all measured from
  // (e, e).  Scans are ascending, so the picks are reproducible.
  const int e = g.identity();
  const int home = gamma_vertex(g, e, e);
  int first_h = -1, second_h = -1, first_g = -1;
  for (int x = 0; x < n; ++x) {
    if (x == e) continue;
    if (h.contains(x)) {
      if (first_h < 0) first_h = x;
      else if (second_h < 0) second_h = x;
    } else if (first_g < 0) {
      first_g = x;
    }
  }

  if (k > 1)
    add_witness(m.witnesses, inst.graph, home, "within_H",
                first_h < 0 ? -1 : gamma_vertex(g, first_h, e), n - k);
  if (k > 2)
    add_witness(m.witnesses, inst.graph, home, "zero",
                second_h < 0 ? -1 : gamma_vertex(g, first_h, second_h), 0);
  if (k > 1)
    add_witness(m.witnesses, inst.graph, home, "two",
                first_g < 0 || first_h < 0 ? -1 : gamma_vertex(g, first_g, first_h), 2);
  if (m.prediction.tag == PredictionCase::nonnormal_h2 ||
      m.prediction.tag == PredictionCase::nonnormal_hbig) {
    const auto pair = witness_coset_asymmetry(g, h);
    add_witness(m.witnesses, inst.graph, home, "four",
                pair ? gamma_vertex(g, pair->first, pair->second) : -1, 4);
  }
  // The constant-6 class (both coordinates in fresh cosets on both sides)
  // exists in every case except index 2, where there is only one nontrivial
  // coset.  Note 6 can still appear in the index-2 c-set as |G|-|H|.
  if (m.prediction.tag != PredictionCase::index2 &&
      m.prediction.tag != PredictionCase::improper_subgroup) {
    int v6 = -1;
    for (int g1 = 0; g1 < n && v6 < 0; ++g1) {
      if (h.contains(g1)) continue;
      for (int g2 = 0; g2 < n; ++g2) {
        if (h.contains(g2) || g2 == g1) continue;
        if (!h.contains(g.mul(g1, g.inv(g2))) && !h.contains(g.mul(g.inv(g2), g1))) {
          v6 = gamma_vertex(g, g1, g2);
          break;
        }
      }
    }
    add_witness(m.witnesses, inst.graph, home, "six", v6, 6);
  }

  m.all_match = m.degree_match && m.a_match && m.c_set_match;
  for (const WitnessRecord& w : m.witnesses) m.all_match = m.all_match && w.ok;
  return m;
}

}  // namespace qsrg
