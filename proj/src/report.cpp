#include "qsrg/report.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qsrg/catalog.hpp"
#include "qsrg/errors.hpp"

namespace qsrg {

namespace {

using json = nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

}  // namespace

CertificationReport certify_pair(const FiniteGroup& g, const Subgroup& h,
                                 const AnalyzeOptions& options) {
  if (options.skip_search && options.force_search)
    throw std::invalid_argument(
        "ConflictingOptions: cannot both skip and force the automorphism search");

  CertificationReport r;
  r.group_label = g.label();
  r.group_order = g.order();
  r.subgroup_members = h.members();
  r.subgroup_order = h.order();
  r.index = g.order() / h.order();
  r.normal = is_normal(g, h);

  if (g.order() < 5 && !options.allow_small) {
    r.parameters = certify_parameters(g, h, false);
    r.overall = CertificationReport::Overall::degenerate;
    return r;
  }

  auto t0 = clock_type::now();
  GammaInstance inst = build_gamma(g, h, options.allow_small);
  r.timings.build_seconds = seconds_since(t0);

  t0 = clock_type::now();
  r.parameters = certify_parameters(inst);
  r.timings.parameters_seconds = seconds_since(t0);
  if (r.parameters.degenerate) {
    r.overall = CertificationReport::Overall::degenerate;
    return r;
  }

  SymmetryOptions so;
  so.run_search = !options.skip_search;
  so.search_bound = options.force_search ? max_search_vertices : default_search_vertices;
  t0 = clock_type::now();
  r.symmetry = certify_aut_group(inst, so);
  try {
    r.corollary = corollary_elem_abelian_check(g, h);
  } catch (const corollary_violation&) {
    r.corollary_violated = true;
  }
  r.timings.symmetry_seconds = seconds_since(t0);

  if (!r.parameters.degree_match) r.failed_claims.push_back("degree");
  if (!r.parameters.a_match) r.failed_claims.push_back("a_constant");
  if (!r.parameters.c_set_match) r.failed_claims.push_back("c_set");
  for (const WitnessRecord& w : r.parameters.witnesses)
    if (!w.ok) r.failed_claims.push_back("witness:" + w.label);
  if (!r.symmetry->orders_match) r.failed_claims.push_back("aut_order");
  if (!r.symmetry->vertex_transitive) r.failed_claims.push_back("vertex_transitive");
  if (!r.symmetry->transitivity_agreement)
    r.failed_claims.push_back("transitivity_equivalence");
  if (r.corollary_violated) r.failed_claims.push_back("corollary_violated");

  r.overall = r.failed_claims.empty() ? CertificationReport::Overall::pass
                                      : CertificationReport::Overall::fail;
  return r;
}

namespace {

std::string overall_string(CertificationReport::Overall o) {
  switch (o) {
    case CertificationReport::Overall::pass: return "PASS";
    case CertificationReport::Overall::fail: return "FAIL";
    case CertificationReport::Overall::degenerate: return "DEGENERATE";
  }
  return "UNKNOWN";
}

std::string kind_string(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::srg: return "SRG";
    case Classification::Kind::qsrg: return "QSRG";
    case Classification::Kind::not_qsrg: return "NotQSRG";
  }
  return "unknown";
}

std::string corollary_string(const CertificationReport& r) {
  if (r.corollary_violated) return "violated";
  if (!r.corollary) return "";
  switch (*r.corollary) {
    case CorollaryVerdict::holds: return "holds";
    case CorollaryVerdict::not_applicable: return "not_applicable";
    case CorollaryVerdict::converse_failure_ok: return "converse_failure";
  }
  return "";
}

json parameters_to_json(const ParameterMatch& m) {
  json predicted{{"degree", m.prediction.degree},
                 {"a", m.prediction.a},
                 {"c_set", m.prediction.c_set},
                 {"collisions", m.prediction.collisions}};

  json out;
  out["case"] = to_string(m.prediction.tag);
  out["degenerate"] = m.degenerate;
  out["predicted"] = predicted;
  if (m.graph_built) {
    json observed;
    observed["vertices"] = m.profile.n;
    observed["regular"] = m.profile.regular;
    if (m.profile.regular) observed["degree"] = m.profile.degree;
    observed["a_values"] = m.profile.a_values;
    observed["c_values"] = m.profile.c_values;
    json hist = json::object();
    for (const auto& [value, count] : m.profile.c_histogram)
      hist[std::to_string(value)] = count;
    observed["c_histogram"] = hist;
    out["observed"] = observed;

    json cls;
    cls["kind"] = kind_string(m.classification.kind);
    cls["n"] = m.classification.n;
    if (m.classification.degree >= 0) cls["degree"] = m.classification.degree;
    if (m.classification.a) cls["a"] = *m.classification.a;
    cls["c_set"] = m.classification.c_set;
    if (!m.classification.reason.empty()) cls["reason"] = m.classification.reason;
    out["classification"] = cls;
  }
  if (!m.degenerate) {
    out["matches"] = json{{"degree", m.degree_match},
                          {"a", m.a_match},
                          {"c_set", m.c_set_match}};
    json witnesses = json::array();
    for (const WitnessRecord& w : m.witnesses) {
      json entry;
      entry["class"] = w.label;
      if (w.u >= 0) entry["pair"] = json::array({w.u, w.v});
      entry["expected"] = w.expected;
      if (w.observed >= 0) entry["observed"] = w.observed;
      entry["ok"] = w.ok;
      witnesses.push_back(entry);
    }
    out["witnesses"] = witnesses;
  }
  return out;
}

json symmetry_to_json(const SymmetryVerdict& v) {
  json out;
  out["applicable"] = v.applicable;
  if (v.applicable) {
    out["predicted_stabilizer_order"] = v.predicted_stabilizer;
    out["predicted_full_order"] = v.predicted_full;
  }
  out["generated_order"] = v.generated_order;
  if (v.searched_order) out["searched_order"] = *v.searched_order;
  else
    out["searched_order"] = nullptr;
  out["orders_match"] = v.orders_match;
  out["rotate_is_automorphism"] = v.rotate_is_automorphism;
  out["transitivity"] = json{{"vertex", v.vertex_transitive},
                             {"edge_condition", v.edge_transitive_condition},
                             {"edge_orbits", v.edge_transitive_orbits},
                             {"arc_orbits", v.arc_transitive_orbits},
                             {"agreement", v.transitivity_agreement}};
  if (v.elementary_abelian_quotient)
    out["elementary_abelian_quotient"] = *v.elementary_abelian_quotient;
  else
    out["elementary_abelian_quotient"] = nullptr;
  return out;
}

json report_to_json_value(const CertificationReport& r) {
  json out;
  out["group"] = json{{"label", r.group_label}, {"order", r.group_order}};
  out["subgroup"] = json{{"members", r.subgroup_members},
                         {"order", r.subgroup_order},
                         {"index", r.index},
                         {"normal", r.normal}};
  out["overall"] = overall_string(r.overall);
  out["failed_claims"] = r.failed_claims;
  out["parameters"] = parameters_to_json(r.parameters);
  out["symmetry"] = r.symmetry ? symmetry_to_json(*r.symmetry) : json(nullptr);
  const std::string corollary = corollary_string(r);
  out["corollary"] = corollary.empty() ? json(nullptr) : json(corollary);
  return out;
}

}  // namespace

std::string report_to_json(const CertificationReport& report) {
  return report_to_json_value(report).dump(2) + "\n";
}

std::string instance_label(const CertificationReport& report) {
  std::string group = report.group_label.empty()
                          ? "order" + std::to_string(report.group_order)
                          : report.group_label;
  std::string members = "{";
  for (std::size_t i = 0; i < report.subgroup_members.size(); ++i) {
    if (i) members += ",";
    members += std::to_string(report.subgroup_members[i]);
  }
  return group + ":" + members + "}";
}

namespace {

std::string join_ints(const std::set<int>& values) {
  std::string out = "{";
  bool first = true;
  for (int v : values) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_summary(const CertificationReport& r) {
  std::ostringstream out;
  out << "pair: group " << (r.group_label.empty() ? "(unlabeled)" : r.group_label)
      << " of order " << r.group_order << ", subgroup ";
  out << "{";
  for (std::size_t i = 0; i < r.subgroup_members.size(); ++i) {
    if (i) out << ",";
    out << r.subgroup_members[i];
  }
  out << "} of order " << r.subgroup_order << " (index " << r.index << ", "
      << (r.normal ? "normal" : "not normal") << ")\n";

  const ParameterMatch& m = r.parameters;
  out << "case: " << to_string(m.prediction.tag) << "\n";
  if (r.overall == CertificationReport::Overall::degenerate) {
    out << "verdict: DEGENERATE";
    if (r.group_order < 5 && !m.graph_built)
      out << " (group order below 5; rerun with --allow-small to explore)";
    else
      out << " (improper subgroup: the graph is edgeless)";
    out << "\n";
    return out.str();
  }

  out << "parameters: degree " << m.prediction.degree << " [" << yes_no(m.degree_match)
      << "], a = " << m.prediction.a << " [" << yes_no(m.a_match) << "], c-set "
      << join_ints(m.prediction.c_set) << " [" << yes_no(m.c_set_match) << "]\n";
  for (const std::string& note : m.prediction.collisions) out << "  note: " << note << "\n";
  for (const WitnessRecord& w : m.witnesses) {
    out << "  witness " << w.label << ": ";
    if (w.u < 0) out << "no pair available";
    else
      out << "pair (" << w.u << "," << w.v << ") shares " << w.observed
          << " common neighbours, expected " << w.expected;
    out << " [" << yes_no(w.ok) << "]\n";
  }
  out << "classification: " << kind_string(m.classification.kind);
  if (m.classification.kind != Classification::Kind::not_qsrg) {
    out << "(" << m.classification.n << "," << m.classification.degree;
    if (m.classification.a) out << "," << *m.classification.a;
    out << ";" << join_ints(m.classification.c_set) << ")";
  } else if (!m.classification.reason.empty()) {
    out << " (" << m.classification.reason << ")";
  }
  out << "\n";

  if (r.symmetry) {
    const SymmetryVerdict& s = *r.symmetry;
    out << "symmetry: generated order " << s.generated_order;
    if (s.applicable) out << ", predicted " << s.predicted_full;
    if (s.searched_order) out << ", searched " << *s.searched_order;
    out << " [" << yes_no(s.orders_match) << "]\n";
    out << "  rotate map is an automorphism: " << yes_no(s.rotate_is_automorphism) << "\n";
    out << "transitivity: vertex " << yes_no(s.vertex_transitive) << ", edge(condition) "
        << yes_no(s.edge_transitive_condition) << ", edge(orbits) "
        << yes_no(s.edge_transitive_orbits) << ", arc(orbits) "
        << yes_no(s.arc_transitive_orbits) << " [agreement " << yes_no(s.transitivity_agreement)
        << "]\n";
    if (s.elementary_abelian_quotient)
      out << "quotient elementary abelian: " << yes_no(*s.elementary_abelian_quotient) << "\n";
  }
  const std::string cor = corollary_string(r);
  if (!cor.empty()) out << "quotient consequence: " << cor << "\n";

  out << "timing: build " << r.timings.build_seconds << "s, parameters "
      << r.timings.parameters_seconds << "s, symmetry " << r.timings.symmetry_seconds
      << "s\n";
  out << "verdict: " << overall_string(r.overall);
  if (!r.failed_claims.empty()) {
    out << " (failed:";
    for (const std::string& claim : r.failed_claims) out << " " << claim;
    out << ")";
  }
  out << "\n";
  return out.str();
}

SweepResult sweep_catalog(const SweepOptions& options) {
  if (options.workers < 1)
    throw std::invalid_argument("ConflictingOptions: workers must be at least 1");

  std::vector<FiniteGroup> groups;
  std::vector<std::pair<int, Subgroup>> tasks;  // group index, subgroup
  for (int order = 5; order <= options.max_order; ++order)
    for (FiniteGroup& g : catalog_groups_of_order(order)) {
      const int group_index = static_cast<int>(groups.size());
      groups.push_back(std::move(g));
      for (const Subgroup& h : all_subgroups(groups[group_index]))
        if (h.order() > 1 && h.order() < groups[group_index].order())
          tasks.emplace_back(group_index, h);
    }

  SweepResult result;
  result.reports.resize(tasks.size());
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  std::mutex failure_lock;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        result.reports[i] =
            certify_pair(groups[tasks[i].first], tasks[i].second, options.analyze);
      } catch (...) {
        std::lock_guard<std::mutex> hold(failure_lock);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  const int thread_count =
      std::min(options.workers, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  pool.reserve(thread_count);
  for (int t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const CertificationReport& r : result.reports) {
    if (r.overall == CertificationReport::Overall::pass) ++result.pass_count;
    if (r.overall == CertificationReport::Overall::fail) ++result.fail_count;
    if (r.symmetry && r.symmetry->edge_transitive_condition)
      result.edge_transitive_instances.push_back(instance_label(r));
    if (!r.parameters.prediction.collisions.empty())
      result.collision_instances.push_back(instance_label(r));
    if (r.corollary && *r.corollary == CorollaryVerdict::converse_failure_ok)
      result.converse_failure_instances.push_back(instance_label(r));
  }
  return result;
}

std::string sweep_to_json(const SweepResult& result) {
  json out;
  out["pairs"] = result.reports.size();
  out["pass"] = result.pass_count;
  out["fail"] = result.fail_count;
  out["edge_transitive_instances"] = result.edge_transitive_instances;
  out["collision_instances"] = result.collision_instances;
  out["converse_failure_instances"] = result.converse_failure_instances;
  json reports = json::array();
  for (const CertificationReport& r : result.reports)
    reports.push_back(report_to_json_value(r));
  out["reports"] = reports;
  return out.dump(2) + "\n";
}

std::string render_sweep_summary(const SweepResult& result) {
  std::ostringstream out;
  out << "sweep: " << result.reports.size() << " pairs, " << result.pass_count
      << " passed, " << result.fail_count << " failed\n";
  for (const CertificationReport& r : result.reports)
    if (r.overall == CertificationReport::Overall::fail) {
      out << "  FAIL " << instance_label(r) << ":";
      for (const std::string& claim : r.failed_claims) out << " " << claim;
      out << "\n";
    }
  out << "edge-transitive instances:";
  if (result.edge_transitive_instances.empty()) out << " none";
  for (const std::string& label : result.edge_transitive_instances) out << " " << label;
  out << "\n";
  out << "parameter collisions:";
  if (result.collision_instances.empty()) out << " none";
  for (const std::string& label : result.collision_instances) out << " " << label;
  out << "\n";
  out << "elementary abelian quotient without edge-transitivity:";
  if (result.converse_failure_instances.empty()) out << " none";
  for (const std::string& label : result.converse_failure_instances) out << " " << label;
  out << "\n";
  return out.str();
}

}  // namespace qsrg
