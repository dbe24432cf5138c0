#pragma once

// Check runners behind the command-line tool. Every check returns a JSON
// payload (keys sorted) and a status; the text form is rendered from the
// payload so both formats carry the same facts.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "softgt/cover_engine.hpp"
#include "softgt/errors.hpp"
#include "softgt/gt_space.hpp"
#include "softgt/io/document.hpp"
#include "softgt/laws.hpp"
#include "softgt/random_instances.hpp"
#include "softgt/sgt_space.hpp"
#include "softgt/witness_families.hpp"

namespace softgt::io {

using Json = nlohmann::json;

struct CheckOptions {
  std::uint64_t seed = kDefaultSeed;
  int n_max = 10;
  std::size_t count = 500;
  int params = 2;
  std::string family;
  std::string parameter;
  std::string subset;
  std::string cover;
  std::string suite;
  std::vector<std::string> sets;
};

struct CheckReport {
  int status = 0;  // 0 pass, 1 failed assertion or certification
  Json payload;
};

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"regular", "compactness", "fip",     "subspace",
                                              "project", "witness",     "lawsuite"};
  return names;
}

namespace detail {

class SoftLabels {
 public:
  explicit SoftLabels(const SoftSpace& s) : s_(s) {}

  Json operator()(const SoftSet& x) const {
    Json names = Json::array();
    for (const auto& [n, v] : s_.named)
      if (v == x) names.push_back(n);
    if (x == s_.space.carrier()) names.push_back("carrier");
    return Json{{"set", to_string(x)}, {"names", names}};
  }

 private:
  const SoftSpace& s_;
};

inline Json plain_label(const PlainSpace& s, PointSet x) {
  Json names = Json::array();
  for (const auto& [n, v] : s.named)
    if (v == x) names.push_back(n);
  return Json{{"set", format_points(s.space.universe(), x)}, {"names", names}};
}

inline Json indices(const std::vector<std::size_t>& xs) { return Json(xs); }

inline Json regular_soft(const SoftSpace& s) {
  const SGTS& g = s.space;
  const SoftLabels label(s);
  Json opens = Json::array(), regular = Json::array(), named = Json::array(), not_regular = Json::array();
  bool consistent = true;
  for (const auto& o : g.opens()) {
    const bool ro = g.is_regular_open(o);
    Json entry = label(o);
    entry["regular_open"] = ro;
    opens.push_back(entry);
    if (ro) regular.push_back(label(o));
  }
  for (const auto& [name, x] : s.named) {
    const bool open = g.is_open(x), ro = g.is_regular_open(x);
    consistent = consistent && (!ro || open) && g.regularize(g.regularize(x)) == g.regularize(x);
    if (open && !ro) not_regular.push_back(name);
    named.push_back(Json{{"name", name},
                         {"set", to_string(x)},
                         {"open", open},
                         {"closed", g.is_closed(x)},
                         {"regular_open", ro},
                         {"regular_closed", g.is_regular_closed(x)},
                         {"interior", to_string(g.interior(x))},
                         {"closure", to_string(g.closure(x))}});
  }
  return Json{{"strong", g.strong()},         {"open_count", opens.size()},
              {"opens", opens},               {"regular_open", regular},
              {"named", named},               {"open_not_regular_open", not_regular},
              {"consistent", consistent}};
}

inline Json regular_plain(const PlainSpace& s) {
  const GTS& g = s.space;
  Json opens = Json::array(), regular = Json::array(), named = Json::array(), not_regular = Json::array();
  bool consistent = true;
  for (PointSet o : g.opens()) {
    const bool ro = g.is_regular_open(o);
    Json entry = plain_label(s, o);
    entry["regular_open"] = ro;
    opens.push_back(entry);
    if (ro) regular.push_back(plain_label(s, o));
  }
  const Universe& u = g.universe();
  for (const auto& [name, x] : s.named) {
    const bool open = g.is_open(x), ro = g.is_regular_open(x);
    consistent = consistent && (!ro || open) && g.regularize(g.regularize(x)) == g.regularize(x);
    if (open && !ro) not_regular.push_back(name);
    named.push_back(Json{{"name", name},
                         {"set", format_points(u, x)},
                         {"open", open},
                         {"closed", g.is_closed(x)},
                         {"regular_open", ro},
                         {"regular_closed", g.is_regular_closed(x)},
                         {"interior", format_points(u, g.interior(x))},
                         {"closure", format_points(u, g.closure(x))}});
  }
  return Json{{"mu_space", g.mu_space()},     {"open_count", opens.size()},
              {"opens", opens},               {"regular_open", regular},
              {"named", named},               {"open_not_regular_open", not_regular},
              {"consistent", consistent}};
}

inline Json names_of(const std::vector<std::string>& all, const std::vector<std::size_t>& picks) {
  Json out = Json::array();
  for (std::size_t i : picks) out.push_back(all.at(i));
  return out;
}

inline CheckReport compactness_soft(const SoftSpace& s, const std::string& only_cover) {
  const SGTS& g = s.space;
  const CompactnessReport r = is_soft_n_mu_compact_finite(g);
  const std::vector<SoftSet> opens = g.opens();
  const std::vector<SoftSet> regular = enumerate_regular_open(g);
  auto sets_at = [](const std::vector<SoftSet>& family, const std::vector<std::size_t>& picks) {
    Json out = Json::array();
    for (std::size_t i : picks) out.push_back(to_string(family.at(i)));
    return out;
  };
  Json covers = Json::array();
  for (const auto& c : s.covers) {
    if (!only_cover.empty() && c.first != only_cover) continue;
    const CoverDiagnosis d = diagnose_cover(g, c.second);
    Json entry{{"name", c.first}, {"valid", d.ok()}, {"diagnosis", d.describe(g.frame())}};
    if (d.ok()) {
      const SoftCover cover{g, c.second};
      std::vector<std::string> member_names;
      for (const auto& m : c.second) member_names.push_back(to_string(m));
      const SubcoverResult plain = minimal_subcover(cover), near = minimal_near_subcover(cover);
      entry["minimal_subcover_size"] = plain.size;
      entry["minimal_subcover"] = names_of(member_names, plain.indices);
      entry["minimal_near_subcover_size"] = near.size;
      entry["minimal_near_subcover"] = names_of(member_names, near.indices);
    }
    covers.push_back(entry);
  }
  if (!only_cover.empty() && covers.empty()) throw PreconditionError("no cover named '" + only_cover + "'");
  Json payload{{"compact", r.compact},
               {"near_formulation", r.near_formulation},
               {"formulations_agree", r.formulations_agree},
               {"finite_trivial", r.finite_trivial},
               {"regular_open_cover", r.regular_open_cover_flag},
               {"open_count", r.open_count},
               {"regular_open_count", r.regular_open_count},
               {"worst_minimal_subcover_size", r.plain_minimal_subcover_size},
               {"worst_minimal_near_subcover_size", r.near_minimal_subcover_size},
               {"worst_regular_open_subcover_size", r.regular_minimal_subcover_size},
               {"worst_open_cover", sets_at(opens, r.plain_witness)},
               {"worst_near_cover", sets_at(opens, r.near_witness)},
               {"worst_regular_open_cover", sets_at(regular, r.regular_witness)},
               {"covers", covers}};
  return {r.formulations_agree ? 0 : 1, payload};
}

inline CheckReport compactness_plain(const PlainSpace& s, const std::string& only_cover) {
  const GTS& g = s.space;
  if (!g.mu_space()) throw PreconditionError("compactness needs a mu-space: X is not mu-open");
  const Universe& u = g.universe();
  Json covers = Json::array();
  for (const auto& c : s.covers) {
    if (!only_cover.empty() && c.first != only_cover) continue;
    Json entry{{"name", c.first}, {"valid", is_open_cover(g, c.second)}};
    if (entry["valid"].get<bool>()) {
      std::vector<std::string> member_names;
      for (PointSet m : c.second) member_names.push_back(format_points(u, m));
      const SubcoverResult plain = gt_minimal_subcover(g, c.second), near = gt_minimal_near_subcover(g, c.second);
      entry["minimal_subcover_size"] = plain.size;
      entry["minimal_subcover"] = names_of(member_names, plain.indices);
      entry["minimal_near_subcover_size"] = near.size;
      entry["minimal_near_subcover"] = names_of(member_names, near.indices);
    }
    covers.push_back(entry);
  }
  if (!only_cover.empty() && covers.empty()) throw PreconditionError("no cover named '" + only_cover + "'");
  return {0, Json{{"compact", true}, {"finite_trivial", true}, {"n_mu_paracompact", is_n_mu_paracompact_finite(g)},
                  {"covers", covers}}};
}

inline CheckReport fip(const SoftSpace& s, const std::vector<std::string>& set_names) {
  const SGTS& g = s.space;
  std::vector<SoftSet> family;
  Json members = Json::array();
  if (set_names.empty()) {
    for (const auto& f : relative_complements(g, enumerate_regular_open(g))) {
      members.push_back(to_string(f));
      family.push_back(f);
    }
  } else {
    for (const auto& n : set_names) {
      family.push_back(s.set(n));
      members.push_back(n);
    }
  }
  const FipVerdict v = fip_nonempty_intersection_check(g, family);
  Json empty_sub = Json::array();
  for (std::size_t i : v.empty_subfamily) empty_sub.push_back(members[i]);
  Json payload{{"family", members},
               {"fip", v.fip_holds},
               {"empty_subfamily", empty_sub},
               {"total_intersection", to_string(v.total_intersection)},
               {"total_nonempty", v.total_nonempty},
               {"space_n_mu_compact", v.space_n_mu_compact},
               {"consistent", v.consistent}};
  return {v.consistent ? 0 : 1, payload};
}

inline CheckReport subspace_check(const SoftSpace& s, const std::string& name) {
  if (name.empty()) throw PreconditionError("subspace needs --subset NAME");
  const SGTS& g = s.space;
  const SoftSet& b = s.set(name);
  const SGTS sub = subspace(g, b);
  std::vector<SoftSet> traces;
  for (const auto& u : enumerate_regular_open(g)) traces.push_back(soft_intersection(u, b));
  canonicalize(traces);
  const std::vector<SoftSet> sub_regular = enumerate_regular_open(sub);
  auto strings = [](const std::vector<SoftSet>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(to_string(x));
    return out;
  };
  const bool match = traces == sub_regular;
  Json payload{{"subset", name},
               {"carrier", to_string(b)},
               {"open_in_space", g.is_open(b)},
               {"opens", strings(sub.opens())},
               {"regular_open", strings(sub_regular)},
               {"regular_open_traces", strings(traces)},
               {"traces_match", match}};
  return {match ? 0 : 1, payload};
}

inline Json projection(const SGTS& g, std::size_t r) {
  const GTS h = project(g, r);
  Json opens = Json::array(), regular = Json::array();
  for (PointSet o : h.opens()) {
    opens.push_back(format_points(h.universe(), o));
    if (h.is_regular_open(o)) regular.push_back(format_points(h.universe(), o));
  }
  return Json{{"parameter", g.frame().parameters.name(r)},
              {"opens", opens},
              {"regular_open", regular},
              {"mu_space", h.mu_space()},
              {"quasi_topology", h.is_quasi_topology()}};
}

inline CheckReport project_check(const SoftSpace& s, const std::string& parameter) {
  const SGTS& g = s.space;
  Json out = Json::array();
  if (!parameter.empty()) {
    out.push_back(projection(g, g.frame().parameters.index_of(parameter)));
  } else {
    for (std::size_t r = 0; r < g.frame().parameters.size(); ++r) out.push_back(projection(g, r));
  }
  return {0, Json{{"projections", out}}};
}

inline CheckReport witness(const CheckOptions& opt) {
  if (opt.family.empty()) throw PreconditionError("witness needs a family name");
  const TruncationFamily family = truncation_family(opt.family, opt.params);
  try {
    const GrowthCertificate cert = growth_certificate(family, opt.n_max);
    Json samples = Json::array();
    for (const auto& s : cert.samples) {
      samples.push_back(Json{{"n", s.index},
                             {"minimal_subcover_size", s.plain},
                             {"minimal_near_subcover_size", s.near},
                             {"expected_subcover_size", s.expected_plain},
                             {"expected_near_subcover_size", s.expected_near},
                             {"subcover", indices(s.plain_witness)},
                             {"near_subcover", indices(s.near_witness)}});
    }
    return {0, Json{{"family", cert.family},
                    {"min_index", cert.min_index},
                    {"max_index", cert.max_index},
                    {"parameters", opt.params},
                    {"samples", samples},
                    {"subcover_unbounded", cert.plain_unbounded},
                    {"near_subcover_unbounded", cert.near_unbounded},
                    {"near_subcover_bounded", cert.near_bounded},
                    {"conclusion", cert.conclusion},
                    {"certified", true}}};
  } catch (const CertificationFailure& e) {
    return {1, Json{{"family", e.family()}, {"failed_at", e.index()}, {"error", e.what()}, {"certified", false}}};
  }
}

inline std::vector<LawReport> selected_laws(const CheckOptions& opt) {
  std::vector<LawReport> all = run_all_laws(opt.seed, opt.count);
  if (opt.suite.empty()) return all;
  std::vector<LawReport> out;
  for (auto& r : all)
    if (r.name.find(opt.suite) != std::string::npos) out.push_back(std::move(r));
  if (out.empty()) throw PreconditionError("no law suite matches '" + opt.suite + "'");
  return out;
}

inline CheckReport lawsuite(const CheckOptions& opt) {
  Json suites = Json::array();
  bool all_passed = true;
  for (const auto& r : selected_laws(opt)) {
    all_passed = all_passed && r.passed();
    suites.push_back(Json{{"name", r.name},
                          {"instances", r.instances},
                          {"checks", r.checks},
                          {"failures", r.failures},
                          {"first_failure", r.first_failure},
                          {"passed", r.passed()}});
  }
  return {all_passed ? 0 : 1, Json{{"seed", opt.seed}, {"count", opt.count}, {"suites", suites}}};
}

inline const SoftSpace& soft_only(const LoadedSpace& space, const std::string& check) {
  if (const auto* s = std::get_if<SoftSpace>(&space)) return *s;
  throw PreconditionError(check + " needs a soft document (one with a [parameters] section)");
}

}  // namespace detail

/// Runs one named check. `doc` may be absent for witness and lawsuite.
inline CheckReport run_check(const std::optional<SpaceDocument>& doc, const std::string& check,
                             const CheckOptions& opt = {}) {
  CheckReport report;
  if (check == "witness") {
    report = detail::witness(opt);
  } else if (check == "lawsuite") {
    report = detail::lawsuite(opt);
  } else {
    if (std::find(check_names().begin(), check_names().end(), check) == check_names().end()) {
      throw PreconditionError("unknown check '" + check + "'");
    }
    if (!doc) throw PreconditionError(check + " needs a document: pass --file or --fixture");
    const LoadedSpace space = build(*doc);
    const auto* soft = std::get_if<SoftSpace>(&space);
    const auto* plain = std::get_if<PlainSpace>(&space);
    if (check == "regular") {
      report.payload = soft ? detail::regular_soft(*soft) : detail::regular_plain(*plain);
      report.status = report.payload["consistent"].get<bool>() ? 0 : 1;
    } else if (check == "compactness") {
      report = soft ? detail::compactness_soft(*soft, opt.cover) : detail::compactness_plain(*plain, opt.cover);
    } else if (check == "fip") {
      report = detail::fip(detail::soft_only(space, check), opt.sets);
    } else if (check == "subspace") {
      report = detail::subspace_check(detail::soft_only(space, check), opt.subset);
    } else {
      report = detail::project_check(detail::soft_only(space, check), opt.parameter);
    }
  }
  report.payload["check"] = check;
  report.payload["status"] = report.status == 0 ? "pass" : "fail";
  return report;
}

/// Stable machine form: sorted keys, two-space indent, trailing newline.
inline std::string machine_text(const Json& payload) { return payload.dump(2) + "\n"; }

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  return v.dump();
}

inline bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

inline void render(const Json& v, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (flat(x) && !x.is_array()) {
        out += pad + k + ": " + scalar_text(x) + "\n";
      } else if (flat(x)) {
        std::string line;
        for (const auto& e : x) line += (line.empty() ? "" : ", ") + scalar_text(e);
        out += pad + k + ": [" + line + "]\n";
      } else {
        out += pad + k + ":\n";
        render(x, indent + 2, out);
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (x.is_object()) {
        out += pad + "-\n";
        render(x, indent + 2, out);
      } else {
        out += pad + "- " + scalar_text(x) + "\n";
      }
    }
  } else {
    out += pad + scalar_text(v) + "\n";
  }
}

}  // namespace detail

/// Indented human form of a payload.
inline std::string human_text(const Json& payload) {
  std::string out;
  detail::render(payload, 0, out);
  return out;
}

}  // namespace softgt::io
