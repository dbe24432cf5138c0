// One line per acceptance criterion. Exit status is nonzero when any
// criterion fails; INFO lines are context and never affect the status.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "softgt/cover_engine.hpp"
#include "softgt/io/document.hpp"
#include "softgt/io/fixtures.hpp"
#include "softgt/io/report.hpp"
#include "softgt/laws.hpp"
#include "softgt/sgt_space.hpp"
#include "softgt/witness_families.hpp"

namespace {

using namespace softgt;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kInstances = 500;

struct Outcome {
  bool ok = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f s", s);
  return buf;
}

std::string law_detail(const LawReport& r) {
  std::string out = std::to_string(r.instances) + " instances, " + std::to_string(r.checks) + " checks, " +
                    std::to_string(r.failures) + " counterexamples";
  if (!r.passed()) out += "; first: " + r.first_failure;
  return out;
}

Outcome law(const LawReport& r) { return {r.passed(), law_detail(r)}; }

Outcome example_golden() {
  const auto t0 = Clock::now();
  const auto space = std::get<io::SoftSpace>(io::build(io::parse_document(io::fixture_text("example_3_2"))));
  const SGTS& g = space.space;
  bool ok = enumerate_regular_open(g) == std::vector<SoftSet>{g.empty(), space.set("S_A")};
  for (const char* name : {"S_A1", "S_A2", "S_A3"}) {
    ok = ok && g.is_open(space.set(name)) && !g.is_regular_open(space.set(name));
  }
  ok = ok && g.closure(space.set("S_A1")) == space.set("S_A");
  const double s = seconds_since(t0);
  return {ok && s < 1.0, "regular-open {S_0, S_A}; S_A1, S_A2, S_A3 open only; closure(S_A1) = S_A; " + fmt_seconds(s)};
}

Outcome certificates() {
  const auto t0 = Clock::now();
  std::string detail;
  bool ok = true;
  auto run = [&](const TruncationFamily& family, int n_max, bool near_constant) {
    const auto t = Clock::now();
    try {
      const GrowthCertificate c = growth_certificate(family, n_max);
      const bool shape = c.plain_unbounded && (near_constant ? c.near_bounded : c.near_unbounded);
      ok = ok && shape;
      detail += family.name + " to " + std::to_string(n_max) + (shape ? " exact" : " wrong shape") + " (" +
                fmt_seconds(seconds_since(t)) + "); ";
    } catch (const Error& e) {
      ok = false;
      detail += std::string(e.what()) + "; ";
    }
  };
  run(example_ones_family(), 12, true);
  run(pairs_family(), 8, false);
  run(discrete_subspace_family(), 12, false);
  const double s = seconds_since(t0);
  return {ok && s < 10.0, detail + "total " + fmt_seconds(s)};
}

#ifdef SOFTGT_CLI_PATH
std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(SOFTGT_CLI_PATH) + " " + args + " 2>&1";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) return "<popen failed>";
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe.get())) out.append(buf.data(), n);
  return out;
}
#endif

Outcome round_trip_and_determinism() {
  bool ok = true;
  std::string detail;
  for (const auto& f : io::fixtures()) {
    const io::SpaceDocument doc = io::parse_document(f.text, std::string(f.name));
    const std::string text = io::serialize(doc);
    ok = ok && io::parse_document(text) == doc && io::serialize(io::parse_document(text)) == text;
  }
  detail += std::to_string(io::fixtures().size()) + " fixtures reparse equal; ";

  io::CheckOptions opt;
  opt.seed = 12345;
  opt.count = 40;
  const auto doc = io::parse_document(io::fixture_text("example_3_2"));
  for (const std::string check : {"regular", "compactness", "fip", "project", "lawsuite"}) {
    const std::string a = io::machine_text(io::run_check(doc, check, opt).payload);
    const std::string b = io::machine_text(io::run_check(doc, check, opt).payload);
    ok = ok && a == b;
  }
  detail += "in-process reports byte-identical";

#ifdef SOFTGT_CLI_PATH
  const std::array<std::string, 3> runs{"lawsuite --seed 99 --count 30 --format machine",
                                        "witness family_example_ones 8 --format machine",
                                        "compactness --fixture example_ones_n4 --format machine"};
  for (const auto& args : runs) ok = ok && run_cli(args) == run_cli(args) && !run_cli(args).empty();
  const std::string dumped = run_cli("dump --fixture example_3_2");
  ok = ok && io::parse_document(dumped) == doc;
  detail += "; CLI reports byte-identical; CLI dump reparses equal";
#endif
  return {ok, detail};
}

}  // namespace

int main() {
  const std::uint64_t seed = kDefaultSeed;
  struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"1", "example space golden values", example_golden},
      {"2", "interiors of closed sets are regular open, closures of open sets regular closed",
       [&] { return law(law_regular_from_operators(seed + 2, kInstances)); }},
      {"3", "regularization is idempotent (soft and plain)",
       [&] { return law(law_regularization_idempotence(seed + 3, kInstances)); }},
      {"4", "subspace regular-open sets are the traces of regular-open sets",
       [&] { return law(law_subspace_trace(seed + 4, kInstances)); }},
      {"5", "A-universal cover and regularity verdicts match the projections",
       [&] { return law(law_a_universal_correspondence(seed + 6, kInstances, BasisStyle::general)); }},
      {"6", "regular-open-cover and near-subcover formulations agree",
       [&] { return law(law_formulation_equivalence(seed + 8, kInstances)); }},
      {"7", "regular-open covers match empty regular-closed intersections",
       [&] { return law(law_fip_duality(seed + 9, kInstances)); }},
      {"8", "growth certificates", certificates},
      {"9", "round-trip and determinism", round_trip_and_determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << o.detail << "] ("
              << fmt_seconds(seconds_since(t0)) << ")\n";
  }

  // Same statements restricted to the classes where they hold.
  const LawReport qt = law_subspace_trace(seed + 5, kInstances, true);
  std::cout << "INFO criterion 4 restricted to quasi-topologies: " << (qt.passed() ? "holds" : "fails") << " ["
            << law_detail(qt) << "]\n";
  const LawReport pp = law_a_universal_correspondence(seed + 7, kInstances, BasisStyle::per_parameter);
  std::cout << "INFO criterion 5 restricted to per-parameter bases: " << (pp.passed() ? "holds" : "fails") << " ["
            << law_detail(pp) << "]\n";

  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL") << "\n";
  return failed == 0 ? 0 : 1;
}
