#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "softgt/errors.hpp"
#include "softgt/io/document.hpp"
#include "softgt/io/fixtures.hpp"
#include "softgt/io/report.hpp"

namespace {

enum Exit { kPass = 0, kFail = 1, kInputError = 2, kThreshold = 3 };

struct Source {
  std::string file;
  std::string fixture;

  std::optional<softgt::io::SpaceDocument> load() const {
    if (!file.empty() && !fixture.empty()) throw softgt::PreconditionError("pass --file or --fixture, not both");
    if (!file.empty()) return softgt::io::load(file);
    if (!fixture.empty()) {
      return softgt::io::parse_document(softgt::io::fixture_text(fixture), fixture);
    }
    return std::nullopt;
  }
};

}  // namespace

int main(int argc, char** argv) {
  using namespace softgt;

  CLI::App app{"softgt: finite soft generalized topology workbench"};
  app.require_subcommand(1);

  Source source;
  io::CheckOptions opt;
  std::string format = "text";
  app.add_option("--file", source.file, "space document to load")->check(CLI::ExistingFile);
  app.add_option("--fixture", source.fixture, "bundled fixture name");
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--seed", opt.seed, "seed for random instances");
  app.add_option("--n-max", opt.n_max, "largest truncation index for witness");

  std::string ran;
  auto check = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help)->fallthrough();
    sub->callback([&ran, name] { ran = name; });
    return sub;
  };

  check("regular", "open, closed and regular-open sets of the document's space");
  check("compactness", "near compactness verdicts and worst-case subcover sizes")
      ->add_option("--cover", opt.cover, "restrict to one named cover");
  check("fip", "intersection property of a regular-closed family")
      ->add_option("--sets", opt.sets, "named sets forming the family (default: complements of regular-open sets)")
      ->delimiter(',');
  check("subspace", "regular-open sets of a subspace against traces")
      ->add_option("--subset", opt.subset, "named set spanning the subspace")
      ->required();
  check("project", "the generalized topology at a parameter")
      ->add_option("--param", opt.parameter, "parameter name (default: all)");
  CLI::App* witness = check("witness", "growth certificate for a truncation family");
  witness->add_option("family", opt.family, "family name")->required();
  witness->add_option("n_max", opt.n_max, "largest truncation index");
  witness->add_option("--params", opt.params, "parameter count for soft families");
  CLI::App* laws = check("lawsuite", "seeded property suites");
  laws->add_option("--count", opt.count, "instances per suite");
  laws->add_option("--suite", opt.suite, "run suites whose name contains this text");
  app.add_subcommand("dump", "print the canonical text form of the document")->fallthrough()->callback([&ran] {
    ran = "dump";
  });
  app.add_subcommand("fixtures", "list bundled fixtures")->callback([&ran] { ran = "fixtures"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    if (ran == "fixtures") {
      for (const auto& f : io::fixtures()) std::cout << f.name << "\n";
      return kPass;
    }
    const auto doc = source.load();
    if (ran == "dump") {
      if (!doc) throw PreconditionError("dump needs --file or --fixture");
      const std::string text = io::serialize(*doc);
      if (format == "machine") {
        std::cout << io::machine_text(io::Json{{"check", "dump"}, {"document", text}, {"status", "pass"}});
      } else {
        std::cout << text;
      }
      return kPass;
    }
    const io::CheckReport report = io::run_check(doc, ran, opt);
    std::cout << (format == "machine" ? io::machine_text(report.payload) : io::human_text(report.payload));
    return report.status == 0 ? kPass : kFail;
  } catch (const ThresholdExceeded& e) {
    std::cerr << "threshold exceeded: " << e.what() << "\n";
    return kThreshold;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
