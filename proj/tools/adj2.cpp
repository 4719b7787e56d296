#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "adj2/fixtures.hpp"
#include "adj2/suites.hpp"

using namespace adj2;

namespace {

struct Inputs {
  std::vector<std::string> files;
  bool fixtures = false;
  int random = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = SearchBudget{}.limit;
};

Workspace load(const Inputs& in) {
  Workspace ws(SearchBudget{in.budget});
  bool any = !in.files.empty() || in.random > 0;
  if (in.fixtures || !any) add_builtin_fixtures(ws);
  if (in.random > 0) add_random_fixtures(ws, in.random, in.seed);
  for (const auto& f : in.files) ws.load_file(f);
  return ws;
}

int finish(const Report& r, const std::string& report_path) {
  std::cout << r.text();
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) {
      std::cerr << "adj2: cannot write " << report_path << '\n';
      return 2;
    }
    out << r.sidecar();
  }
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Universal arrows, extension-form monads and the adjunction between them"};
  app.require_subcommand(1);
  app.fallthrough();

  Inputs in;
  std::string report_path;
  bool strict = false;
  app.add_option("--load", in.files, "Fixture file to load (repeatable)")->check(CLI::ExistingFile);
  app.add_flag("--fixtures", in.fixtures, "Load the built-in fixtures (default when nothing else is loaded)");
  app.add_option("--random", in.random, "Add N random closure instances")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", in.seed, "Seed for --random");
  app.add_option("--budget", in.budget, "Cap on enumerated candidates per search");
  app.add_option("--report", report_path, "Write a key=value sidecar to this path");
  app.add_flag("--strict", strict, "Restrict to cells whose 1-cells have identity rho");

  auto* validate = app.add_subcommand("validate", "Build and check every entity");
  validate->add_option("files", in.files, "Fixture files")->check(CLI::ExistingFile);

  std::string entity, fn, arrow, monad, group = "all";
  auto* derive = app.add_subcommand("derive", "Print the image of an entity under phi, psi, F, G, H or K");
  derive->add_option("entity", entity)->required();
  derive->add_option("functor", fn)->required()->check(CLI::IsMember({"phi", "psi", "F", "G", "H", "K"}));

  auto* adjunction = app.add_subcommand("adjunction", "Triangle identities, hom bijection and 2-naturality");
  adjunction->add_option("arrow", arrow)->required();
  adjunction->add_option("monad", monad)->required();

  auto* roundtrip = app.add_subcommand("roundtrip", "GF, FG, HK or KH on an entity");
  roundtrip->add_option("entity", entity)->required();

  auto* square = app.add_subcommand("square", "Commutation of the square of 2-functors");
  square->add_option("group", group, "builtin, random, a file stem or all");

  auto* dump = app.add_subcommand("dump", "Print every loaded entity in the text format");
  dump->add_option("group", group, "builtin, random, a file stem or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Workspace ws = load(in);
    SuiteOptions opts{SearchBudget{in.budget}, strict};
    if (*validate) return finish(cmd_validate(ws), report_path);
    if (*derive) {
      std::cout << cmd_derive(ws, entity, fn);
      return 0;
    }
    if (*adjunction) return finish(cmd_adjunction(ws, arrow, monad, opts), report_path);
    if (*roundtrip) return finish(cmd_roundtrip(ws, entity, opts), report_path);
    if (*square) return finish(cmd_square(ws, group, opts), report_path);
    if (*dump) {
      std::cout << dump_workspace(ws, group == "all" ? std::string{} : group);
      return 0;
    }
  } catch (const LawError& e) {
    std::cerr << "adj2: " << fault_name(e.kind()) << ": " << e.witness() << '\n';
    return e.kind() == Fault::ParseError || e.kind() == Fault::UnknownEntity ? 2 : 1;
  }
  return 2;
}
