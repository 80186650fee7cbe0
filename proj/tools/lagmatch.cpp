// lagmatch: command-line front end.
//
//   lagmatch dim        --input FILE | --fixture NAME  [--json]
//   lagmatch tqft-eval  --input FILE | --fixture NAME  [--json]
//   lagmatch cz         --input FILE | --fixture NAME  [--json]
//   lagmatch gradings   --input FILE | --fixture NAME  [--json]
//   lagmatch example NAME --m M --n N                  [--json]
//
// LAGMATCH_THREADS sets the worker count for tqft-eval (default 1).

#include <CLI11.hpp>
#include <iostream>

#include "lagmatch/cli.hpp"
#include "lagmatch/cobordism_tqft.hpp"
#include "lagmatch/document.hpp"
#include "lagmatch/errors.hpp"

int main(int argc, char** argv) {
  using namespace lagmatch;
  CLI::App app{"Lagrangian matching invariants: dimensions, field-theory evaluation, index bookkeeping"};
  app.require_subcommand(1);
  CommandRequest req;
  std::string input, fixture;

  std::string fixture_help = "embedded fixture document (";
  {
    bool first = true;
    for (const auto& n : fixture_names()) {
      fixture_help += (first ? "" : ", ") + n;
      first = false;
    }
    fixture_help += ")";
  }

  auto add_document_command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* in = sub->add_option("--input", input, "input document (JSON)");
    auto* fx = sub->add_option("--fixture", fixture, fixture_help);
    in->excludes(fx);
    sub->add_flag("--json", req.json, "machine-readable report");
    return sub;
  };
  add_document_command("dim", "formal dimension, admissibility and point counts per spin-c structure");
  add_document_command("tqft-eval", "closed evaluation of a Morse cycle");
  add_document_command("cz", "Conley-Zehnder index of sampled symplectic paths");
  add_document_command("gradings", "grading modulus, divisibility and monotonicity thresholds");

  std::string names;
  for (const auto& n : example_names()) names += (names.empty() ? "" : ", ") + n;
  CLI::App* ex = app.add_subcommand("example", "worked example invariants (" + names + ")");
  ex->add_option("name", req.example_name, "example name")->required();
  ex->add_option("--m", req.m, "first class coordinate");
  ex->add_option("--n", req.n, "second class coordinate");
  ex->add_flag("--json", req.json, "machine-readable report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSchema;
  }

  req.command = app.get_subcommands().front()->get_name();
  if (!input.empty()) req.input_file = input;
  if (!fixture.empty()) req.fixture = fixture;
  try {
    req.threads = threads_from_environment();
  } catch (const SchemaError& e) {
    std::cerr << "lagmatch: " << e.what() << "\n";
    return kExitSchema;
  }
  return run_command(req, std::cout, std::cerr);
}
