#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "isomon/errors.hpp"

int main(int argc, char** argv) {
  using namespace isomon::cli;
  CLI::App app{"Discrete isomonodromic deformations of the 211,1111,1111 Fuchsian system"};
  app.require_subcommand(1);

  EvolveOptions ev;
  auto* evolve = app.add_subcommand("evolve", "Iterate Schlesinger steps and write the orbit CSV");
  evolve->add_option("state-file", ev.state_file, "GarnierState JSON")->required();
  evolve->add_option("--dir", ev.dir, "s1, s2 or alternate")->check(CLI::IsMember({"s1", "s2", "alternate"}));
  evolve->add_option("--steps", ev.steps, "Number of steps")->check(CLI::NonNegativeNumber);
  evolve->add_option("--out", ev.out, "Orbit CSV (default stdout)");
  evolve->add_option("--verify-monodromy", ev.verify_every, "Compare monodromy every K steps")
      ->check(CLI::NonNegativeNumber);

  DegenerationOptions dg;
  auto* degen = app.add_subcommand("degenerations", "Build the degeneration graph of spectral types");
  auto* seeds = degen->add_option("--seeds", dg.seeds_file, "Seed types: JSON array or one type per line");
  auto* oshima = degen->add_flag("--oshima-3pt", dg.oshima_3pt, "Seed with the three-point four-parameter types");
  seeds->excludes(oshima);
  degen->add_option("--out", dg.out, "Graph JSON (default stdout)");
  degen->add_option("--dot", dg.dot, "Graphviz output");
  degen->add_option("--expected", dg.expected, "Expected edges, one 'from -> to' per line");

  VerifyOptions vf;
  auto* verify = app.add_subcommand("verify", "Run invariant suites on a state");
  verify->add_option("state-file", vf.state_file, "GarnierState JSON")->required();
  verify->add_option("--suite", vf.suite, "exponents, gauge, monodromy or all")
      ->check(CLI::IsMember({"exponents", "gauge", "monodromy", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*evolve) return cmd_evolve(ev);
    if (*degen) {
      if (!dg.seeds_file && !dg.oshima_3pt) throw Failure{kInputError, "degenerations needs --seeds or --oshima-3pt"};
      return cmd_degenerations(dg);
    }
    return cmd_verify(vf);
  } catch (const Failure& f) {
    std::cerr << "isomon: " << f.message << "\n";
    return f.code;
  } catch (const isomon::Error& e) {
    std::cerr << "isomon: " << e.what() << "\n";
    return kNonGeneric;
  }
}
