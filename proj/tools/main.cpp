#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "toricsplit/cli.hpp"

int main(int argc, char** argv) {
  using namespace toricsplit::cli;
  Options o;
  CLI::App app{"toricsplit: toric ideals, Graver bases and splitting numbers"};
  app.add_option("command", o.command,
                 "kernel | circuits | graver | markov | gamma | delta | bar-bounds | split | graph-gens | "
                 "kmn-split | family | verify-paper")
      ->required();
  app.add_option("args", o.args, "input file or command arguments");
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", o.budget, "work limit in elementary steps");
  app.add_flag("--assume-circuit-radical", o.assume_circuit_radical,
               "treat the circuits as generating I_A up to radical");
  app.add_option("--char", o.characteristic, "field characteristic")->check(CLI::IsMember({"0", "p", "any"}));
  app.add_option("--out", o.out, "write the report to FILE");
  app.add_option("--catalogue", o.catalogue, "use this catalogue instead of the built-in one");
  app.add_option("--radical-generators", o.radical_generators, "matrix file whose rows generate I_A up to radical");
  app.add_flag("--timing", o.timing, "include wall-clock time in the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ExitCode::input_error;
  }

  const auto outcome = run(o);
  const std::string text = o.format == "json" ? outcome.report.dump(2) + "\n" : render_text(outcome.report);
  if (outcome.report.contains("error")) std::cerr << "error: " << outcome.report["error"].get<std::string>() << "\n";
  if (o.out) {
    std::ofstream f(*o.out);
    if (!f) {
      std::cerr << "error: cannot write " << *o.out << "\n";
      return ExitCode::input_error;
    }
    f << text;
  } else {
    std::cout << text;
  }
  return outcome.exit_code;
}
