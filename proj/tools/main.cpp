#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Builds, simulates, and verifies path-interference vector loaders"};
  app.require_subcommand(1);

  qls::tools::RunOptions run_options;
  CLI::App* run = app.add_subcommand("run", "Load a vector and print the state");
  run->add_option("--input", run_options.input_path, "vector file (JSON)")->required();
  run->add_option("--out", run_options.out_path, "output file (default: stdout)");
  run->add_flag("--trace", run_options.trace, "print the state after every stage");
  run->add_option("--shots", run_options.shots, "append a measurement histogram");
  run->add_option("--seed", run_options.seed, "sampling seed (default 0)");

  qls::tools::VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand("verify", "Check the loader contracts");
  verify->add_option("--input", verify_options.input_path, "vector file (JSON)")
      ->required();
  verify->add_flag("--dense", verify_options.dense,
                   "also check unitarity via the dense oracle (<= 12 qubits)");
  verify->add_flag("--ul", verify_options.ul,
                   "also check the uniform-index loader contract");

  qls::tools::BenchOptions bench_options;
  CLI::App* bench = app.add_subcommand("bench", "Tabulate depth and gate counts");
  bench->add_option("--max-exp", bench_options.max_exp, "largest k for N = 2^k")
      ->required();
  bench->add_option("--format", bench_options.format, "csv or tsv (default csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (run->parsed()) return qls::tools::cmd_run(run_options);
  if (verify->parsed()) return qls::tools::cmd_verify(verify_options);
  return qls::tools::cmd_bench(bench_options);
}
