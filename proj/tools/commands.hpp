// The three CLI commands. Each returns a process exit code:
//   0 pass, 1 verification failure, 2 I/O or parse failure,
//   3 validation failure.
#pragma once

#include <cstdint>
#include <string>

namespace qls::tools {

struct RunOptions {
  std::string input_path;
  std::string out_path;  // empty = stdout
  bool trace = false;
  std::uint64_t shots = 0;  // 0 = no histogram
  std::uint64_t seed = 0;
};

struct VerifyOptions {
  std::string input_path;
  bool dense = false;
  bool ul = false;
};

struct BenchOptions {
  int max_exp = 1;
  std::string format = "csv";
};

int cmd_run(const RunOptions& options);
int cmd_verify(const VerifyOptions& options);
int cmd_bench(const BenchOptions& options);

}  // namespace qls::tools
