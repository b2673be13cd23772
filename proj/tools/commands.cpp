#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <ostream>

#include "qls/loader.hpp"
#include "qls/verify.hpp"
#include "vector_file.hpp"

namespace qls::tools {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitFileError = 2;
constexpr int kExitValidationError = 3;

// Loads the input file and hands a ready VectorSpec to `body`, folding the
// error kinds into exit codes.
template <typename Body>
int with_spec(const std::string& input_path, Body&& body) {
  try {
    const VectorFile file = read_vector_file(input_path);
    std::size_t clamped = 0;
    const VectorSpec spec = to_vector_spec(file, &clamped);
    if (clamped > 0) {
      std::cerr << "warning: clamped " << clamped << " value(s) into range\n";
    }
    return body(spec);
  } catch (const FileFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFileError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidationError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidationError;
  }
}

std::string metric_line(const char* name, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s %.12f", name, value);
  return buf;
}

}  // namespace

int cmd_run(const RunOptions& options) {
  return with_spec(options.input_path, [&](const VectorSpec& spec) {
    const PathCircuit circuit = build_loader(spec);

    std::ofstream file_out;
    if (!options.out_path.empty()) {
      file_out.open(options.out_path);
      if (!file_out) {
        std::cerr << "error: cannot write " << options.out_path << '\n';
        return kExitFileError;
      }
    }
    std::ostream& out = options.out_path.empty() ? std::cout : file_out;

    // Sections get '#' headers only when there is more than the final state.
    const bool sections = options.trace || options.shots > 0;
    StageObserver observer;
    if (options.trace) {
      observer = [&](std::size_t i, const Stage& stage, const SparseState& state) {
        out << "# trace " << i << ' ' << stage_label(stage) << '\n';
        write_state_records(out, state);
      };
    }
    const SparseState final_state =
        simulate(circuit, initial_state(circuit.layout), observer);
    if (sections) out << "# final\n";
    write_state_records(out, final_state);

    if (options.shots > 0) {
      const SampleHistogram histogram =
          sample(final_state, options.seed, options.shots);
      out << "# histogram shots=" << histogram.shots << " seed=" << histogram.seed
          << '\n';
      write_histogram(out, circuit.layout, histogram);
    }
    return kExitPass;
  });
}

int cmd_verify(const VerifyOptions& options) {
  return with_spec(options.input_path, [&](const VectorSpec& spec) {
    const RegisterLayout layout = spec.layout();
    const SparseState target = target_state(layout, spec.values);
    bool pass = true;

    const PathCircuit loader = build_loader(spec);
    const SparseState loaded = simulate(loader, initial_state(layout));
    const double fid = fidelity(loaded, target);
    pass = pass && fid >= 1.0 - kCircuitTolerance;
    std::cout << metric_line("fidelity", fid) << '\n';

    const double off = ancilla_off_probability(loaded);
    pass = pass && std::abs(off - 1.0) <= kStateTolerance;
    std::cout << metric_line("ancilla_off", off) << '\n';

    if (options.dense) {
      if (layout.total_qubits() <= kMaxDenseQubits) {
        const double residual = unitarity_residual(dense_unitary(loader));
        pass = pass && residual <= kCircuitTolerance;
        std::cout << "unitarity_residual " << format_real(residual) << '\n';
      } else {
        std::cout << "unitarity_residual skipped (cap)\n";
      }
    }

    if (options.ul) {
      const PathCircuit ul = build_uniform_index_loader(spec);
      const SparseState ul_out = simulate(ul, uniform_index_state(layout));
      const double ul_fid = fidelity(ul_out, target);
      pass = pass && ul_fid >= 1.0 - kCircuitTolerance;
      std::cout << metric_line("ul_fidelity", ul_fid) << '\n';

      const SparseState round_trip = simulate(dagger(ul), ul_out);
      const double rt_fid = fidelity(round_trip, uniform_index_state(layout));
      pass = pass && rt_fid >= 1.0 - kCircuitTolerance;
      std::cout << metric_line("ul_roundtrip", rt_fid) << '\n';
    }

    std::cout << "result " << (pass ? "pass" : "fail") << '\n';
    return pass ? kExitPass : kExitCheckFailed;
  });
}

int cmd_bench(const BenchOptions& options) {
  if (options.max_exp < 1 || options.max_exp > 20) {
    std::cerr << "error: --max-exp must be in [1, 20]\n";
    return kExitValidationError;
  }
  if (options.format != "csv" && options.format != "tsv") {
    std::cerr << "error: --format must be csv or tsv\n";
    return kExitValidationError;
  }
  const char sep = options.format == "csv" ? ',' : '\t';
  std::cout << "N" << sep << "parallel_depth" << sep << "gate_count" << sep
            << "classical_steps" << '\n';
  for (int k = 1; k <= options.max_exp; ++k) {
    const std::size_t n_values = std::size_t{1} << k;
    std::vector<std::uint64_t> values(n_values);
    for (std::size_t i = 0; i < n_values; ++i) values[i] = i % 15 + 1;
    const VectorSpec spec = pad_to_pow2(values, 4);
    const DepthReport report = depth_report(build_loader(spec));
    std::cout << n_values << sep << report.parallel_depth << sep
              << report.gate_count << sep << classical_load_steps(n_values)
              << '\n';
  }
  return kExitPass;
}

}  // namespace qls::tools
