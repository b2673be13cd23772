// Independent checks: dense unitary materialization, unitarity residual,
// fidelity, ancilla statistics, and seeded measurement sampling.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "qls/circuit.hpp"
#include "qls/state.hpp"

namespace qls {

// Dense checks are capped at this many total qubits (4096x4096 matrices).
inline constexpr int kMaxDenseQubits = 12;

// Row-major complex matrix over the full register space.
struct DenseUnitary {
  std::size_t dimension = 0;
  std::vector<Amplitude> elements;  // dimension * dimension, row-major

  Amplitude& at(std::size_t row, std::size_t col) {
    return elements[row * dimension + col];
  }
  const Amplitude& at(std::size_t row, std::size_t col) const {
    return elements[row * dimension + col];
  }
};

// Materializes the circuit column by column: column j is the simulation of
// basis state j. Throws when the layout exceeds kMaxDenseQubits.
DenseUnitary dense_unitary(const PathCircuit& circuit);

// Max-abs entry of (adjoint * matrix - identity).
double unitarity_residual(const DenseUnitary& matrix);

// |<target|state>|.
double fidelity(const SparseState& state, const SparseState& target);

// Total probability on entries whose ancilla bits are all Off.
double ancilla_off_probability(const SparseState& state);

struct SampleHistogram {
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  std::map<std::uint64_t, std::uint64_t> counts;  // packed basis -> count

  friend bool operator==(const SampleHistogram&, const SampleHistogram&) = default;
};

// `shots` i.i.d. draws from |amplitude|^2. Deterministic for a fixed seed:
// the generator is std::mt19937_64, uniforms are (x >> 11) * 2^-53, and
// outcomes are resolved against the cumulative distribution in ascending
// packed order.
SampleHistogram sample(const SparseState& state, std::uint64_t seed,
                       std::uint64_t shots);

// One record per outcome, ascending packed order:
//   <index> <value> <ancilla bits, level L-1 first> <count>
void write_histogram(std::ostream& out, const RegisterLayout& layout,
                     const SampleHistogram& histogram);

// Sequential loading baseline: one unit step per component.
std::uint64_t classical_load_steps(std::uint64_t n);

}  // namespace qls
