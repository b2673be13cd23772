#include "qls/verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

namespace qls {

DenseUnitary dense_unitary(const PathCircuit& circuit) {
  const RegisterLayout& layout = circuit.layout;
  if (layout.total_qubits() > kMaxDenseQubits) {
    throw std::invalid_argument("dense materialization capped at 12 qubits");
  }
  const std::size_t dim = layout.dimension();
  DenseUnitary matrix;
  matrix.dimension = dim;
  matrix.elements.assign(dim * dim, Amplitude{0.0, 0.0});
  for (std::size_t col = 0; col < dim; ++col) {
    SparseState basis(layout);
    basis.set_amplitude(unpack(layout, col), Amplitude{1.0, 0.0});
    const SparseState column = simulate(circuit, basis);
    for (const auto& [row, amp] : column.entries()) {
      matrix.at(row, col) = amp;
    }
  }
  return matrix;
}

double unitarity_residual(const DenseUnitary& matrix) {
  const std::size_t dim = matrix.dimension;
  if (matrix.elements.size() != dim * dim) {
    throw std::invalid_argument("matrix storage does not match its dimension");
  }
  // Nonzero rows per column, so Gram entries cost only the true support.
  std::vector<std::vector<std::pair<std::size_t, Amplitude>>> columns(dim);
  for (std::size_t row = 0; row < dim; ++row) {
    for (std::size_t col = 0; col < dim; ++col) {
      const Amplitude a = matrix.at(row, col);
      if (a != Amplitude{0.0, 0.0}) columns[col].emplace_back(row, a);
    }
  }
  double residual = 0.0;
  std::vector<Amplitude> dense_col(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::fill(dense_col.begin(), dense_col.end(), Amplitude{0.0, 0.0});
    for (const auto& [row, a] : columns[j]) dense_col[row] = a;
    for (std::size_t i = 0; i <= j; ++i) {
      Amplitude dot{0.0, 0.0};
      for (const auto& [row, a] : columns[i]) {
        dot += std::conj(a) * dense_col[row];
      }
      if (i == j) dot -= 1.0;
      residual = std::max(residual, std::abs(dot));
    }
  }
  return residual;
}

double fidelity(const SparseState& state, const SparseState& target) {
  return std::abs(inner_product(target, state));
}

double ancilla_off_probability(const SparseState& state) {
  const RegisterLayout& layout = state.layout();
  const int anc_shift = layout.value_qubits + layout.index_qubits;
  double total = 0.0;
  for (const auto& [key, amp] : state.entries()) {
    if ((key >> anc_shift) == 0) total += std::norm(amp);
  }
  return total;
}

SampleHistogram sample(const SparseState& state, std::uint64_t seed,
                       std::uint64_t shots) {
  if (shots < 1) throw std::invalid_argument("need at least one shot");
  const auto entries = state.sorted_entries();
  if (entries.empty()) throw std::invalid_argument("cannot sample the zero state");
  std::vector<double> cumulative;
  cumulative.reserve(entries.size());
  double total = 0.0;
  for (const auto& [key, amp] : entries) {
    total += std::norm(amp);
    cumulative.push_back(total);
  }

  SampleHistogram histogram;
  histogram.shots = shots;
  histogram.seed = seed;
  std::mt19937_64 gen(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53 * total;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;  // u landed past the last edge
    const std::size_t pick = static_cast<std::size_t>(it - cumulative.begin());
    ++histogram.counts[entries[pick].first];
  }
  return histogram;
}

void write_histogram(std::ostream& out, const RegisterLayout& layout,
                     const SampleHistogram& histogram) {
  for (const auto& [key, count] : histogram.counts) {
    const BasisState basis = unpack(layout, key);
    out << basis.index << ' ' << basis.value << ' '
        << ancilla_bit_string(layout, basis.ancilla) << ' ' << count << '\n';
  }
}

std::uint64_t classical_load_steps(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("vector length must be positive");
  return n;
}

}  // namespace qls
