// Sparse complex state vector over the composite register.
#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qls/registers.hpp"

namespace qls {

using Amplitude = std::complex<double>;

// Entries below this magnitude are dropped, so exact interference
// cancellations leave no residue behind.
inline constexpr double kPruneEpsilon = 1e-15;
// Entrywise tolerance for state comparisons.
inline constexpr double kStateTolerance = 1e-12;
// Tolerance for whole-circuit contracts (fidelity, unitarity residual).
inline constexpr double kCircuitTolerance = 1e-10;

// Map from packed basis label to amplitude. Absent keys have amplitude zero.
// Gates keep the norm at 1 (within kStateTolerance) and never store entries
// smaller than kPruneEpsilon or non-finite amplitudes.
class SparseState {
 public:
  using EntryMap = std::unordered_map<std::uint64_t, Amplitude>;

  explicit SparseState(const RegisterLayout& layout) : layout_(layout) {}
  SparseState(const RegisterLayout& layout, EntryMap entries);

  const RegisterLayout& layout() const { return layout_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Amplitude amplitude(const BasisState& basis) const;
  Amplitude amplitude_at(std::uint64_t packed) const;

  // Inserts, overwrites, or (for magnitudes below kPruneEpsilon) erases.
  // Throws on out-of-range fields or non-finite amplitudes.
  void set_amplitude(const BasisState& basis, Amplitude amplitude);

  const EntryMap& entries() const { return entries_; }
  // Hands a transformed map back to the state. Prunes tiny entries and
  // rejects non-finite amplitudes; keys are trusted to be in range.
  void replace_entries(EntryMap entries);

  // Entries in ascending packed order; the canonical order for
  // serialization and sampling.
  std::vector<std::pair<std::uint64_t, Amplitude>> sorted_entries() const;

 private:
  RegisterLayout layout_;
  EntryMap entries_;
};

// |0...0>|0...0>|all Off>, the loader input.
SparseState initial_state(const RegisterLayout& layout);

// (1/sqrt(N)) sum_i |i>|0>|all Off>, the uniform-index input.
SparseState uniform_index_state(const RegisterLayout& layout);

// (1/sqrt(N)) sum_i |i>|values[i]>|all Off>. Requires exactly
// layout.index_count() values; duplicates are fine, entries stay distinct
// by index.
SparseState target_state(const RegisterLayout& layout,
                         std::span<const std::uint64_t> values);

// Conjugate-linear in the first argument. Throws on layout mismatch.
Amplitude inner_product(const SparseState& lhs, const SparseState& rhs);

double norm(const SparseState& state);

// Removes entries with |amplitude| < epsilon.
void prune(SparseState& state, double epsilon = kPruneEpsilon);

// One record per entry, ascending packed order:
//   <index> <value> <ancilla bits, level L-1 first> <re> <im>
// with re and im printed to 17 significant digits.
void write_state_records(std::ostream& out, const SparseState& state);

// Shared record formatting, also used by histogram export.
std::string ancilla_bit_string(const RegisterLayout& layout, std::uint64_t ancilla);
std::string format_real(double x);

}  // namespace qls
