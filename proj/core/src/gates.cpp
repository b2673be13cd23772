#include "qls/gates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qls {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct SwitchMatrix {
  // Rows and columns in (Off, On) order; entries are multiples of 1/sqrt2.
  double off_off, off_on, on_off, on_on;
};

SwitchMatrix switch_matrix(SwitchKind kind) {
  switch (kind) {
    case SwitchKind::Split:
      return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case SwitchKind::MergeMinus:
      return {kInvSqrt2, kInvSqrt2, -kInvSqrt2, kInvSqrt2};
    case SwitchKind::MergeMinusDagger:
      return {kInvSqrt2, -kInvSqrt2, kInvSqrt2, kInvSqrt2};
  }
  throw std::invalid_argument("unknown switch kind");
}

bool matches(const std::optional<Condition>& cond, const RegisterLayout& layout,
             std::uint64_t packed) {
  if (!cond) return true;
  const int bit = layout.value_qubits + layout.index_qubits + cond->level;
  return (((packed >> bit) & 1) != 0) == cond->on;
}

void check_condition(const std::optional<Condition>& cond, const RegisterLayout& layout) {
  if (cond && (cond->level < 0 || cond->level >= layout.ancilla_levels)) {
    throw std::out_of_range("condition level outside ancilla range");
  }
}

// Applies a 2x2 rotation on packed bit `bit` of every entry.
void apply_two_level(SparseState& state, int bit, const SwitchMatrix& m) {
  SparseState::EntryMap next;
  next.reserve(state.entries().size() * 2);
  const std::uint64_t mask = std::uint64_t{1} << bit;
  for (const auto& [key, amp] : state.entries()) {
    const std::uint64_t off_key = key & ~mask;
    const std::uint64_t on_key = key | mask;
    if (key == off_key) {
      next[off_key] += m.off_off * amp;
      next[on_key] += m.on_off * amp;
    } else {
      next[off_key] += m.off_on * amp;
      next[on_key] += m.on_on * amp;
    }
  }
  state.replace_entries(std::move(next));
}

}  // namespace

PairSet::PairSet(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end()) {
    throw std::invalid_argument("duplicate (index, value) pair");
  }
}

bool PairSet::contains(std::uint64_t index, std::uint64_t value) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), Pair{index, value});
}

void apply_switch(SparseState& state, int level, SwitchKind kind) {
  const RegisterLayout& layout = state.layout();
  if (level < 0 || level >= layout.ancilla_levels) {
    throw std::out_of_range("switch level outside ancilla range");
  }
  apply_two_level(state, layout.value_qubits + layout.index_qubits + level,
                  switch_matrix(kind));
}

void apply_xor_write(SparseState& state, WriteTarget target, std::uint64_t pattern,
                     const std::optional<Condition>& cond) {
  const RegisterLayout& layout = state.layout();
  check_condition(cond, layout);
  int shift = 0;
  std::uint64_t limit = 0;
  if (target == WriteTarget::Index) {
    shift = layout.value_qubits;
    limit = layout.index_count();
  } else {
    shift = 0;
    limit = layout.value_count();
  }
  if (pattern >= limit) {
    throw std::out_of_range("write pattern outside target register range");
  }
  if (pattern == 0) return;
  const std::uint64_t shifted = pattern << shift;
  SparseState::EntryMap next;
  next.reserve(state.entries().size());
  for (const auto& [key, amp] : state.entries()) {
    next[matches(cond, layout, key) ? key ^ shifted : key] = amp;
  }
  state.replace_entries(std::move(next));
}

void apply_phase_flip(SparseState& state, const PairSet& pairs,
                      const std::optional<Condition>& cond) {
  const RegisterLayout& layout = state.layout();
  check_condition(cond, layout);
  for (const auto& [index, value] : pairs.pairs()) {
    if (index >= layout.index_count() || value >= layout.value_count()) {
      throw std::out_of_range("phase pair outside register range");
    }
  }
  if (pairs.empty()) return;
  SparseState::EntryMap next = state.entries();
  for (auto& [key, amp] : next) {
    if (!matches(cond, layout, key)) continue;
    const BasisState basis = unpack(layout, key);
    if (pairs.contains(basis.index, basis.value)) amp = -amp;
  }
  state.replace_entries(std::move(next));
}

void apply_index_hadamard(SparseState& state, int index_qubit) {
  const RegisterLayout& layout = state.layout();
  if (index_qubit < 0 || index_qubit >= layout.index_qubits) {
    throw std::out_of_range("index qubit outside register range");
  }
  apply_two_level(state, layout.value_qubits + index_qubit,
                  switch_matrix(SwitchKind::Split));
}

}  // namespace qls
