// Primitive unitaries: ancilla switches, XOR writers, diagonal phase
// flips, and single-qubit index rotations.
#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qls/state.hpp"

namespace qls {

// One-ancilla-level 2x2 rotations. With basis order (Off, On):
//   Split            = (1/sqrt2) [[ 1,  1], [ 1, -1]]   (involution)
//   MergeMinus       = (1/sqrt2) [[ 1,  1], [-1,  1]]
//   MergeMinusDagger = (1/sqrt2) [[ 1, -1], [ 1,  1]]
// MergeMinusDagger never appears in a forward build; it exists so the
// adjoint of a circuit stays representable.
enum class SwitchKind { Split, MergeMinus, MergeMinusDagger };

enum class WriteTarget { Index, Value };

// Restricts a gate to entries whose ancilla bit `level` matches `on`.
struct Condition {
  int level = 0;
  bool on = false;

  friend bool operator==(const Condition&, const Condition&) = default;
};

// Sorted, duplicate-free set of (index, value) pairs — the support of a
// diagonal phase flip.
class PairSet {
 public:
  using Pair = std::pair<std::uint64_t, std::uint64_t>;

  PairSet() = default;
  explicit PairSet(std::vector<Pair> pairs);  // throws on duplicates

  bool contains(std::uint64_t index, std::uint64_t value) const;
  const std::vector<Pair>& pairs() const { return pairs_; }
  bool empty() const { return pairs_.empty(); }
  std::size_t size() const { return pairs_.size(); }

  friend bool operator==(const PairSet&, const PairSet&) = default;

 private:
  std::vector<Pair> pairs_;
};

// Applies the SwitchKind matrix on ancilla bit `level` of every entry.
// Amplitudes that cancel exactly disappear from the map.
void apply_switch(SparseState& state, int level, SwitchKind kind);

// XORs `pattern` into the index or value field of every entry satisfying
// `cond` (all entries if absent). Self-inverse; amplitudes unchanged.
void apply_xor_write(SparseState& state, WriteTarget target, std::uint64_t pattern,
                     const std::optional<Condition>& cond = std::nullopt);

// Negates the amplitude of entries satisfying `cond` whose (index, value)
// is in `pairs`. Diagonal, unitary, self-inverse.
void apply_phase_flip(SparseState& state, const PairSet& pairs,
                      const std::optional<Condition>& cond = std::nullopt);

// Standard +-1/sqrt2 rotation (Split matrix) on one index qubit; qubit 0
// is the least significant index bit.
void apply_index_hadamard(SparseState& state, int index_qubit);

}  // namespace qls
