// Composite register layout and canonical basis-state packing.
#pragma once

#include <cstdint>

namespace qls {

// Hard ceiling on index + value + ancilla qubits. Packed basis labels must
// fit comfortably in 64 bits, and circuit construction beyond this size is
// not useful at desk scale.
inline constexpr int kMaxTotalQubits = 48;

// The composite system: index qubits hold the component subscript, value
// qubits hold the component bit pattern, and one two-level ancilla per
// recursion level routes the interference paths. The ancilla level count is
// always max(index_qubits, 1); recursion level l owns ancilla l.
struct RegisterLayout {
  int index_qubits = 0;  // the loader handles 2^index_qubits components
  int value_qubits = 0;
  int ancilla_levels = 0;

  int total_qubits() const { return index_qubits + value_qubits + ancilla_levels; }
  std::uint64_t dimension() const { return std::uint64_t{1} << total_qubits(); }
  std::uint64_t index_count() const { return std::uint64_t{1} << index_qubits; }
  std::uint64_t value_count() const { return std::uint64_t{1} << value_qubits; }
  std::uint64_t ancilla_count() const { return std::uint64_t{1} << ancilla_levels; }

  friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;
};

// One computational basis label. Ancilla bit l is path level l: 0 = Off,
// 1 = On.
struct BasisState {
  std::uint64_t index = 0;
  std::uint64_t value = 0;
  std::uint64_t ancilla = 0;

  friend bool operator==(const BasisState&, const BasisState&) = default;
};

// Throws std::invalid_argument unless index_qubits >= 0, value_qubits >= 1
// and the total stays within kMaxTotalQubits.
RegisterLayout make_layout(int index_qubits, int value_qubits);

// Bit order, most significant first: ancilla, index, value. This ordering is
// fixed; serialized states depend on it byte for byte.
std::uint64_t pack(const RegisterLayout& layout, const BasisState& basis);
BasisState unpack(const RegisterLayout& layout, std::uint64_t packed);

}  // namespace qls
