#include "qls/registers.hpp"

#include <stdexcept>
#include <string>

namespace qls {

RegisterLayout make_layout(int index_qubits, int value_qubits) {
  if (index_qubits < 0) {
    throw std::invalid_argument("make_layout: index_qubits must be >= 0");
  }
  if (value_qubits < 1) {
    throw std::invalid_argument("make_layout: value_qubits must be >= 1");
  }
  const int ancilla_levels = index_qubits > 0 ? index_qubits : 1;
  const int total = index_qubits + value_qubits + ancilla_levels;
  if (total > kMaxTotalQubits) {
    throw std::invalid_argument("make_layout: " + std::to_string(total) +
                                " total qubits exceeds the cap of " +
                                std::to_string(kMaxTotalQubits));
  }
  return RegisterLayout{index_qubits, value_qubits, ancilla_levels};
}

std::uint64_t pack(const RegisterLayout& layout, const BasisState& basis) {
  if (basis.index >= layout.index_count()) {
    throw std::out_of_range("pack: index field out of range");
  }
  if (basis.value >= layout.value_count()) {
    throw std::out_of_range("pack: value field out of range");
  }
  if (basis.ancilla >= layout.ancilla_count()) {
    throw std::out_of_range("pack: ancilla field out of range");
  }
  return ((basis.ancilla << layout.index_qubits | basis.index)
          << layout.value_qubits) |
         basis.value;
}

BasisState unpack(const RegisterLayout& layout, std::uint64_t packed) {
  if (packed >= layout.dimension()) {
    throw std::out_of_range("unpack: packed label out of range");
  }
  BasisState basis;
  basis.value = packed & (layout.value_count() - 1);
  basis.index = (packed >> layout.value_qubits) & (layout.index_count() - 1);
  basis.ancilla = packed >> (layout.value_qubits + layout.index_qubits);
  return basis;
}

}  // namespace qls
