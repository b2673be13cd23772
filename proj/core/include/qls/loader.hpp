// Circuit builders: base two-value block, recursive loader over 2^n
// values, and the uniform-index variant; plus padding and quantization.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qls/circuit.hpp"
#include "qls/registers.hpp"

namespace qls {

// A classical vector ready to load: padded to a power of two, every value
// an m-bit pattern, padded tail zero.
struct VectorSpec {
  std::size_t logical_length = 0;  // length before padding
  int value_qubits = 0;
  std::vector<std::uint64_t> values;  // padded length 2^n
  std::size_t padding_count = 0;

  int index_qubits() const;
  RegisterLayout layout() const;
};

// Throws std::invalid_argument when the fields are inconsistent.
void validate(const VectorSpec& spec);

// Appends zeros up to the next power of two. Throws on an empty list or a
// value not representable in m bits.
VectorSpec pad_to_pow2(std::span<const std::uint64_t> values, int value_qubits);

struct QuantizedValues {
  std::vector<std::uint64_t> values;
  std::size_t clamped_count = 0;  // entries pushed back into [0, 2^m - 1]
};

// q(a) = clamp(round((a - offset) / scale), 0, 2^m - 1), rounding halves
// away from zero. Throws on non-finite input or scale <= 0.
QuantizedValues quantize(std::span<const double> reals, int value_qubits,
                         double scale, double offset);

// Stage fragment loading values[start .. start + 2^k) on a branch whose
// index/value registers are |0> and whose ancillas 0..k-1 are Off.
// Requires level == k - 1. Zero XOR patterns are suppressed; the phase
// correction over the upper half-block is always emitted.
StageList build_block(const VectorSpec& spec, std::size_t start, int k, int level);

// The full loader: initial_state -> (1/sqrt(N)) sum_i |i>|values[i]>|Off...>.
// n = 0 degenerates to a single value write.
PathCircuit build_loader(const VectorSpec& spec);

// Variant taking uniform_index_state as its designated input: undoes the
// uniform index preparation qubit by qubit, then runs the full loader.
PathCircuit build_uniform_index_loader(const VectorSpec& spec);

}  // namespace qls
