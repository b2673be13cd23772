#include "qls/loader.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qls {

namespace {

void append_writers(StageList& stages, std::uint64_t index_pattern,
                    std::uint64_t value_pattern) {
  if (index_pattern != 0) {
    stages.push_back(Stage{WriteStage{WriteTarget::Index, index_pattern, {}}});
  }
  if (value_pattern != 0) {
    stages.push_back(Stage{WriteStage{WriteTarget::Value, value_pattern, {}}});
  }
}

}  // namespace

int VectorSpec::index_qubits() const {
  if (values.empty() || !std::has_single_bit(values.size())) {
    throw std::invalid_argument("padded values length must be a power of two");
  }
  return std::bit_width(values.size()) - 1;
}

RegisterLayout VectorSpec::layout() const {
  return make_layout(index_qubits(), value_qubits);
}

void validate(const VectorSpec& spec) {
  const int n = spec.index_qubits();  // also checks the power-of-two shape
  if (spec.value_qubits < 1 || spec.value_qubits > 32) {
    throw std::invalid_argument("value qubits must be in [1, 32]");
  }
  if (spec.logical_length + spec.padding_count != spec.values.size()) {
    throw std::invalid_argument("logical length and padding do not add up");
  }
  if (spec.logical_length == 0) {
    throw std::invalid_argument("logical length must be positive");
  }
  if (n > 0 && spec.logical_length <= spec.values.size() / 2) {
    throw std::invalid_argument("padded length is not minimal");
  }
  const std::uint64_t limit = std::uint64_t{1} << spec.value_qubits;
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    if (spec.values[i] >= limit) {
      throw std::invalid_argument("value does not fit in the value register");
    }
    if (i >= spec.logical_length && spec.values[i] != 0) {
      throw std::invalid_argument("padded tail must be zero");
    }
  }
}

VectorSpec pad_to_pow2(std::span<const std::uint64_t> values, int value_qubits) {
  if (values.empty()) {
    throw std::invalid_argument("cannot load an empty vector");
  }
  VectorSpec spec;
  spec.logical_length = values.size();
  spec.value_qubits = value_qubits;
  spec.values.assign(values.begin(), values.end());
  spec.values.resize(std::bit_ceil(values.size()), 0);
  spec.padding_count = spec.values.size() - spec.logical_length;
  validate(spec);
  return spec;
}

QuantizedValues quantize(std::span<const double> reals, int value_qubits,
                         double scale, double offset) {
  if (value_qubits < 1 || value_qubits > 32) {
    throw std::invalid_argument("value qubits must be in [1, 32]");
  }
  if (!std::isfinite(scale) || scale <= 0.0 || !std::isfinite(offset)) {
    throw std::invalid_argument("scale must be finite and positive, offset finite");
  }
  const double max_pattern =
      static_cast<double>((std::uint64_t{1} << value_qubits) - 1);
  QuantizedValues out;
  out.values.reserve(reals.size());
  for (double a : reals) {
    if (!std::isfinite(a)) {
      throw std::invalid_argument("cannot quantize a non-finite value");
    }
    const double r = std::round((a - offset) / scale);
    if (r < 0.0) {
      out.values.push_back(0);
      ++out.clamped_count;
    } else if (r > max_pattern) {
      out.values.push_back(static_cast<std::uint64_t>(max_pattern));
      ++out.clamped_count;
    } else {
      out.values.push_back(static_cast<std::uint64_t>(r));
    }
  }
  return out;
}

StageList build_block(const VectorSpec& spec, std::size_t start, int k, int level) {
  if (k < 1 || level != k - 1) {
    throw std::invalid_argument("block level must equal its size exponent minus one");
  }
  const std::size_t size = std::size_t{1} << k;
  if (start + size > spec.values.size()) {
    throw std::out_of_range("block range outside the vector");
  }

  StageList stages;
  stages.push_back(Stage{SwitchStage{level, SwitchKind::Split}});

  BranchStage branch;
  branch.level = level;
  std::vector<PairSet::Pair> upper_pairs;
  if (k == 1) {
    append_writers(branch.on_block, start, spec.values[start]);
    append_writers(branch.off_block, start + 1, spec.values[start + 1]);
    upper_pairs.emplace_back(start + 1, spec.values[start + 1]);
  } else {
    const std::size_t half = size / 2;
    branch.on_block = build_block(spec, start, k - 1, level - 1);
    branch.off_block = build_block(spec, start + half, k - 1, level - 1);
    for (std::size_t i = start + half; i < start + size; ++i) {
      upper_pairs.emplace_back(i, spec.values[i]);
    }
  }
  stages.push_back(Stage{std::move(branch)});

  stages.push_back(Stage{SwitchStage{level, SwitchKind::MergeMinus}});
  stages.push_back(
      Stage{PhaseStage{PairSet(std::move(upper_pairs)), Condition{level, true}}});
  stages.push_back(Stage{SwitchStage{level, SwitchKind::Split}});
  return stages;
}

PathCircuit build_loader(const VectorSpec& spec) {
  validate(spec);
  const int n = spec.index_qubits();
  PathCircuit circuit{spec.layout(), {}};
  if (n == 0) {
    append_writers(circuit.stages, 0, spec.values[0]);
  } else {
    circuit.stages = build_block(spec, 0, n, n - 1);
  }
  return circuit;
}

PathCircuit build_uniform_index_loader(const VectorSpec& spec) {
  validate(spec);
  const int n = spec.index_qubits();
  PathCircuit prep{spec.layout(), {}};
  for (int q = 0; q < n; ++q) {
    prep.stages.push_back(Stage{IndexHadamardStage{q}});
  }
  PathCircuit circuit = dagger(prep);
  PathCircuit loader = build_loader(spec);
  circuit.stages.insert(circuit.stages.end(),
                        std::make_move_iterator(loader.stages.begin()),
                        std::make_move_iterator(loader.stages.end()));
  return circuit;
}

}  // namespace qls
