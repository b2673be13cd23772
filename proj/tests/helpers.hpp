// Shared test utilities: RNG helpers, analytic checkpoint states for the
// two- and four-value pipelines, entrywise comparison, and circuit surgery.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "qls/circuit.hpp"
#include "qls/loader.hpp"
#include "qls/registers.hpp"
#include "qls/state.hpp"

namespace qls::testing {

inline std::uint64_t random_pattern(std::mt19937_64& rng, int bits) {
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << bits) - 1);
  return dist(rng);
}

inline std::vector<std::uint64_t> random_values(std::mt19937_64& rng,
                                                std::size_t count, int bits) {
  std::vector<std::uint64_t> values(count);
  for (auto& v : values) v = random_pattern(rng, bits);
  return values;
}

// Values pairwise distinct — the "generic" regime where every phase
// correction visibly matters. Requires count <= 2^bits.
inline std::vector<std::uint64_t> random_distinct_values(std::mt19937_64& rng,
                                                         std::size_t count,
                                                         int bits) {
  std::vector<std::uint64_t> pool(std::size_t{1} << bits);
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(count);
  return pool;
}

// Max |lhs - rhs| over the union of basis labels.
inline double max_entrywise_diff(const SparseState& lhs, const SparseState& rhs) {
  double diff = 0.0;
  for (const auto& [key, amp] : lhs.entries()) {
    diff = std::max(diff, std::abs(amp - rhs.amplitude_at(key)));
  }
  for (const auto& [key, amp] : rhs.entries()) {
    diff = std::max(diff, std::abs(lhs.amplitude_at(key) - amp));
  }
  return diff;
}

// The five states of the two-value pipeline after each top-level stage:
// split, branch writers, merge with the minus sign on (1, a1, On), phase
// correction, final split.
inline std::array<SparseState, 5> two_value_checkpoints(const RegisterLayout& layout,
                                                        std::uint64_t a0,
                                                        std::uint64_t a1) {
  const double c = std::sqrt(0.5);
  const double h = 0.5;
  std::array<SparseState, 5> states{SparseState(layout), SparseState(layout),
                                    SparseState(layout), SparseState(layout),
                                    SparseState(layout)};
  states[0].set_amplitude({0, 0, 0}, c);
  states[0].set_amplitude({0, 0, 1}, c);

  states[1].set_amplitude({1, a1, 0}, c);
  states[1].set_amplitude({0, a0, 1}, c);

  states[2].set_amplitude({0, a0, 0}, h);
  states[2].set_amplitude({1, a1, 0}, h);
  states[2].set_amplitude({0, a0, 1}, h);
  states[2].set_amplitude({1, a1, 1}, -h);

  states[3].set_amplitude({0, a0, 0}, h);
  states[3].set_amplitude({1, a1, 0}, h);
  states[3].set_amplitude({0, a0, 1}, h);
  states[3].set_amplitude({1, a1, 1}, h);

  states[4].set_amplitude({0, a0, 0}, c);
  states[4].set_amplitude({1, a1, 0}, c);
  return states;
}

// The five states of the four-value pipeline after each top-level stage.
// Ancilla bit 1 is the outer level: the On path carries the lower half.
inline std::array<SparseState, 5> four_value_checkpoints(
    const RegisterLayout& layout, const std::vector<std::uint64_t>& a) {
  const double c = std::sqrt(0.5);
  const double h = 0.5;
  const double q = h * c;  // 1 / (2 sqrt 2)
  std::array<SparseState, 5> states{SparseState(layout), SparseState(layout),
                                    SparseState(layout), SparseState(layout),
                                    SparseState(layout)};
  states[0].set_amplitude({0, 0, 0}, c);
  states[0].set_amplitude({0, 0, 2}, c);

  for (std::uint64_t i = 0; i < 4; ++i) {
    const std::uint64_t anc = i < 2 ? 2 : 0;  // lower half rides the On path
    states[1].set_amplitude({i, a[i], anc}, h);
  }
  for (std::uint64_t i = 0; i < 4; ++i) {
    states[2].set_amplitude({i, a[i], 0}, q);
    states[2].set_amplitude({i, a[i], 2}, i < 2 ? q : -q);
    states[3].set_amplitude({i, a[i], 0}, q);
    states[3].set_amplitude({i, a[i], 2}, q);
    states[4].set_amplitude({i, a[i], 0}, h);
  }
  return states;
}

// Removes the n-th phase stage (depth-first, 0-based). Returns false when
// the circuit has fewer phase stages.
inline bool remove_nth_phase_stage(StageList& stages, int& n) {
  for (auto it = stages.begin(); it != stages.end(); ++it) {
    if (std::holds_alternative<PhaseStage>(it->node)) {
      if (n == 0) {
        stages.erase(it);
        return true;
      }
      --n;
    } else if (auto* branch = std::get_if<BranchStage>(&it->node)) {
      if (remove_nth_phase_stage(branch->on_block, n)) return true;
      if (remove_nth_phase_stage(branch->off_block, n)) return true;
    }
  }
  return false;
}

inline bool remove_nth_phase_stage(PathCircuit& circuit, int n) {
  return remove_nth_phase_stage(circuit.stages, n);
}

inline int count_phase_stages(const StageList& stages) {
  int count = 0;
  for (const Stage& stage : stages) {
    if (std::holds_alternative<PhaseStage>(stage.node)) {
      ++count;
    } else if (const auto* branch = std::get_if<BranchStage>(&stage.node)) {
      count += count_phase_stages(branch->on_block);
      count += count_phase_stages(branch->off_block);
    }
  }
  return count;
}

// Random normalized state over the full register space.
inline SparseState random_state(std::mt19937_64& rng, const RegisterLayout& layout,
                                std::size_t entry_count) {
  std::uniform_int_distribution<std::uint64_t> keys(0, layout.dimension() - 1);
  std::normal_distribution<double> amps(0.0, 1.0);
  SparseState::EntryMap entries;
  while (entries.size() < entry_count) {
    entries[keys(rng)] = Amplitude{amps(rng), amps(rng)};
  }
  SparseState state(layout, std::move(entries));
  const double scale = 1.0 / norm(state);
  SparseState::EntryMap scaled = state.entries();
  for (auto& [key, amp] : scaled) amp *= scale;
  state.replace_entries(std::move(scaled));
  return state;
}

// Random valid circuit: switches, writers, phases, index rotations, and
// (with remaining depth budget) branches whose blocks stay strictly below
// their level.
inline StageList random_block(std::mt19937_64& rng, const RegisterLayout& layout,
                              int level_limit, std::size_t stage_count) {
  std::uniform_int_distribution<int> pick(0, level_limit > 0 ? 4 : 3);
  std::uniform_int_distribution<int> coin(0, 1);
  StageList stages;
  for (std::size_t s = 0; s < stage_count; ++s) {
    auto random_level = [&] {
      return std::uniform_int_distribution<int>(0, level_limit)(rng);
    };
    auto random_cond = [&]() -> std::optional<Condition> {
      if (coin(rng) == 0) return std::nullopt;
      return Condition{random_level(), coin(rng) == 1};
    };
    switch (pick(rng)) {
      case 0: {
        const std::array<SwitchKind, 3> kinds{SwitchKind::Split, SwitchKind::MergeMinus,
                                              SwitchKind::MergeMinusDagger};
        stages.push_back(Stage{SwitchStage{random_level(), kinds[pick(rng) % 3]}});
        break;
      }
      case 1: {
        const bool index = coin(rng) == 0 && layout.index_qubits > 0;
        stages.push_back(Stage{WriteStage{
            index ? WriteTarget::Index : WriteTarget::Value,
            random_pattern(rng, index ? layout.index_qubits : layout.value_qubits),
            random_cond()}});
        break;
      }
      case 2: {
        std::vector<PairSet::Pair> pairs;
        const int count = 1 + coin(rng);
        for (int p = 0; p < count; ++p) {
          pairs.emplace_back(random_pattern(rng, layout.index_qubits),
                             random_pattern(rng, layout.value_qubits));
        }
        std::sort(pairs.begin(), pairs.end());
        pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
        stages.push_back(Stage{PhaseStage{PairSet(std::move(pairs)), random_cond()}});
        break;
      }
      case 3:
        if (layout.index_qubits > 0) {
          stages.push_back(Stage{IndexHadamardStage{
              std::uniform_int_distribution<int>(0, layout.index_qubits - 1)(rng)}});
        } else {
          stages.push_back(Stage{SwitchStage{random_level(), SwitchKind::Split}});
        }
        break;
      default: {
        const int level =
            std::uniform_int_distribution<int>(1, std::max(1, level_limit))(rng);
        stages.push_back(Stage{BranchStage{
            level, random_block(rng, layout, level - 1, 1 + coin(rng)),
            random_block(rng, layout, level - 1, 1 + coin(rng))}});
        break;
      }
    }
  }
  return stages;
}

inline PathCircuit random_circuit(std::mt19937_64& rng, const RegisterLayout& layout,
                                  std::size_t stage_count) {
  return PathCircuit{layout,
                     random_block(rng, layout, layout.ancilla_levels - 1, stage_count)};
}

}  // namespace qls::testing
