#include "qls/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qls {

namespace {

void validate_block(const StageList& stages, const RegisterLayout& layout,
                    int level_limit) {
  auto check_level = [&](int level) {
    if (level < 0 || level >= level_limit) {
      throw std::out_of_range("stage ancilla level outside its block's range");
    }
  };
  for (const Stage& stage : stages) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, SwitchStage>) {
            check_level(s.level);
          } else if constexpr (std::is_same_v<T, BranchStage>) {
            check_level(s.level);
            validate_block(s.on_block, layout, s.level);
            validate_block(s.off_block, layout, s.level);
          } else if constexpr (std::is_same_v<T, WriteStage>) {
            if (s.cond) check_level(s.cond->level);
            const std::uint64_t limit = s.target == WriteTarget::Index
                                            ? layout.index_count()
                                            : layout.value_count();
            if (s.pattern >= limit) {
              throw std::out_of_range("write pattern outside target register range");
            }
          } else if constexpr (std::is_same_v<T, PhaseStage>) {
            if (s.cond) check_level(s.cond->level);
            for (const auto& [index, value] : s.pairs.pairs()) {
              if (index >= layout.index_count() || value >= layout.value_count()) {
                throw std::out_of_range("phase pair outside register range");
              }
            }
          } else if constexpr (std::is_same_v<T, IndexHadamardStage>) {
            if (s.qubit < 0 || s.qubit >= layout.index_qubits) {
              throw std::out_of_range("index qubit outside register range");
            }
          }
        },
        stage.node);
  }
}

void apply_block(const StageList& stages, SparseState& state);

void apply_stage(const Stage& stage, SparseState& state) {
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SwitchStage>) {
          apply_switch(state, s.level, s.kind);
        } else if constexpr (std::is_same_v<T, BranchStage>) {
          const RegisterLayout& layout = state.layout();
          if (s.level < 0 || s.level >= layout.ancilla_levels) {
            throw std::out_of_range("branch level outside ancilla range");
          }
          const std::uint64_t mask =
              std::uint64_t{1} << (layout.value_qubits + layout.index_qubits + s.level);
          SparseState::EntryMap on_entries, off_entries;
          for (const auto& entry : state.entries()) {
            (entry.first & mask ? on_entries : off_entries).insert(entry);
          }
          SparseState on_state(layout, std::move(on_entries));
          SparseState off_state(layout, std::move(off_entries));
          apply_block(s.on_block, on_state);
          apply_block(s.off_block, off_state);
          // Blocks never touch the branch bit, so the halves stay disjoint.
          SparseState::EntryMap merged = on_state.entries();
          merged.insert(off_state.entries().begin(), off_state.entries().end());
          state.replace_entries(std::move(merged));
        } else if constexpr (std::is_same_v<T, WriteStage>) {
          apply_xor_write(state, s.target, s.pattern, s.cond);
        } else if constexpr (std::is_same_v<T, PhaseStage>) {
          apply_phase_flip(state, s.pairs, s.cond);
        } else if constexpr (std::is_same_v<T, IndexHadamardStage>) {
          apply_index_hadamard(state, s.qubit);
        }
      },
      stage.node);
}

void apply_block(const StageList& stages, SparseState& state) {
  for (const Stage& stage : stages) apply_stage(stage, state);
}

Stage dagger_stage(const Stage& stage);

StageList dagger_block(const StageList& stages) {
  StageList out;
  out.reserve(stages.size());
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    out.push_back(dagger_stage(*it));
  }
  return out;
}

Stage dagger_stage(const Stage& stage) {
  return std::visit(
      [](const auto& s) -> Stage {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SwitchStage>) {
          SwitchKind kind = s.kind;
          if (kind == SwitchKind::MergeMinus) {
            kind = SwitchKind::MergeMinusDagger;
          } else if (kind == SwitchKind::MergeMinusDagger) {
            kind = SwitchKind::MergeMinus;
          }
          return Stage{SwitchStage{s.level, kind}};
        } else if constexpr (std::is_same_v<T, BranchStage>) {
          return Stage{BranchStage{s.level, dagger_block(s.on_block),
                                   dagger_block(s.off_block)}};
        } else {
          return Stage{s};
        }
      },
      stage.node);
}

struct BlockCost {
  int depth = 0;
  int gates = 0;
};

BlockCost block_cost(const StageList& stages) {
  BlockCost cost;
  bool in_write_run = false;
  for (const Stage& stage : stages) {
    const bool is_write = std::holds_alternative<WriteStage>(stage.node);
    if (is_write) {
      cost.gates += 1;
      if (!in_write_run) cost.depth += 1;  // a run of writes is one time step
      in_write_run = true;
      continue;
    }
    in_write_run = false;
    if (const auto* branch = std::get_if<BranchStage>(&stage.node)) {
      const BlockCost on = block_cost(branch->on_block);
      const BlockCost off = block_cost(branch->off_block);
      cost.depth += std::max({1, on.depth, off.depth});
      cost.gates += on.gates + off.gates;
    } else {
      cost.depth += 1;
      cost.gates += 1;
    }
  }
  return cost;
}

}  // namespace

void validate(const PathCircuit& circuit) {
  validate_block(circuit.stages, circuit.layout, circuit.layout.ancilla_levels);
}

SparseState simulate(const PathCircuit& circuit, const SparseState& input,
                     const StageObserver& observer) {
  if (!(input.layout() == circuit.layout)) {
    throw std::invalid_argument("simulate input layout differs from circuit layout");
  }
  SparseState state = input;
  for (std::size_t i = 0; i < circuit.stages.size(); ++i) {
    apply_stage(circuit.stages[i], state);
    if (observer) observer(i, circuit.stages[i], state);
  }
  return state;
}

PathCircuit dagger(const PathCircuit& circuit) {
  return PathCircuit{circuit.layout, dagger_block(circuit.stages)};
}

DepthReport depth_report(const PathCircuit& circuit) {
  const BlockCost cost = block_cost(circuit.stages);
  return DepthReport{cost.depth, cost.gates};
}

std::string stage_label(const Stage& stage) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SwitchStage>) return "SWITCH";
        if constexpr (std::is_same_v<T, BranchStage>) return "BRANCH";
        if constexpr (std::is_same_v<T, WriteStage>) return "WRITE";
        if constexpr (std::is_same_v<T, PhaseStage>) return "PHASE";
        if constexpr (std::is_same_v<T, IndexHadamardStage>) return "HIDX";
        return "?";
      },
      stage.node);
}

}  // namespace qls
