// Path-circuit IR: ordered stages with branch-parallel blocks, plus
// simulation, adjoint, validation, and depth/gate-count accounting.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qls/gates.hpp"
#include "qls/registers.hpp"
#include "qls/state.hpp"

namespace qls {

struct Stage;
using StageList = std::vector<Stage>;

struct SwitchStage {
  int level = 0;
  SwitchKind kind = SwitchKind::Split;
};

// The two blocks run on the On / Off halves of ancilla bit `level` and may
// only touch ancilla levels strictly below it.
struct BranchStage {
  int level = 0;
  StageList on_block;
  StageList off_block;
};

struct WriteStage {
  WriteTarget target = WriteTarget::Index;
  std::uint64_t pattern = 0;
  std::optional<Condition> cond;
};

struct PhaseStage {
  PairSet pairs;
  std::optional<Condition> cond;
};

struct IndexHadamardStage {
  int qubit = 0;
};

struct Stage {
  std::variant<SwitchStage, BranchStage, WriteStage, PhaseStage, IndexHadamardStage> node;
};

struct PathCircuit {
  RegisterLayout layout;
  StageList stages;
};

// parallel_depth charges one unit per switch, phase, or index rotation;
// a maximal run of consecutive writes also costs one unit (writers in a
// run touch disjoint qubits), and a branch costs the deeper of its two
// blocks, floored at 1. gate_count charges every emitted stage once and
// sums both branch blocks.
struct DepthReport {
  int parallel_depth = 0;
  int gate_count = 0;
};

// Receives (top-level stage position, stage, state after it).
using StageObserver =
    std::function<void(std::size_t, const Stage&, const SparseState&)>;

// Throws std::invalid_argument / std::out_of_range on range violations or
// a branch block touching its own level or above.
void validate(const PathCircuit& circuit);

// Applies the stages in order. A branch partitions the entries on its
// ancilla bit and runs each block on its own half — equal to conditioning
// every inner gate on the branch, since the halves stay disjoint (blocks
// never touch the branch bit). The observer fires after each top-level
// stage.
SparseState simulate(const PathCircuit& circuit, const SparseState& input,
                     const StageObserver& observer = nullptr);

// Reversed stage list with each stage adjointed. Writers, phases, Split,
// and index rotations are self-adjoint; MergeMinus <-> MergeMinusDagger.
PathCircuit dagger(const PathCircuit& circuit);

DepthReport depth_report(const PathCircuit& circuit);

// "SWITCH", "BRANCH", "WRITE", "PHASE", or "HIDX"; used by trace output.
std::string stage_label(const Stage& stage);

}  // namespace qls
