// Copyright 2026 The qobf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Discrete (layered) and analog (timed) views of a circuit, and idle-window
// extraction on the analog view.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qobf/circuit.hpp"
#include "qobf/dag.hpp"

namespace qobf {

inline constexpr double kTimeEpsilon = 1e-9;

/// Gate kind -> duration in nanoseconds.
class DurationTable {
 public:
  DurationTable() = default;
  /// Single-qubit gates 30 ns, CX/CZ 60 ns, Z 0 ns (virtual).
  static DurationTable defaults();

  void set(GateKind kind, double nanoseconds);
  bool contains(GateKind kind) const { return table_.count(kind) != 0; }
  /// Throws Error naming the kind when no entry exists.
  double at(GateKind kind) const;
  const std::map<GateKind, double> &entries() const { return table_; }

 private:
  std::map<GateKind, double> table_;
};

/// ASAP layers: frame k holds the gates whose longest dependency chain has k
/// predecessors. Gate indices inside a frame are ascending.
std::vector<std::vector<std::size_t>> discrete_frames(const CircuitDag &dag);

struct ScheduledOp {
  std::size_t gate_index = 0;
  GateUid uid = 0;
  double start = 0.0;
  double end = 0.0;
};

struct AnalogSchedule {
  /// Per-qubit occupations in time order.
  std::vector<std::vector<ScheduledOp>> wires;
  /// Indexed by gate index.
  std::vector<ScheduledOp> ops;
  double makespan = 0.0;
};

/// Per-qubit ASAP timing: a gate starts when all of its wires are free.
AnalogSchedule to_analog(const Circuit &circuit, const std::vector<std::vector<std::size_t>> &frames,
                         const DurationTable &durations);
/// build_dag -> discrete_frames -> to_analog.
AnalogSchedule schedule_circuit(const Circuit &circuit, const DurationTable &durations);

struct ContextGate {
  std::size_t index = 0;
  GateUid uid = 0;
};

struct IdleWindow {
  Qubit qubit = 0;
  double start = 0.0;
  double end = 0.0;
  /// Gate occupying the wire right before the window.
  std::size_t prev_gate = 0;
  /// Gate right after the window; empty for a tail window before measurement.
  std::optional<std::size_t> next_gate;
  /// Flanking gates that are single-qubit.
  std::optional<ContextGate> context_before;
  std::optional<ContextGate> context_after;

  double length() const { return end - start; }
};

/// Gaps between consecutive occupations of each wire, plus the gap between
/// the last occupation and the makespan on measured wires. Gaps before a
/// wire's first gate are not reported. Windows that touch (split only by a
/// zero-duration gate) are merged.
std::vector<IdleWindow> find_idle_windows(const Circuit &circuit, const AnalogSchedule &schedule);

}  // namespace qobf
