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

#include "qobf/schedule.hpp"

#include <algorithm>
#include <cmath>

#include "qobf/error.hpp"

namespace qobf {

DurationTable DurationTable::defaults() {
  DurationTable t;
  for (GateKind k : kAllGateKinds) {
    t.set(k, gate_arity(k) == 2 ? 60.0 : 30.0);
  }
  t.set(GateKind::Z, 0.0);
  return t;
}

void DurationTable::set(GateKind kind, double nanoseconds) {
  if (!(nanoseconds >= 0.0)) {
    throw Error("duration for " + std::string(gate_name(kind)) + " must be non-negative");
  }
  table_[kind] = nanoseconds;
}

double DurationTable::at(GateKind kind) const {
  auto it = table_.find(kind);
  if (it == table_.end()) {
    throw Error("missing duration entry for gate " + std::string(gate_name(kind)));
  }
  return it->second;
}

std::vector<std::vector<std::size_t>> discrete_frames(const CircuitDag &dag) {
  std::vector<std::size_t> level(dag.num_nodes(), 0);
  std::vector<std::size_t> indeg(dag.num_nodes(), 0);
  for (const auto &e : dag.edges()) {
    ++indeg[e.second];
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < dag.num_nodes(); ++i) {
    if (indeg[i] == 0) {
      order.push_back(i);
    }
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const std::size_t u = order[head];
    for (std::size_t v : dag.successors(u)) {
      level[v] = std::max(level[v], level[u] + 1);
      if (--indeg[v] == 0) {
        order.push_back(v);
      }
    }
  }
  std::vector<std::vector<std::size_t>> frames;
  for (std::size_t i = 0; i < dag.num_nodes(); ++i) {
    if (level[i] >= frames.size()) {
      frames.resize(level[i] + 1);
    }
    frames[level[i]].push_back(i);
  }
  return frames;
}

AnalogSchedule to_analog(const Circuit &circuit, const std::vector<std::vector<std::size_t>> &frames,
                         const DurationTable &durations) {
  AnalogSchedule s;
  s.wires.resize(circuit.num_qubits());
  s.ops.resize(circuit.size());
  std::vector<double> free_at(circuit.num_qubits(), 0.0);
  std::vector<bool> seen(circuit.size(), false);
  for (const auto &frame : frames) {
    for (std::size_t idx : frame) {
      if (idx >= circuit.size() || seen[idx]) {
        throw Error("frame list does not partition the circuit");
      }
      seen[idx] = true;
      const Gate &g = circuit[idx];
      double start = 0.0;
      for (Qubit q : g.qubits) {
        start = std::max(start, free_at[q]);
      }
      const ScheduledOp op{idx, g.uid, start, start + durations.at(g.kind)};
      s.ops[idx] = op;
      for (Qubit q : g.qubits) {
        free_at[q] = op.end;
        s.wires[q].push_back(op);
      }
      s.makespan = std::max(s.makespan, op.end);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw Error("frame list does not cover every gate");
  }
  return s;
}

AnalogSchedule schedule_circuit(const Circuit &circuit, const DurationTable &durations) {
  return to_analog(circuit, discrete_frames(build_dag(circuit)), durations);
}

namespace {

std::optional<ContextGate> context_of(const Circuit &circuit, std::size_t index) {
  if (circuit[index].is_single_qubit()) {
    return ContextGate{index, circuit[index].uid};
  }
  return std::nullopt;
}

}  // namespace

std::vector<IdleWindow> find_idle_windows(const Circuit &circuit, const AnalogSchedule &schedule) {
  std::vector<IdleWindow> out;
  for (Qubit q = 0; q < schedule.wires.size(); ++q) {
    const auto &ops = schedule.wires[q];
    std::vector<IdleWindow> wire_windows;
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const ScheduledOp &prev = ops[i];
      const bool last = i + 1 == ops.size();
      const double gap_end = last ? schedule.makespan : ops[i + 1].start;
      if (last && !circuit.is_measured(q)) {
        continue;
      }
      if (gap_end - prev.end <= kTimeEpsilon) {
        continue;
      }
      IdleWindow w;
      w.qubit = q;
      w.start = prev.end;
      w.end = gap_end;
      w.prev_gate = prev.gate_index;
      w.context_before = context_of(circuit, prev.gate_index);
      if (!last) {
        w.next_gate = ops[i + 1].gate_index;
        w.context_after = context_of(circuit, ops[i + 1].gate_index);
      }
      if (!wire_windows.empty() && std::abs(wire_windows.back().end - w.start) <= kTimeEpsilon) {
        IdleWindow &m = wire_windows.back();
        m.end = w.end;
        m.next_gate = w.next_gate;
        m.context_after = w.context_after;
      } else {
        wire_windows.push_back(w);
      }
    }
    out.insert(out.end(), wire_windows.begin(), wire_windows.end());
  }
  return out;
}

}  // namespace qobf
