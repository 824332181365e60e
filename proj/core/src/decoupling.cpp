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

#include "qobf/decoupling.hpp"

#include <cmath>
#include <map>
#include <span>

#include "qobf/error.hpp"
#include "qobf/gate_matrix.hpp"

namespace qobf {

namespace {

double sequence_duration(std::span<const GateKind> pulses, const DurationTable &durations) {
  double total = 0.0;
  for (GateKind k : pulses) {
    total += durations.at(k);
  }
  return total;
}

std::vector<double> even_offsets(std::span<const GateKind> pulses, double window_length,
                                 const DurationTable &durations) {
  const double busy = sequence_duration(pulses, durations);
  const double tau = (window_length - busy) / static_cast<double>(pulses.size());
  std::vector<double> offsets;
  double t = tau / 2.0;
  for (GateKind k : pulses) {
    offsets.push_back(t);
    t += durations.at(k) + tau;
  }
  return offsets;
}

DDChoice make_choice(DDKind kind, std::span<const GateKind> pulses, double window_length,
                     const DurationTable &durations) {
  DDChoice c;
  c.kind = kind;
  c.pulses.assign(pulses.begin(), pulses.end());
  c.offsets = even_offsets(pulses, window_length, durations);
  return c;
}

Gate u3_from(const Gate &like, const Matrix2 &m) {
  const U3Angles a = u3_from_matrix(m);
  Gate out = like;
  out.kind = GateKind::U3;
  out.params = {Angle::snapped(a.theta), Angle::snapped(a.phi), Angle::snapped(a.lambda)};
  return out;
}

}  // namespace

std::string_view dd_kind_name(DDKind kind) {
  switch (kind) {
    case DDKind::XY8:
      return "XY8";
    case DDKind::XY4:
      return "XY4";
    case DDKind::XX:
      return "XX";
    case DDKind::ZZMerge:
      return "ZZ_MERGE";
    case DDKind::None:
      return "NONE";
  }
  return "NONE";
}

DDChoice select_sequence(double window_length, const DurationTable &durations, bool has_context, bool lambda) {
  if (!(window_length > 0.0)) {
    throw Error("idle window length must be positive");
  }
  if (window_length > sequence_duration(kXY8, durations) + kTimeEpsilon) {
    return make_choice(DDKind::XY8, kXY8, window_length, durations);
  }
  if (window_length > sequence_duration(kXY4, durations) + kTimeEpsilon) {
    return make_choice(DDKind::XY4, kXY4, window_length, durations);
  }
  if (window_length > sequence_duration(kXX, durations) + kTimeEpsilon) {
    return make_choice(DDKind::XX, kXX, window_length, durations);
  }
  constexpr GateKind kZ[] = {GateKind::Z};
  if (window_length > durations.at(GateKind::Z) + kTimeEpsilon && has_context && lambda) {
    return make_choice(DDKind::ZZMerge, kZ, window_length, durations);
  }
  return DDChoice{};
}

Gate merge_z_u3(const Gate &g, ZSide side) {
  if (!g.is_single_qubit()) {
    throw UnsupportedGateError("merge_z_u3 needs a single-qubit gate, got " + std::string(gate_name(g.kind)));
  }
  const Matrix2 z = single_qubit_matrix(GateKind::Z);
  const Matrix2 m = side == ZSide::After ? Matrix2(z * single_qubit_matrix(g)) : Matrix2(single_qubit_matrix(g) * z);
  return u3_from(g, m);
}

DecouplingResult insert_dd(const Circuit &circuit, const DurationTable &durations, bool lambda,
                           std::uint64_t /*seed*/) {
  for (GateKind k : {GateKind::X, GateKind::Y, GateKind::Z, GateKind::U3}) {
    durations.at(k);
  }
  const AnalogSchedule schedule = schedule_circuit(circuit, durations);
  const std::vector<IdleWindow> windows = find_idle_windows(circuit, schedule);

  auto eligible = [&](const std::optional<ContextGate> &ctx) {
    return ctx && std::abs(durations.at(circuit[ctx->index].kind) - durations.at(GateKind::U3)) <= kTimeEpsilon;
  };

  // Pulses to emit after each original gate, and accumulated Z merges.
  std::map<std::size_t, std::vector<std::pair<std::size_t, GateKind>>> after_gate;
  std::map<std::size_t, Matrix2> merged;
  DecouplingResult result;

  for (const IdleWindow &w : windows) {
    const bool before_ok = eligible(w.context_before);
    const bool after_ok = eligible(w.context_after);
    const DDChoice choice = select_sequence(w.length(), durations, before_ok || after_ok, lambda);

    InsertionRecord rec;
    rec.qubit = w.qubit;
    rec.window_start = w.start;
    rec.window_end = w.end;
    rec.kind = choice.kind;
    rec.pulses = choice.pulses;
    for (double off : choice.offsets) {
      rec.pulse_times.push_back(w.start + off);
    }
    const std::size_t record_index = result.log.size();
    for (GateKind k : choice.pulses) {
      after_gate[w.prev_gate].emplace_back(record_index, k);
    }
    if (choice.kind == DDKind::ZZMerge) {
      const ContextGate target = before_ok ? *w.context_before : *w.context_after;
      auto it = merged.find(target.index);
      Matrix2 m = it != merged.end() ? it->second : single_qubit_matrix(circuit[target.index]);
      const Matrix2 z = single_qubit_matrix(GateKind::Z);
      m = before_ok ? Matrix2(z * m) : Matrix2(m * z);
      merged[target.index] = m;
      rec.merged_uid = target.uid;
    }
    result.log.push_back(std::move(rec));
  }

  Circuit out(circuit.num_qubits());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    auto m = merged.find(i);
    out.append(m == merged.end() ? circuit[i] : u3_from(circuit[i], m->second));
  }
  // Fresh uids start past every original uid.
  Circuit final_circuit(circuit.num_qubits());
  GateUid next = out.next_uid();
  for (std::size_t i = 0; i < out.size(); ++i) {
    final_circuit.append(out[i]);
    auto it = after_gate.find(i);
    if (it == after_gate.end()) {
      continue;
    }
    for (const auto &[record_index, kind] : it->second) {
      Gate pulse;
      pulse.kind = kind;
      pulse.qubits = {result.log[record_index].qubit};
      pulse.uid = next++;
      pulse.inserted = true;
      result.log[record_index].inserted_uids.push_back(pulse.uid);
      final_circuit.append(std::move(pulse));
    }
  }
  final_circuit.set_measured(circuit.measured());
  result.circuit = std::move(final_circuit);
  return result;
}

}  // namespace qobf
