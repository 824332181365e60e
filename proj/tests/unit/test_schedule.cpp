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

#include <gtest/gtest.h>

#include "qobf/circuit_library.hpp"
#include "qobf/error.hpp"
#include "qobf/random_circuit.hpp"
#include "qobf/schedule.hpp"

namespace qobf {
namespace {

DurationTable unit_durations() {
  DurationTable d;
  for (GateKind k : kAllGateKinds) {
    d.set(k, 1.0);
  }
  d.set(GateKind::CX, 2.0);
  d.set(GateKind::CZ, 2.0);
  return d;
}

using Frames = std::vector<std::vector<std::size_t>>;

TEST(DurationTable, Defaults) {
  const DurationTable d = DurationTable::defaults();
  EXPECT_DOUBLE_EQ(d.at(GateKind::H), 30.0);
  EXPECT_DOUBLE_EQ(d.at(GateKind::X), 30.0);
  EXPECT_DOUBLE_EQ(d.at(GateKind::U3), 30.0);
  EXPECT_DOUBLE_EQ(d.at(GateKind::CX), 60.0);
  EXPECT_DOUBLE_EQ(d.at(GateKind::CZ), 60.0);
  EXPECT_DOUBLE_EQ(d.at(GateKind::Z), 0.0);
}

TEST(DurationTable, MissingAndNegative) {
  DurationTable d;
  d.set(GateKind::H, 10.0);
  EXPECT_THROW(d.at(GateKind::CX), Error);
  EXPECT_THROW(d.set(GateKind::X, -1.0), Error);
}

TEST(DiscreteFrames, Chain) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::H, {1});
  EXPECT_EQ(discrete_frames(build_dag(c)), (Frames{{0}, {1}, {2}}));
}

TEST(DiscreteFrames, Independent) {
  Circuit c(2);
  c.add(GateKind::X, {0});
  c.add(GateKind::Y, {1});
  EXPECT_EQ(discrete_frames(build_dag(c)), (Frames{{0, 1}}));
}

TEST(DiscreteFrames, ToffoliLayers) {
  // Hand ASAP layering of the 15-gate decomposition.
  const Frames expected{{0}, {1}, {2}, {3}, {4}, {5}, {6, 8}, {7}, {9, 11}, {10, 12, 13}, {14}};
  EXPECT_EQ(discrete_frames(build_dag(toffoli_circuit())), expected);
}

TEST(DiscreteFrames, EveryGateOnce) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Circuit c = random_clifford_t_circuit(5, 50, 0.2, seed);
    std::vector<int> seen(c.size(), 0);
    for (const auto &f : discrete_frames(build_dag(c))) {
      for (std::size_t g : f) {
        ++seen[g];
      }
    }
    for (int s : seen) {
      EXPECT_EQ(s, 1);
    }
  }
}

TEST(ToAnalog, SingleGate) {
  Circuit c(1);
  c.add(GateKind::H, {0});
  const AnalogSchedule s = schedule_circuit(c, DurationTable::defaults());
  EXPECT_DOUBLE_EQ(s.ops[0].start, 0.0);
  EXPECT_DOUBLE_EQ(s.ops[0].end, 30.0);
  EXPECT_DOUBLE_EQ(s.makespan, 30.0);
}

TEST(ToAnalog, HThenCx) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  const AnalogSchedule s = schedule_circuit(c, DurationTable::defaults());
  EXPECT_DOUBLE_EQ(s.ops[1].start, 30.0);
  EXPECT_DOUBLE_EQ(s.ops[1].end, 90.0);
  ASSERT_EQ(s.wires[1].size(), 1u);
  EXPECT_DOUBLE_EQ(s.wires[1][0].start, 30.0);
  EXPECT_DOUBLE_EQ(s.makespan, 90.0);
}

TEST(ToAnalog, Parallel) {
  Circuit c(2);
  c.add(GateKind::X, {0});
  c.add(GateKind::X, {1});
  const AnalogSchedule s = schedule_circuit(c, DurationTable::defaults());
  EXPECT_DOUBLE_EQ(s.ops[0].start, 0.0);
  EXPECT_DOUBLE_EQ(s.ops[1].start, 0.0);
  EXPECT_DOUBLE_EQ(s.makespan, 30.0);
}

TEST(ToAnalog, MissingDuration) {
  Circuit c(2);
  c.add(GateKind::CX, {0, 1});
  DurationTable d;
  d.set(GateKind::H, 1.0);
  EXPECT_THROW(schedule_circuit(c, d), Error);
}

TEST(ToAnalog, ToffoliWithUnitDurations) {
  const AnalogSchedule s = schedule_circuit(toffoli_circuit(), unit_durations());
  const std::vector<double> starts{0, 1, 3, 4, 6, 7, 9, 10, 9, 12, 13, 12, 14, 14, 15};
  ASSERT_EQ(s.ops.size(), starts.size());
  for (std::size_t i = 0; i < starts.size(); ++i) {
    EXPECT_DOUBLE_EQ(s.ops[i].start, starts[i]) << "gate " << i;
  }
  EXPECT_DOUBLE_EQ(s.makespan, 17.0);
}

/// Per-wire intervals are disjoint, multi-qubit gates are aligned, and every
/// gate starts at the latest end among its wire predecessors.
TEST(ToAnalog, ValidAndAsap) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Circuit c = random_clifford_t_circuit(4, 40, 0.2, seed);
    const DurationTable d = DurationTable::defaults();
    const AnalogSchedule s = schedule_circuit(c, d);
    for (const auto &wire : s.wires) {
      for (std::size_t i = 1; i < wire.size(); ++i) {
        EXPECT_LE(wire[i - 1].end, wire[i].start + kTimeEpsilon);
      }
    }
    std::vector<double> free_at(c.num_qubits(), 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      double ready = 0.0;
      for (Qubit q : c[i].qubits) {
        ready = std::max(ready, free_at[q]);
      }
      EXPECT_DOUBLE_EQ(s.ops[i].start, ready);
      EXPECT_DOUBLE_EQ(s.ops[i].end, ready + d.at(c[i].kind));
      for (Qubit q : c[i].qubits) {
        free_at[q] = s.ops[i].end;
      }
    }
  }
}

TEST(IdleWindows, LeadingGapExcluded) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.measure_all();
  const auto windows = find_idle_windows(c, schedule_circuit(c, DurationTable::defaults()));
  EXPECT_TRUE(windows.empty());
}

TEST(IdleWindows, BackToBack) {
  Circuit c(1);
  c.add(GateKind::H, {0});
  c.add(GateKind::H, {0});
  c.measure_all();
  EXPECT_TRUE(find_idle_windows(c, schedule_circuit(c, DurationTable::defaults())).empty());
}

TEST(IdleWindows, TailBeforeMeasurement) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::H, {0});
  c.add(GateKind::H, {0});
  c.measure_all();
  const auto windows = find_idle_windows(c, schedule_circuit(c, DurationTable::defaults()));
  ASSERT_EQ(windows.size(), 1u);
  EXPECT_EQ(windows[0].qubit, 1u);
  EXPECT_DOUBLE_EQ(windows[0].start, 90.0);
  EXPECT_DOUBLE_EQ(windows[0].end, 150.0);
  EXPECT_EQ(windows[0].prev_gate, 1u);
  EXPECT_FALSE(windows[0].next_gate.has_value());
  EXPECT_FALSE(windows[0].context_before.has_value());
}

TEST(IdleWindows, UnmeasuredTailSkipped) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::H, {0});
  c.add(GateKind::H, {0});
  c.measure(0);
  EXPECT_TRUE(find_idle_windows(c, schedule_circuit(c, DurationTable::defaults())).empty());
}

TEST(IdleWindows, ToffoliWithUnitDurations) {
  const Circuit c = toffoli_circuit();
  const auto windows = find_idle_windows(c, schedule_circuit(c, unit_durations()));
  ASSERT_EQ(windows.size(), 4u);
  EXPECT_EQ(windows[0].qubit, 0u);
  EXPECT_DOUBLE_EQ(windows[0].start, 6.0);
  EXPECT_DOUBLE_EQ(windows[0].end, 10.0);
  EXPECT_FALSE(windows[0].context_before || windows[0].context_after);

  EXPECT_EQ(windows[1].qubit, 1u);
  EXPECT_DOUBLE_EQ(windows[1].start, 3.0);
  EXPECT_DOUBLE_EQ(windows[1].end, 7.0);

  EXPECT_EQ(windows[2].qubit, 1u);
  EXPECT_DOUBLE_EQ(windows[2].start, 10.0);
  EXPECT_DOUBLE_EQ(windows[2].end, 12.0);
  ASSERT_TRUE(windows[2].context_before.has_value());
  EXPECT_EQ(windows[2].context_before->index, 8u);
  EXPECT_FALSE(windows[2].context_after.has_value());

  EXPECT_EQ(windows[3].qubit, 2u);
  EXPECT_DOUBLE_EQ(windows[3].start, 14.0);
  EXPECT_DOUBLE_EQ(windows[3].end, 17.0);
  ASSERT_TRUE(windows[3].context_before.has_value());
  EXPECT_EQ(windows[3].context_before->index, 10u);
}

TEST(IdleWindows, ContextOnBothSides) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::H, {1});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::S, {0});
  c.measure_all();
  // q0 idles while H(1) runs.
  const auto windows = find_idle_windows(c, schedule_circuit(c, DurationTable::defaults()));
  ASSERT_GE(windows.size(), 1u);
  EXPECT_EQ(windows[0].qubit, 0u);
  EXPECT_DOUBLE_EQ(windows[0].start, 90.0);
  EXPECT_DOUBLE_EQ(windows[0].end, 120.0);
  EXPECT_FALSE(windows[0].context_before.has_value());
  EXPECT_FALSE(windows[0].context_after.has_value());
}

TEST(IdleWindows, ZeroDurationGatesMerge) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::Z, {1});
  c.add(GateKind::H, {0});
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.measure_all();
  // The Z at t = 90 sits inside q1's gap; the two halves merge.
  const auto windows = find_idle_windows(c, schedule_circuit(c, DurationTable::defaults()));
  ASSERT_EQ(windows.size(), 1u);
  EXPECT_DOUBLE_EQ(windows[0].start, 90.0);
  EXPECT_DOUBLE_EQ(windows[0].end, 150.0);
}

TEST(IdleWindows, WindowsAreDisjointGaps) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Circuit c = [&] {
      Circuit r = random_clifford_t_circuit(4, 40, 0.2, seed);
      r.measure_all();
      return r;
    }();
    const AnalogSchedule s = schedule_circuit(c, DurationTable::defaults());
    for (const IdleWindow &w : find_idle_windows(c, s)) {
      EXPECT_GT(w.end, w.start);
      for (const ScheduledOp &op : s.wires[w.qubit]) {
        if (op.end > op.start) {
          EXPECT_TRUE(op.end <= w.start + kTimeEpsilon || op.start >= w.end - kTimeEpsilon);
        }
      }
    }
  }
}

}  // namespace
}  // namespace qobf
