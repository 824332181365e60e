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

#include <cstddef>
#include <optional>
#include <utility>

#include "qobf/circuit.hpp"
#include "qobf/counts.hpp"
#include "qobf/ged.hpp"
#include "qobf/schedule.hpp"
#include "qobf/simulator.hpp"

namespace qobf {

/// Sum |a_i - b_i| / (2N) over the union of keys. Unequal shot totals are
/// compared as probabilities. Throws when either side is empty.
double tvd(const Counts &a, const Counts &b);
double tvd(const Distribution &a, const Distribution &b);

struct ObfuscationReport {
  std::optional<double> tvd;
  GedResult ged;
  std::size_t depth_before = 0;
  std::size_t depth_after = 0;
  double duration_before = 0.0;
  double duration_after = 0.0;
  std::size_t gate_count_before = 0;
  std::size_t gate_count_after = 0;
  std::optional<double> fidelity;

  long depth_delta() const { return static_cast<long>(depth_after) - static_cast<long>(depth_before); }
  double duration_delta() const { return duration_after - duration_before; }
  long gate_count_delta() const {
    return static_cast<long>(gate_count_after) - static_cast<long>(gate_count_before);
  }
};

struct ReportInputs {
  const Circuit *before = nullptr;
  const AnalogSchedule *before_schedule = nullptr;
  const Circuit *after = nullptr;
  const AnalogSchedule *after_schedule = nullptr;
  std::optional<std::pair<Counts, Counts>> counts;
  std::optional<std::pair<State, State>> states;
  std::size_t ged_budget = kDefaultGedBudget;
};

ObfuscationReport overhead_report(const ReportInputs &inputs);

}  // namespace qobf
