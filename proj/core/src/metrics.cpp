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

#include "qobf/metrics.hpp"

#include <cmath>
#include <set>

#include "qobf/dag.hpp"
#include "qobf/error.hpp"

namespace qobf {

double tvd(const Counts &a, const Counts &b) {
  if (a.empty() || b.empty()) {
    throw Error("tvd needs non-empty counts on both sides");
  }
  const double na = static_cast<double>(a.shots());
  const double nb = static_cast<double>(b.shots());
  if (na == 0.0 || nb == 0.0) {
    throw Error("tvd needs a positive shot total on both sides");
  }
  std::set<std::string> keys;
  for (const auto &[k, v] : a.counts) {
    keys.insert(k);
  }
  for (const auto &[k, v] : b.counts) {
    keys.insert(k);
  }
  auto get = [](const Counts &c, const std::string &k) {
    const auto it = c.counts.find(k);
    return it == c.counts.end() ? 0.0 : static_cast<double>(it->second);
  };
  double sum = 0.0;
  if (a.shots() == b.shots()) {
    for (const auto &k : keys) {
      sum += std::abs(get(a, k) - get(b, k));
    }
    return sum / (2.0 * na);
  }
  for (const auto &k : keys) {
    sum += std::abs(get(a, k) / na - get(b, k) / nb);
  }
  return sum / 2.0;
}

double tvd(const Distribution &a, const Distribution &b) {
  double sum = 0.0;
  for (const auto &[k, p] : a) {
    const auto it = b.find(k);
    sum += std::abs(p - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto &[k, p] : b) {
    if (a.find(k) == a.end()) {
      sum += std::abs(p);
    }
  }
  return sum / 2.0;
}

ObfuscationReport overhead_report(const ReportInputs &in) {
  if (in.before == nullptr || in.after == nullptr || in.before_schedule == nullptr || in.after_schedule == nullptr) {
    throw Error("overhead_report needs both circuits and both schedules");
  }
  if (in.before->num_qubits() != in.after->num_qubits()) {
    throw WidthMismatchError("overhead_report: circuits have different widths");
  }
  ObfuscationReport r;
  const CircuitDag g1 = build_dag(*in.before);
  const CircuitDag g2 = build_dag(*in.after);
  r.ged = norm_ged(g1, g2, in.ged_budget);
  r.depth_before = g1.longest_path();
  r.depth_after = g2.longest_path();
  r.duration_before = in.before_schedule->makespan;
  r.duration_after = in.after_schedule->makespan;
  r.gate_count_before = in.before->size();
  r.gate_count_after = in.after->size();
  if (in.counts) {
    r.tvd = tvd(in.counts->first, in.counts->second);
  }
  if (in.states) {
    r.fidelity = fidelity(in.states->first, in.states->second);
  }
  return r;
}

}  // namespace qobf
