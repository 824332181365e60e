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

#include "qobf/random_circuit.hpp"

#include <array>
#include <random>

#include "qobf/error.hpp"

namespace qobf {

Circuit random_clifford_t_circuit(std::size_t n_qubits, std::int64_t n_gates, double t_fraction, std::uint64_t seed) {
  if (n_qubits == 0) {
    throw Error("random circuit needs at least one qubit");
  }
  if (n_gates < 0) {
    throw Error("random circuit gate count must be non-negative");
  }
  if (!(t_fraction >= 0.0 && t_fraction <= 1.0)) {
    throw Error("t_fraction must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> wire(0, n_qubits - 1);
  constexpr std::array<GateKind, 5> kCliffords = {GateKind::H, GateKind::S, GateKind::X, GateKind::Z, GateKind::CX};
  const std::size_t n_clifford_kinds = n_qubits >= 2 ? kCliffords.size() : kCliffords.size() - 1;
  std::uniform_int_distribution<std::size_t> pick_clifford(0, n_clifford_kinds - 1);

  Circuit c(n_qubits);
  for (std::int64_t i = 0; i < n_gates; ++i) {
    if (coin(rng) < t_fraction) {
      c.add(coin(rng) < 0.5 ? GateKind::T : GateKind::Tdg, {static_cast<Qubit>(wire(rng))});
      continue;
    }
    const GateKind kind = kCliffords[pick_clifford(rng)];
    if (kind == GateKind::CX) {
      const auto control = static_cast<Qubit>(wire(rng));
      auto target = static_cast<Qubit>(wire(rng));
      while (target == control) {
        target = static_cast<Qubit>(wire(rng));
      }
      c.add(kind, {control, target});
    } else {
      c.add(kind, {static_cast<Qubit>(wire(rng))});
    }
  }
  c.measure_all();
  return c;
}

}  // namespace qobf
