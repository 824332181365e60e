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

// Dense statevector oracle. Basis index bit i is qubit i.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qobf/circuit.hpp"
#include "qobf/counts.hpp"
#include "qobf/gate_matrix.hpp"
#include "qobf/qcoo.hpp"

namespace qobf {

/// Tolerances and limits used by the oracle.
struct SimulatorConfig {
  std::size_t max_qubits = 16;
  double norm_tolerance = 1e-10;
};

class State {
 public:
  /// |0...0> on n qubits.
  explicit State(std::size_t n_qubits);
  static State from_amplitudes(std::vector<Complex> amplitudes);
  static State basis(std::size_t n_qubits, std::size_t index);

  std::size_t num_qubits() const { return n_; }
  const std::vector<Complex> &amplitudes() const { return amps_; }
  std::vector<Complex> &amplitudes() { return amps_; }
  double norm() const;

 private:
  std::size_t n_;
  std::vector<Complex> amps_;
};

void apply_gate(State &state, const Gate &gate);

State simulate(const Circuit &circuit, const SimulatorConfig &config = {});
State simulate(const Circuit &circuit, State initial, const SimulatorConfig &config = {});

/// Born probabilities marginalized onto `measured` (ascending qubit order).
Distribution exact_distribution(const State &state, std::span<const Qubit> measured);
/// All qubits measured.
Distribution exact_distribution(const State &state);

/// Multinomial sample of `shots` outcomes; deterministic per seed.
Counts sample_counts(const State &state, std::span<const Qubit> measured, std::uint64_t shots, std::uint64_t seed);

/// |<a|b>|^2.
double fidelity(const State &a, const State &b);

/// Applies X^a then Z^b as gates.
State apply_pauli_frame(State state, const PauliKey &key);

/// Column k is simulate(circuit) on basis state |k>.
MatrixX circuit_unitary(const Circuit &circuit, const SimulatorConfig &config = {});

}  // namespace qobf
