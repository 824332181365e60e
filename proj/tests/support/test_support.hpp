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

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "qobf/circuit.hpp"
#include "qobf/gate_matrix.hpp"
#include "qobf/qcoo.hpp"
#include "qobf/simulator.hpp"

namespace qobf::testing {

/// |<a|b>| == 1 within tol, i.e. equal up to global phase.
inline bool same_state_up_to_phase(const State &a, const State &b, double tol) {
  if (a.num_qubits() != b.num_qubits()) {
    return false;
  }
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    overlap += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return std::abs(1.0 - std::abs(overlap)) <= tol;
}

inline State random_state(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> amps(std::size_t{1} << n);
  double norm = 0.0;
  for (auto &a : amps) {
    a = Complex(g(rng), g(rng));
    norm += std::norm(a);
  }
  for (auto &a : amps) {
    a /= std::sqrt(norm);
  }
  return State::from_amplitudes(std::move(amps));
}

/// X^a Z^b written as gates: Z where b is set, then X where a is set, so the
/// operator is X^a Z^b.
inline Circuit pauli_suffix(const PauliKey &key) {
  Circuit c(key.width());
  for (Qubit q = 0; q < key.width(); ++q) {
    if (key.b[q]) {
      c.add(GateKind::Z, {q});
    }
  }
  for (Qubit q = 0; q < key.width(); ++q) {
    if (key.a[q]) {
      c.add(GateKind::X, {q});
    }
  }
  return c;
}

/// Every key on n qubits.
inline std::vector<PauliKey> all_keys(std::size_t n) {
  std::vector<PauliKey> keys;
  for (std::uint32_t bits = 0; bits < (1u << (2 * n)); ++bits) {
    PauliKey k = PauliKey::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
      k.a[i] = (bits >> i) & 1u;
      k.b[i] = (bits >> (n + i)) & 1u;
    }
    keys.push_back(k);
  }
  return keys;
}

}  // namespace qobf::testing
