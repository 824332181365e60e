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

#include "qobf/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qobf/error.hpp"

namespace qobf {

namespace {

void apply_1q(std::vector<Complex> &amps, std::size_t q, const Matrix2 &m) {
  const std::size_t stride = std::size_t{1} << q;
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t base = 0; base < amps.size(); base += 2 * stride) {
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps[i];
      const Complex a1 = amps[i + stride];
      amps[i] = m00 * a0 + m01 * a1;
      amps[i + stride] = m10 * a0 + m11 * a1;
    }
  }
}

void apply_cx(std::vector<Complex> &amps, std::size_t control, std::size_t target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & cbit) && !(i & tbit)) {
      std::swap(amps[i], amps[i | tbit]);
    }
  }
}

void apply_cz(std::vector<Complex> &amps, std::size_t p, std::size_t q) {
  const std::size_t mask = (std::size_t{1} << p) | (std::size_t{1} << q);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask) {
      amps[i] = -amps[i];
    }
  }
}

void check_width(const Circuit &circuit, const SimulatorConfig &config) {
  if (circuit.num_qubits() > config.max_qubits) {
    throw Error("circuit width " + std::to_string(circuit.num_qubits()) + " exceeds simulator cap " +
                std::to_string(config.max_qubits));
  }
}

}  // namespace

State::State(std::size_t n_qubits) : n_(n_qubits), amps_(std::size_t{1} << n_qubits, Complex{0.0, 0.0}) {
  if (n_qubits > 30) {
    throw Error("state width too large for dense simulation");
  }
  amps_[0] = 1.0;
}

State State::from_amplitudes(std::vector<Complex> amplitudes) {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < amplitudes.size()) {
    ++n;
  }
  if ((std::size_t{1} << n) != amplitudes.size() || amplitudes.empty()) {
    throw Error("amplitude count must be a power of two");
  }
  State s(n);
  s.amps_ = std::move(amplitudes);
  if (std::abs(s.norm() - 1.0) > SimulatorConfig{}.norm_tolerance) {
    throw Error("amplitudes are not normalized");
  }
  return s;
}

State State::basis(std::size_t n_qubits, std::size_t index) {
  State s(n_qubits);
  if (index >= s.amps_.size()) {
    throw Error("basis index out of range");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

double State::norm() const {
  double total = 0.0;
  for (const auto &a : amps_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

void apply_gate(State &state, const Gate &gate) {
  for (Qubit q : gate.qubits) {
    if (q >= state.num_qubits()) {
      throw WidthMismatchError("gate wire outside state width");
    }
  }
  auto &amps = state.amplitudes();
  switch (gate.kind) {
    case GateKind::CX:
      apply_cx(amps, gate.qubits[0], gate.qubits[1]);
      break;
    case GateKind::CZ:
      apply_cz(amps, gate.qubits[0], gate.qubits[1]);
      break;
    default:
      apply_1q(amps, gate.qubits[0], single_qubit_matrix(gate));
      break;
  }
}

State simulate(const Circuit &circuit, const SimulatorConfig &config) {
  check_width(circuit, config);
  return simulate(circuit, State(circuit.num_qubits()), config);
}

State simulate(const Circuit &circuit, State initial, const SimulatorConfig &config) {
  check_width(circuit, config);
  if (initial.num_qubits() != circuit.num_qubits()) {
    throw WidthMismatchError("initial state width does not match circuit");
  }
  for (const Gate &g : circuit) {
    apply_gate(initial, g);
  }
  if (std::abs(initial.norm() - 1.0) > config.norm_tolerance) {
    throw Error("state norm drifted beyond tolerance");
  }
  return initial;
}

Distribution exact_distribution(const State &state, std::span<const Qubit> measured) {
  for (Qubit q : measured) {
    if (q >= state.num_qubits()) {
      throw WidthMismatchError("measured qubit outside state width");
    }
  }
  Distribution dist;
  std::vector<double> marg(std::size_t{1} << measured.size(), 0.0);
  const auto &amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    if (p == 0.0) {
      continue;
    }
    std::size_t key = 0;
    for (std::size_t j = 0; j < measured.size(); ++j) {
      key |= ((i >> measured[j]) & 1) << j;
    }
    marg[key] += p;
  }
  for (std::size_t key = 0; key < marg.size(); ++key) {
    if (marg[key] <= 1e-15) {
      continue;
    }
    std::string bits(measured.size(), '0');
    for (std::size_t j = 0; j < measured.size(); ++j) {
      if ((key >> j) & 1) {
        bits[j] = '1';
      }
    }
    dist[bits] = marg[key];
  }
  return dist;
}

Distribution exact_distribution(const State &state) {
  std::vector<Qubit> all(state.num_qubits());
  for (std::size_t i = 0; i < all.size(); ++i) {
    all[i] = static_cast<Qubit>(i);
  }
  return exact_distribution(state, all);
}

Counts sample_counts(const State &state, std::span<const Qubit> measured, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw Error("shots must be at least 1");
  }
  const Distribution dist = exact_distribution(state, measured);
  std::vector<std::string> keys;
  std::vector<double> cumulative;
  double acc = 0.0;
  for (const auto &[bits, p] : dist) {
    acc += p;
    keys.push_back(bits);
    cumulative.push_back(acc);
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, acc);
  std::vector<std::uint64_t> tally(keys.size(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = uniform(rng);
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
      --it;
    }
    ++tally[static_cast<std::size_t>(it - cumulative.begin())];
  }
  Counts counts;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (tally[i] > 0) {
      counts.counts[keys[i]] = tally[i];
    }
  }
  return counts;
}

double fidelity(const State &a, const State &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw WidthMismatchError("fidelity of states with different widths");
  }
  Complex inner{0.0, 0.0};
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    inner += std::conj(a.amplitudes()[i]) * b.amplitudes()[i];
  }
  return std::clamp(std::norm(inner), 0.0, 1.0);
}

State apply_pauli_frame(State state, const PauliKey &key) {
  if (key.width() != state.num_qubits()) {
    throw WidthMismatchError("key width does not match state width");
  }
  const Matrix2 x = single_qubit_matrix(GateKind::X);
  const Matrix2 z = single_qubit_matrix(GateKind::Z);
  for (std::size_t q = 0; q < key.width(); ++q) {
    if (key.a[q]) {
      apply_1q(state.amplitudes(), q, x);
    }
  }
  for (std::size_t q = 0; q < key.width(); ++q) {
    if (key.b[q]) {
      apply_1q(state.amplitudes(), q, z);
    }
  }
  return state;
}

MatrixX circuit_unitary(const Circuit &circuit, const SimulatorConfig &config) {
  check_width(circuit, config);
  const std::size_t dim = std::size_t{1} << circuit.num_qubits();
  MatrixX u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    const State s = simulate(circuit, State::basis(circuit.num_qubits(), k), config);
    for (std::size_t r = 0; r < dim; ++r) {
      u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) = s.amplitudes()[r];
    }
  }
  return u;
}

}  // namespace qobf
