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

// Programmatic Clifford+T benchmark circuits.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qobf/circuit.hpp"

namespace qobf {

/// Appends the 15-gate Clifford+T Toffoli on (c0, c1, t).
void append_toffoli(Circuit &c, Qubit c0, Qubit c1, Qubit t);

/// Multi-controlled X with a Toffoli V-chain. Needs controls.size() - 2
/// clean ancillas (none for one or two controls); ancillas are restored.
void append_mcx(Circuit &c, std::span<const Qubit> controls, Qubit target, std::span<const Qubit> ancillas);

/// Controlled-S from T gates and two CX.
void append_controlled_s(Circuit &c, Qubit control, Qubit target);

/// Three-qubit Toffoli, all qubits measured.
Circuit toffoli_circuit();

/// Toffoli decomposition in which the T on control 0 is written as S then
/// Tdg. Same unitary and T-count as toffoli_circuit(); with ek = (101, 010)
/// it yields dk = (101, 110).
Circuit worked_example_circuit();

/// k-control Toffoli ladder: qubits [controls | ancillas | target], controls
/// prepared in |1>.
Circuit mct_circuit(std::size_t controls);

/// Cuccaro ripple-carry adder on n-bit inputs prepared from `a_value` and
/// `b_value`. Layout: cin, (a_i, b_i) interleaved, cout.
Circuit cuccaro_adder(std::size_t bits, std::uint64_t a_value, std::uint64_t b_value);

/// Reduction polynomial taps (exponents below m, including 0) used for
/// GF(2^m), m in {2, 3, 4, 8, 16}.
std::vector<unsigned> gf2m_taps(std::size_t m);

/// GF(2^m) multiplier c = a*b by Horner's rule: m^2 Toffolis plus CX
/// reduction steps. Layout: a[0..m), b[m..2m), c[2m..3m); c holds the
/// product in the wire order returned by gf2m_product_wires().
Circuit gf2m_multiplier(std::size_t m, std::uint64_t a_value, std::uint64_t b_value);
/// Wire holding coefficient k of the product.
std::vector<Qubit> gf2m_product_wires(std::size_t m);
/// Reference product in GF(2^m).
std::uint64_t gf2m_multiply(std::size_t m, std::uint64_t a, std::uint64_t b);

/// One Grover iteration over n search qubits marking `marked` (bit i =
/// qubit i). Ancillas follow the search register.
Circuit grover_circuit(std::size_t n, std::uint64_t marked);

/// Bernstein-Vazirani for an n-bit secret (bit i = qubit i); the ancilla is
/// qubit n and only the data register is measured.
Circuit bv_circuit(std::size_t n, std::uint64_t secret);

/// QFT on n qubits keeping only controlled-S rotations (approximation degree
/// 2), applied to the basis input `input`. No final swaps.
Circuit approximate_qft_circuit(std::size_t n, std::uint64_t input);

struct NamedCircuit {
  std::string name;
  Circuit circuit;
};

std::span<const std::string_view> suite_names();

/// Benchmark suite by name: toffoli, adders, grover, bv, qft, random.
/// `random_count` sizes the random suite.
std::vector<NamedCircuit> make_suite(std::string_view name, std::uint64_t seed, std::size_t random_count = 20);

}  // namespace qobf
