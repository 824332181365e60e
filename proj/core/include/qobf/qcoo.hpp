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

// Output obfuscation: quantum one-time-pad keys, key update through Clifford
// gates, T/Tdg replacement, and classical decryption of measurement counts.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qobf/circuit.hpp"
#include "qobf/counts.hpp"
#include "qobf/gate_matrix.hpp"

namespace qobf {

/// Pauli pad X^a Z^b; bit i of each half belongs to qubit i.
struct PauliKey {
  std::vector<std::uint8_t> a;
  std::vector<std::uint8_t> b;

  std::size_t width() const { return a.size(); }
  /// "101"-style rendering, qubit 0 leftmost.
  std::string a_string() const;
  std::string b_string() const;
  static PauliKey from_strings(const std::string &a, const std::string &b);
  static PauliKey zeros(std::size_t n);

  bool operator==(const PauliKey &) const = default;
};

PauliKey keygen(std::size_t n, std::uint64_t seed);

/// Key after commuting X^a Z^b through a Clifford gate on `wires`.
/// X, Y, Z leave the key alone; H swaps; S and Sdg set b ^= a;
/// CX(c,t): b_c ^= b_t, a_t ^= a_c; CZ(p,q): b_p ^= a_q, b_q ^= a_p.
PauliKey update_key_clifford(GateKind kind, std::span<const Qubit> wires, const PauliKey &key);

/// Parameter rewrite for a general single-qubit gate behind X^a Z^b:
/// (alpha, beta, gamma, delta) -> (alpha, (-1)^a beta, (-1)^(a+b) gamma, (-1)^a delta).
/// Client-side use only; it is never applied to gates the server sees.
ZyzAngles update_key_u3(const ZyzAngles &params, std::uint8_t a, std::uint8_t b);

/// T -> RZ((-1)^a pi/4), Tdg -> RZ(-(-1)^a pi/4). The angle is stored exactly.
Gate replace_t_gate(const Gate &gate, std::uint8_t a_bit);

struct Replacement {
  GateUid uid = 0;
  GateKind original = GateKind::T;
  /// +1 for RZ(pi/4), -1 for RZ(-pi/4).
  int sign = 1;
};

struct EncryptionResult {
  /// Server-visible circuit: same gates and wires, T/Tdg replaced.
  Circuit enc_circuit{1};
  /// X gates where ek.a is set, then Z gates where ek.b is set.
  Circuit enc_prefix{1};
  PauliKey ek;
  PauliKey dk;
  std::vector<Replacement> replacement_log;
};

/// Walks the circuit once, replacing T/Tdg with the key frozen and updating
/// the key through Clifford gates. Rejects RZ and U3 input.
EncryptionResult qcoo_transform(const Circuit &circuit, const PauliKey &ek);

/// Classical decryption: flips every bitstring by dk.a on the measured
/// positions. Z bits do not affect computational-basis statistics.
/// `measured` defaults to all qubits of dk.
Counts rpd_decrypt_counts(const Counts &counts, const PauliKey &dk,
                          std::optional<std::span<const Qubit>> measured = std::nullopt);
Distribution rpd_decrypt_distribution(const Distribution &dist, const PauliKey &dk,
                                      std::optional<std::span<const Qubit>> measured = std::nullopt);

}  // namespace qobf
