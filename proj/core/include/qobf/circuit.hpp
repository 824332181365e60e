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

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qobf/angle.hpp"

namespace qobf {

using Qubit = std::uint32_t;
using GateUid = std::uint64_t;

enum class GateKind : std::uint8_t { X, Y, Z, H, S, Sdg, T, Tdg, RZ, U3, CX, CZ };

inline constexpr std::array<GateKind, 12> kAllGateKinds = {
    GateKind::X, GateKind::Y, GateKind::Z,  GateKind::H,  GateKind::S,  GateKind::Sdg,
    GateKind::T, GateKind::Tdg, GateKind::RZ, GateKind::U3, GateKind::CX, GateKind::CZ};

std::string_view gate_name(GateKind kind);
/// Inverse of gate_name (lowercase QASM mnemonics).
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);
std::size_t gate_param_count(GateKind kind);
bool is_clifford(GateKind kind);
inline bool is_t_like(GateKind kind) { return kind == GateKind::T || kind == GateKind::Tdg; }

struct Gate {
  GateKind kind = GateKind::X;
  std::vector<Qubit> qubits;
  std::vector<Angle> params;
  GateUid uid = 0;
  /// Provenance: the gate was added by a structure pass. Never serialized.
  bool inserted = false;

  bool is_single_qubit() const { return qubits.size() == 1; }
  bool acts_on(Qubit q) const;
  std::string to_string() const;
};

/// Same kind, wires and parameter values; uid and provenance are ignored.
bool same_operation(const Gate &a, const Gate &b);

/// An ordered gate list over a fixed register with terminal measurements.
///
/// Measured qubits are kept sorted; counts bitstrings list them in that order
/// (character i is the i-th measured qubit, so qubit 0 is leftmost).
class Circuit {
 public:
  explicit Circuit(std::size_t num_qubits);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return gates_.size(); }
  bool empty() const { return gates_.empty(); }
  const std::vector<Gate> &gates() const { return gates_; }
  const Gate &operator[](std::size_t i) const { return gates_[i]; }
  auto begin() const { return gates_.begin(); }
  auto end() const { return gates_.end(); }

  const std::vector<Qubit> &measured() const { return measured_; }
  bool is_measured(Qubit q) const;

  /// Appends a new gate with a fresh uid. Throws on invalid wires or arity.
  const Gate &add(GateKind kind, std::initializer_list<Qubit> qubits, std::vector<Angle> params = {});
  const Gate &add(GateKind kind, std::span<const Qubit> qubits, std::vector<Angle> params = {});
  /// Appends an existing gate keeping its uid (pass bookkeeping).
  const Gate &append(Gate gate);
  /// Appends a gate that gets a fresh uid and the inserted flag.
  const Gate &append_inserted(Gate gate);

  void measure(Qubit q);
  void measure_all();
  void set_measured(std::vector<Qubit> qubits);

  GateUid next_uid() const { return next_uid_; }
  /// Index of the gate with this uid, if present.
  std::optional<std::size_t> index_of(GateUid uid) const;

  std::string to_string() const;

 private:
  void validate(const Gate &gate) const;

  std::size_t num_qubits_;
  std::vector<Gate> gates_;
  std::vector<Qubit> measured_;
  GateUid next_uid_ = 1;
};

/// Semantic equality: width, measured set and the gate sequence by
/// same_operation. Uids are ignored.
bool same_circuit(const Circuit &a, const Circuit &b);

/// `first` followed by `second`; measurements are taken from `second`.
Circuit concat(const Circuit &first, const Circuit &second);

}  // namespace qobf
