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

#include "qobf/circuit.hpp"

#include <algorithm>
#include <sstream>

#include "qobf/error.hpp"

namespace qobf {

namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  std::size_t arity;
  std::size_t params;
  bool clifford;
};

constexpr std::array<KindInfo, 12> kKindInfo = {{
    {GateKind::X, "x", 1, 0, true},
    {GateKind::Y, "y", 1, 0, true},
    {GateKind::Z, "z", 1, 0, true},
    {GateKind::H, "h", 1, 0, true},
    {GateKind::S, "s", 1, 0, true},
    {GateKind::Sdg, "sdg", 1, 0, true},
    {GateKind::T, "t", 1, 0, false},
    {GateKind::Tdg, "tdg", 1, 0, false},
    {GateKind::RZ, "rz", 1, 1, false},
    {GateKind::U3, "u3", 1, 3, false},
    {GateKind::CX, "cx", 2, 0, true},
    {GateKind::CZ, "cz", 2, 0, true},
}};

const KindInfo &info(GateKind kind) { return kKindInfo[static_cast<std::size_t>(kind)]; }

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  for (const auto &k : kKindInfo) {
    if (k.name == name) {
      return k.kind;
    }
  }
  return std::nullopt;
}

std::size_t gate_arity(GateKind kind) { return info(kind).arity; }
std::size_t gate_param_count(GateKind kind) { return info(kind).params; }
bool is_clifford(GateKind kind) { return info(kind).clifford; }

bool Gate::acts_on(Qubit q) const { return std::find(qubits.begin(), qubits.end(), q) != qubits.end(); }

std::string Gate::to_string() const {
  std::ostringstream os;
  os << gate_name(kind);
  if (!params.empty()) {
    os << '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      os << (i ? "," : "") << params[i].to_qasm();
    }
    os << ')';
  }
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    os << (i ? ",q[" : " q[") << qubits[i] << ']';
  }
  return os.str();
}

bool same_operation(const Gate &a, const Gate &b) {
  if (a.kind != b.kind || a.qubits != b.qubits || a.params.size() != b.params.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (!a.params[i].same_value(b.params[i])) {
      return false;
    }
  }
  return true;
}

Circuit::Circuit(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) {
    throw Error("circuit must have at least one qubit");
  }
}

bool Circuit::is_measured(Qubit q) const { return std::binary_search(measured_.begin(), measured_.end(), q); }

void Circuit::validate(const Gate &gate) const {
  if (gate.qubits.size() != gate_arity(gate.kind)) {
    throw Error("gate " + std::string(gate_name(gate.kind)) + " expects " + std::to_string(gate_arity(gate.kind)) +
                " qubit(s)");
  }
  if (gate.params.size() != gate_param_count(gate.kind)) {
    throw Error("gate " + std::string(gate_name(gate.kind)) + " expects " +
                std::to_string(gate_param_count(gate.kind)) + " parameter(s)");
  }
  for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
    if (gate.qubits[i] >= num_qubits_) {
      throw Error("qubit index " + std::to_string(gate.qubits[i]) + " out of range for width " +
                  std::to_string(num_qubits_));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw Error("gate " + std::string(gate_name(gate.kind)) + " repeats qubit " + std::to_string(gate.qubits[i]));
      }
    }
  }
}

const Gate &Circuit::add(GateKind kind, std::initializer_list<Qubit> qubits, std::vector<Angle> params) {
  return add(kind, std::span<const Qubit>(qubits.begin(), qubits.size()), std::move(params));
}

const Gate &Circuit::add(GateKind kind, std::span<const Qubit> qubits, std::vector<Angle> params) {
  Gate g;
  g.kind = kind;
  g.qubits.assign(qubits.begin(), qubits.end());
  g.params = std::move(params);
  g.uid = next_uid_;
  validate(g);
  ++next_uid_;
  gates_.push_back(std::move(g));
  return gates_.back();
}

const Gate &Circuit::append(Gate gate) {
  validate(gate);
  next_uid_ = std::max(next_uid_, gate.uid + 1);
  gates_.push_back(std::move(gate));
  return gates_.back();
}

const Gate &Circuit::append_inserted(Gate gate) {
  gate.uid = next_uid_;
  gate.inserted = true;
  validate(gate);
  ++next_uid_;
  gates_.push_back(std::move(gate));
  return gates_.back();
}

void Circuit::measure(Qubit q) {
  if (q >= num_qubits_) {
    throw Error("measured qubit " + std::to_string(q) + " out of range");
  }
  auto it = std::lower_bound(measured_.begin(), measured_.end(), q);
  if (it == measured_.end() || *it != q) {
    measured_.insert(it, q);
  }
}

void Circuit::measure_all() {
  measured_.clear();
  for (Qubit q = 0; q < num_qubits_; ++q) {
    measured_.push_back(q);
  }
}

void Circuit::set_measured(std::vector<Qubit> qubits) {
  measured_.clear();
  for (Qubit q : qubits) {
    measure(q);
  }
}

std::optional<std::size_t> Circuit::index_of(GateUid uid) const {
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (gates_[i].uid == uid) {
      return i;
    }
  }
  return std::nullopt;
}

std::string Circuit::to_string() const {
  std::ostringstream os;
  os << "Circuit(" << num_qubits_ << " qubits, " << gates_.size() << " gates)";
  for (const auto &g : gates_) {
    os << "\n  " << g.to_string();
  }
  return os.str();
}

bool same_circuit(const Circuit &a, const Circuit &b) {
  if (a.num_qubits() != b.num_qubits() || a.size() != b.size() || a.measured() != b.measured()) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_operation(a[i], b[i])) {
      return false;
    }
  }
  return true;
}

Circuit concat(const Circuit &first, const Circuit &second) {
  if (first.num_qubits() != second.num_qubits()) {
    throw WidthMismatchError("cannot concatenate circuits of different widths");
  }
  Circuit out(first.num_qubits());
  for (const auto &g : first) {
    Gate copy = g;
    copy.uid = out.next_uid();
    out.append(std::move(copy));
  }
  for (const auto &g : second) {
    Gate copy = g;
    copy.uid = out.next_uid();
    out.append(std::move(copy));
  }
  out.set_measured(second.measured());
  return out;
}

}  // namespace qobf
