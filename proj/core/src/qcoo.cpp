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

#include "qobf/qcoo.hpp"

#include <random>

#include "qobf/error.hpp"

namespace qobf {

namespace {

std::string bits_to_string(const std::vector<std::uint8_t> &bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto bit : bits) {
    s.push_back(bit ? '1' : '0');
  }
  return s;
}

std::vector<std::uint8_t> string_to_bits(const std::string &s) {
  std::vector<std::uint8_t> bits;
  bits.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') {
      throw Error("key string must contain only '0' and '1'");
    }
    bits.push_back(c == '1');
  }
  return bits;
}

void check_wire(const PauliKey &key, Qubit q) {
  if (q >= key.width()) {
    throw WidthMismatchError("wire " + std::to_string(q) + " out of range for key of width " +
                             std::to_string(key.width()));
  }
}

std::vector<Qubit> all_wires(std::size_t n) {
  std::vector<Qubit> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = static_cast<Qubit>(i);
  }
  return out;
}

std::string flip_bits(const std::string &s, const PauliKey &dk, std::span<const Qubit> measured) {
  if (s.size() != measured.size()) {
    throw WidthMismatchError("bitstring '" + s + "' has length " + std::to_string(s.size()) + ", expected " +
                             std::to_string(measured.size()));
  }
  std::string out = s;
  for (std::size_t i = 0; i < measured.size(); ++i) {
    if (out[i] != '0' && out[i] != '1') {
      throw Error("bitstring '" + s + "' contains a non-binary character");
    }
    if (dk.a[measured[i]]) {
      out[i] = out[i] == '1' ? '0' : '1';
    }
  }
  return out;
}

std::vector<Qubit> resolve_measured(const PauliKey &dk, std::optional<std::span<const Qubit>> measured) {
  if (!measured) {
    return all_wires(dk.width());
  }
  std::vector<Qubit> out(measured->begin(), measured->end());
  for (Qubit q : out) {
    check_wire(dk, q);
  }
  return out;
}

}  // namespace

std::string PauliKey::a_string() const { return bits_to_string(a); }
std::string PauliKey::b_string() const { return bits_to_string(b); }

PauliKey PauliKey::from_strings(const std::string &a, const std::string &b) {
  if (a.size() != b.size()) {
    throw WidthMismatchError("key halves 'a' and 'b' differ in length");
  }
  return PauliKey{string_to_bits(a), string_to_bits(b)};
}

PauliKey PauliKey::zeros(std::size_t n) {
  return PauliKey{std::vector<std::uint8_t>(n, 0), std::vector<std::uint8_t>(n, 0)};
}

PauliKey keygen(std::size_t n, std::uint64_t seed) {
  if (n == 0) {
    throw Error("key width must be at least 1");
  }
  std::mt19937_64 rng(seed);
  PauliKey key = PauliKey::zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    key.a[i] = static_cast<std::uint8_t>(rng() & 1);
    key.b[i] = static_cast<std::uint8_t>(rng() & 1);
  }
  return key;
}

PauliKey update_key_clifford(GateKind kind, std::span<const Qubit> wires, const PauliKey &key) {
  if (wires.size() != gate_arity(kind)) {
    throw Error("wrong number of wires for " + std::string(gate_name(kind)));
  }
  for (Qubit q : wires) {
    check_wire(key, q);
  }
  PauliKey out = key;
  switch (kind) {
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      break;
    case GateKind::H:
      std::swap(out.a[wires[0]], out.b[wires[0]]);
      break;
    case GateKind::S:
    case GateKind::Sdg:
      out.b[wires[0]] ^= out.a[wires[0]];
      break;
    case GateKind::CX: {
      const Qubit c = wires[0];
      const Qubit t = wires[1];
      out.b[c] ^= key.b[t];
      out.a[t] ^= key.a[c];
      break;
    }
    case GateKind::CZ: {
      const Qubit p = wires[0];
      const Qubit q = wires[1];
      out.b[p] ^= key.a[q];
      out.b[q] ^= key.a[p];
      break;
    }
    default:
      throw UnsupportedGateError("no Clifford key update for gate " + std::string(gate_name(kind)));
  }
  return out;
}

ZyzAngles update_key_u3(const ZyzAngles &params, std::uint8_t a, std::uint8_t b) {
  const double sa = (a & 1) ? -1.0 : 1.0;
  const double sab = ((a + b) & 1) ? -1.0 : 1.0;
  return ZyzAngles{params.alpha, sa * params.beta, sab * params.gamma, sa * params.delta};
}

Gate replace_t_gate(const Gate &gate, std::uint8_t a_bit) {
  if (!is_t_like(gate.kind)) {
    throw UnsupportedGateError("replace_t_gate expects T or Tdg, got " + std::string(gate_name(gate.kind)));
  }
  const int base = gate.kind == GateKind::T ? 1 : -1;
  const int sign = (a_bit & 1) ? -base : base;
  Gate out = gate;
  out.kind = GateKind::RZ;
  out.params = {Angle::pi_fraction(sign, 2)};
  return out;
}

EncryptionResult qcoo_transform(const Circuit &circuit, const PauliKey &ek) {
  const std::size_t n = circuit.num_qubits();
  if (ek.width() != n || ek.b.size() != n) {
    throw WidthMismatchError("key width " + std::to_string(ek.width()) + " does not match circuit width " +
                             std::to_string(n));
  }
  EncryptionResult result;
  result.ek = ek;
  result.enc_circuit = Circuit(n);
  result.enc_prefix = Circuit(n);

  PauliKey key = ek;
  for (const Gate &g : circuit) {
    if (is_t_like(g.kind)) {
      Gate replaced = replace_t_gate(g, key.a[g.qubits[0]]);
      result.replacement_log.push_back(
          Replacement{g.uid, g.kind, replaced.params[0].numerator() > 0 ? 1 : -1});
      result.enc_circuit.append(std::move(replaced));
    } else if (is_clifford(g.kind)) {
      key = update_key_clifford(g.kind, g.qubits, key);
      result.enc_circuit.append(g);
    } else {
      throw UnsupportedGateError("gate " + std::string(gate_name(g.kind)) +
                                 " has no server-safe key update; only Clifford+T input is accepted");
    }
  }
  result.enc_circuit.set_measured(circuit.measured());
  result.dk = key;

  for (std::size_t q = 0; q < n; ++q) {
    if (ek.a[q]) {
      result.enc_prefix.add(GateKind::X, {static_cast<Qubit>(q)});
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (ek.b[q]) {
      result.enc_prefix.add(GateKind::Z, {static_cast<Qubit>(q)});
    }
  }
  return result;
}

Counts rpd_decrypt_counts(const Counts &counts, const PauliKey &dk, std::optional<std::span<const Qubit>> measured) {
  const auto wires = resolve_measured(dk, measured);
  Counts out;
  for (const auto &[bits, n] : counts.counts) {
    out.counts[flip_bits(bits, dk, wires)] += n;
  }
  return out;
}

Distribution rpd_decrypt_distribution(const Distribution &dist, const PauliKey &dk,
                                      std::optional<std::span<const Qubit>> measured) {
  const auto wires = resolve_measured(dk, measured);
  Distribution out;
  for (const auto &[bits, p] : dist) {
    out[flip_bits(bits, dk, wires)] += p;
  }
  return out;
}

}  // namespace qobf
