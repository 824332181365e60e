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

#include "qobf/circuit_library.hpp"

#include <array>
#include <numeric>

#include "qobf/error.hpp"
#include "qobf/random_circuit.hpp"
#include "qobf/seed.hpp"

namespace qobf {

namespace {

void prepare_bits(Circuit &c, std::span<const Qubit> wires, std::uint64_t value) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if ((value >> i) & 1u) {
      c.add(GateKind::X, {wires[i]});
    }
  }
}

std::vector<Qubit> range(Qubit first, std::size_t count) {
  std::vector<Qubit> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

std::uint64_t mask(std::size_t bits) { return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1; }

void append_mcz(Circuit &c, std::span<const Qubit> qubits, std::span<const Qubit> ancillas) {
  const Qubit target = qubits.back();
  if (qubits.size() == 1) {
    c.add(GateKind::Z, {target});
    return;
  }
  if (qubits.size() == 2) {
    c.add(GateKind::CZ, {qubits[0], qubits[1]});
    return;
  }
  c.add(GateKind::H, {target});
  append_mcx(c, qubits.first(qubits.size() - 1), target, ancillas);
  c.add(GateKind::H, {target});
}

}  // namespace

void append_toffoli(Circuit &c, Qubit c0, Qubit c1, Qubit t) {
  c.add(GateKind::H, {t});
  c.add(GateKind::CX, {c1, t});
  c.add(GateKind::Tdg, {t});
  c.add(GateKind::CX, {c0, t});
  c.add(GateKind::T, {t});
  c.add(GateKind::CX, {c1, t});
  c.add(GateKind::Tdg, {t});
  c.add(GateKind::CX, {c0, t});
  c.add(GateKind::T, {c1});
  c.add(GateKind::T, {t});
  c.add(GateKind::H, {t});
  c.add(GateKind::CX, {c0, c1});
  c.add(GateKind::T, {c0});
  c.add(GateKind::Tdg, {c1});
  c.add(GateKind::CX, {c0, c1});
}

void append_mcx(Circuit &c, std::span<const Qubit> controls, Qubit target, std::span<const Qubit> ancillas) {
  const std::size_t k = controls.size();
  if (k == 0) {
    c.add(GateKind::X, {target});
    return;
  }
  if (k == 1) {
    c.add(GateKind::CX, {controls[0], target});
    return;
  }
  if (k == 2) {
    append_toffoli(c, controls[0], controls[1], target);
    return;
  }
  if (ancillas.size() < k - 2) {
    throw Error("mcx with " + std::to_string(k) + " controls needs " + std::to_string(k - 2) + " ancillas");
  }
  auto compute = [&] {
    append_toffoli(c, controls[0], controls[1], ancillas[0]);
    for (std::size_t i = 2; i + 1 < k; ++i) {
      append_toffoli(c, controls[i], ancillas[i - 2], ancillas[i - 1]);
    }
  };
  compute();
  append_toffoli(c, controls[k - 1], ancillas[k - 3], target);
  for (std::size_t i = k - 1; i-- > 2;) {
    append_toffoli(c, controls[i], ancillas[i - 2], ancillas[i - 1]);
  }
  append_toffoli(c, controls[0], controls[1], ancillas[0]);
}

void append_controlled_s(Circuit &c, Qubit control, Qubit target) {
  c.add(GateKind::T, {control});
  c.add(GateKind::T, {target});
  c.add(GateKind::CX, {control, target});
  c.add(GateKind::Tdg, {target});
  c.add(GateKind::CX, {control, target});
}

Circuit toffoli_circuit() {
  Circuit c(3);
  append_toffoli(c, 0, 1, 2);
  c.measure_all();
  return c;
}

Circuit worked_example_circuit() {
  Circuit c(3);
  c.add(GateKind::H, {2});
  c.add(GateKind::CX, {1, 2});
  c.add(GateKind::Tdg, {2});
  c.add(GateKind::CX, {0, 2});
  c.add(GateKind::T, {2});
  c.add(GateKind::CX, {1, 2});
  c.add(GateKind::Tdg, {2});
  c.add(GateKind::CX, {0, 2});
  c.add(GateKind::T, {1});
  c.add(GateKind::T, {2});
  c.add(GateKind::H, {2});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::S, {0});
  c.add(GateKind::Tdg, {0});
  c.add(GateKind::Tdg, {1});
  c.add(GateKind::CX, {0, 1});
  c.measure_all();
  return c;
}

Circuit mct_circuit(std::size_t controls) {
  if (controls == 0) {
    throw Error("mct needs at least one control");
  }
  const std::size_t anc = controls > 2 ? controls - 2 : 0;
  Circuit c(controls + anc + 1);
  const auto ctl = range(0, controls);
  const auto ancillas = range(static_cast<Qubit>(controls), anc);
  const auto target = static_cast<Qubit>(controls + anc);
  for (Qubit q : ctl) {
    c.add(GateKind::X, {q});
  }
  append_mcx(c, ctl, target, ancillas);
  c.measure_all();
  return c;
}

Circuit cuccaro_adder(std::size_t bits, std::uint64_t a_value, std::uint64_t b_value) {
  if (bits == 0 || bits > 31) {
    throw Error("cuccaro adder width must be 1..31");
  }
  Circuit c(2 * bits + 2);
  const Qubit cin = 0;
  const auto cout = static_cast<Qubit>(2 * bits + 1);
  auto a = [](std::size_t i) { return static_cast<Qubit>(1 + 2 * i); };
  auto b = [](std::size_t i) { return static_cast<Qubit>(2 + 2 * i); };
  for (std::size_t i = 0; i < bits; ++i) {
    if ((a_value >> i) & 1u) {
      c.add(GateKind::X, {a(i)});
    }
    if ((b_value >> i) & 1u) {
      c.add(GateKind::X, {b(i)});
    }
  }
  auto maj = [&](Qubit x, Qubit y, Qubit z) {
    c.add(GateKind::CX, {z, y});
    c.add(GateKind::CX, {z, x});
    append_toffoli(c, x, y, z);
  };
  auto uma = [&](Qubit x, Qubit y, Qubit z) {
    append_toffoli(c, x, y, z);
    c.add(GateKind::CX, {z, x});
    c.add(GateKind::CX, {x, y});
  };
  maj(cin, b(0), a(0));
  for (std::size_t i = 1; i < bits; ++i) {
    maj(a(i - 1), b(i), a(i));
  }
  c.add(GateKind::CX, {a(bits - 1), cout});
  for (std::size_t i = bits; i-- > 1;) {
    uma(a(i - 1), b(i), a(i));
  }
  uma(cin, b(0), a(0));
  c.measure_all();
  return c;
}

std::vector<unsigned> gf2m_taps(std::size_t m) {
  switch (m) {
    case 2:
    case 3:
    case 4:
      return {0, 1};
    case 8:
      return {0, 1, 3, 4};
    case 16:
      return {0, 1, 3, 12};
    default:
      throw Error("no reduction polynomial configured for GF(2^" + std::to_string(m) + ")");
  }
}

namespace {

/// Applies c <- c*x on the wire labels; returns the CX pairs needed.
std::vector<std::pair<Qubit, Qubit>> shift_product(std::vector<Qubit> &wire, const std::vector<unsigned> &taps) {
  const std::size_t m = wire.size();
  std::vector<Qubit> next(m);
  next[0] = wire[m - 1];
  for (std::size_t k = 1; k < m; ++k) {
    next[k] = wire[k - 1];
  }
  wire = std::move(next);
  std::vector<std::pair<Qubit, Qubit>> cx;
  for (unsigned t : taps) {
    if (t != 0) {
      cx.emplace_back(wire[0], wire[t]);
    }
  }
  return cx;
}

}  // namespace

std::vector<Qubit> gf2m_product_wires(std::size_t m) {
  const auto taps = gf2m_taps(m);
  auto wire = range(static_cast<Qubit>(2 * m), m);
  for (std::size_t j = 1; j < m; ++j) {
    shift_product(wire, taps);
  }
  return wire;
}

std::uint64_t gf2m_multiply(std::size_t m, std::uint64_t a, std::uint64_t b) {
  const auto taps = gf2m_taps(m);
  std::uint64_t poly = 0;
  for (unsigned t : taps) {
    poly |= std::uint64_t{1} << t;
  }
  a &= mask(m);
  b &= mask(m);
  std::uint64_t acc = 0;
  for (std::size_t j = m; j-- > 0;) {
    const bool overflow = (acc >> (m - 1)) & 1u;
    acc = (acc << 1) & mask(m);
    if (overflow) {
      acc ^= poly;
    }
    if ((b >> j) & 1u) {
      acc ^= a;
    }
  }
  return acc;
}

Circuit gf2m_multiplier(std::size_t m, std::uint64_t a_value, std::uint64_t b_value) {
  const auto taps = gf2m_taps(m);
  Circuit c(3 * m);
  const auto a = range(0, m);
  const auto b = range(static_cast<Qubit>(m), m);
  auto wire = range(static_cast<Qubit>(2 * m), m);
  prepare_bits(c, a, a_value);
  prepare_bits(c, b, b_value);
  for (std::size_t j = m; j-- > 0;) {
    if (j + 1 < m) {
      for (const auto &[ctl, tgt] : shift_product(wire, taps)) {
        c.add(GateKind::CX, {ctl, tgt});
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      append_toffoli(c, a[i], b[j], wire[i]);
    }
  }
  c.measure_all();
  return c;
}

Circuit grover_circuit(std::size_t n, std::uint64_t marked) {
  if (n < 2) {
    throw Error("grover needs at least two search qubits");
  }
  const std::size_t anc = n > 3 ? n - 3 : 0;
  Circuit c(n + anc);
  const auto search = range(0, n);
  const auto ancillas = range(static_cast<Qubit>(n), anc);
  for (Qubit q : search) {
    c.add(GateKind::H, {q});
  }
  prepare_bits(c, search, ~marked & mask(n));
  append_mcz(c, search, ancillas);
  prepare_bits(c, search, ~marked & mask(n));
  for (Qubit q : search) {
    c.add(GateKind::H, {q});
    c.add(GateKind::X, {q});
  }
  append_mcz(c, search, ancillas);
  for (Qubit q : search) {
    c.add(GateKind::X, {q});
    c.add(GateKind::H, {q});
  }
  for (Qubit q : search) {
    c.measure(q);
  }
  return c;
}

Circuit bv_circuit(std::size_t n, std::uint64_t secret) {
  if (n == 0) {
    throw Error("bv needs at least one data qubit");
  }
  Circuit c(n + 1);
  const auto anc = static_cast<Qubit>(n);
  c.add(GateKind::X, {anc});
  for (Qubit q = 0; q <= anc; ++q) {
    c.add(GateKind::H, {q});
  }
  for (Qubit q = 0; q < anc; ++q) {
    if ((secret >> q) & 1u) {
      c.add(GateKind::CX, {q, anc});
    }
  }
  for (Qubit q = 0; q < anc; ++q) {
    c.add(GateKind::H, {q});
    c.measure(q);
  }
  return c;
}

Circuit approximate_qft_circuit(std::size_t n, std::uint64_t input) {
  if (n == 0) {
    throw Error("qft needs at least one qubit");
  }
  Circuit c(n);
  prepare_bits(c, range(0, n), input);
  for (Qubit j = 0; j < n; ++j) {
    c.add(GateKind::H, {j});
    if (j + 1 < n) {
      append_controlled_s(c, j + 1, j);
    }
  }
  c.measure_all();
  return c;
}

std::span<const std::string_view> suite_names() {
  static constexpr std::array<std::string_view, 6> kNames = {"toffoli", "adders", "grover", "bv", "qft", "random"};
  return kNames;
}

std::vector<NamedCircuit> make_suite(std::string_view name, std::uint64_t seed, std::size_t random_count) {
  std::vector<NamedCircuit> out;
  auto value = [&](std::string_view stage, std::uint64_t index, std::size_t bits) {
    return derive_seed(seed, stage, index) & mask(bits);
  };
  if (name == "toffoli") {
    out.push_back({"toffoli", toffoli_circuit()});
    out.push_back({"toffoli_worked", worked_example_circuit()});
    for (std::size_t k : {3, 4, 5}) {
      out.push_back({"mct_" + std::to_string(k), mct_circuit(k)});
    }
  } else if (name == "adders") {
    for (std::size_t bits : {2, 4, 6}) {
      out.push_back({"cuccaro_" + std::to_string(bits),
                     cuccaro_adder(bits, value("adder-a", bits, bits), value("adder-b", bits, bits))});
    }
    for (std::size_t m : {4, 8, 16}) {
      out.push_back({"gf2_" + std::to_string(m) + "_mult",
                     gf2m_multiplier(m, value("gf-a", m, m), value("gf-b", m, m))});
    }
  } else if (name == "grover") {
    for (std::size_t n : {3, 4, 5}) {
      out.push_back({"grover_" + std::to_string(n), grover_circuit(n, value("grover", n, n))});
    }
  } else if (name == "bv") {
    for (std::size_t n : {4, 8, 12}) {
      // Force at least one set bit so the output is nontrivial.
      out.push_back({"bv_" + std::to_string(n), bv_circuit(n, value("bv", n, n) | 1u)});
    }
  } else if (name == "qft") {
    for (std::size_t n : {3, 4, 6, 8}) {
      out.push_back({"qft_" + std::to_string(n), approximate_qft_circuit(n, value("qft", n, n))});
    }
  } else if (name == "random") {
    for (std::size_t i = 0; i < random_count; ++i) {
      const std::size_t n = 2 + i % 4;
      out.push_back({"random_" + std::to_string(i),
                     random_clifford_t_circuit(n, 40, 0.25, derive_seed(seed, "random-suite", i))});
    }
  } else {
    throw Error("unknown suite '" + std::string(name) + "'");
  }
  return out;
}

}  // namespace qobf
