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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "qobf/circuit_library.hpp"
#include "qobf/error.hpp"
#include "qobf/simulator.hpp"

namespace qobf {
namespace {

/// Measured bitstring for a classical assignment of every wire.
std::string bits_of(const Circuit &c, const std::vector<int> &wire_values) {
  std::string s;
  for (Qubit q : c.measured()) {
    s.push_back(wire_values[q] ? '1' : '0');
  }
  return s;
}

void expect_deterministic(const Circuit &c, const std::string &expected) {
  const Distribution d = exact_distribution(simulate(c), c.measured());
  ASSERT_TRUE(d.count(expected)) << expected;
  EXPECT_NEAR(d.at(expected), 1.0, 1e-9) << expected;
}

/// Carry-less product reduced by x^m + sum of taps.
std::uint64_t field_product(std::size_t m, std::uint64_t a, std::uint64_t b, const std::vector<unsigned> &taps) {
  std::uint64_t prod = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if ((b >> i) & 1u) {
      prod ^= a << i;
    }
  }
  std::uint64_t low = 0;
  for (unsigned t : taps) {
    low |= std::uint64_t{1} << t;
  }
  for (std::size_t d = 2 * m; d-- > m;) {
    if ((prod >> d) & 1u) {
      prod ^= std::uint64_t{1} << d;
      prod ^= low << (d - m);
    }
  }
  return prod;
}

TEST(Toffoli, TruthTable) {
  for (std::size_t in = 0; in < 8; ++in) {
    const State out = simulate(toffoli_circuit(), State::basis(3, in));
    const std::size_t expected = (in & 3u) == 3u ? in ^ 4u : in;
    EXPECT_NEAR(std::abs(out.amplitudes()[expected]), 1.0, 1e-9) << in;
  }
  EXPECT_EQ(toffoli_circuit().size(), 15u);
}

TEST(Toffoli, WorkedVariantMatches) {
  const MatrixX u = circuit_unitary(worked_example_circuit());
  EXPECT_TRUE(equal_up_to_global_phase(u, circuit_unitary(toffoli_circuit()), 1e-9));
  std::size_t s = 0;
  for (const Gate &g : worked_example_circuit()) {
    s += g.kind == GateKind::S;
  }
  EXPECT_EQ(s, 1u);
}

TEST(Mct, FlipsTargetWhenAllControlsSet) {
  for (std::size_t k : {1u, 2u, 3u, 4u, 5u}) {
    const Circuit c = mct_circuit(k);
    const std::size_t anc = k > 2 ? k - 2 : 0;
    ASSERT_EQ(c.num_qubits(), k + anc + 1);
    std::vector<int> wires(c.num_qubits(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      wires[i] = 1;
    }
    wires.back() = 1;
    expect_deterministic(c, bits_of(c, wires));
  }
  EXPECT_THROW(mct_circuit(0), Error);
}

TEST(Mcx, AncillasRestoredOnAllInputs) {
  Circuit c(6);
  const std::vector<Qubit> controls{0, 1, 2, 3};
  const std::vector<Qubit> ancillas{4, 5};
  Circuit body(7);
  append_mcx(body, controls, 6, ancillas);
  for (std::size_t in = 0; in < 16; ++in) {
    const State out = simulate(body, State::basis(7, in));
    const std::size_t expected = in == 15 ? in | 64u : in;
    EXPECT_NEAR(std::abs(out.amplitudes()[expected]), 1.0, 1e-9) << in;
  }
  EXPECT_THROW(append_mcx(c, controls, 5, std::span<const Qubit>(ancillas).first(1)), Error);
}

TEST(CuccaroAdder, AddsAllSmallInputs) {
  for (std::size_t bits : {1u, 2u, 3u}) {
    for (std::uint64_t a = 0; a < (1u << bits); ++a) {
      for (std::uint64_t b = 0; b < (1u << bits); ++b) {
        const Circuit c = cuccaro_adder(bits, a, b);
        std::vector<int> wires(c.num_qubits(), 0);
        const std::uint64_t sum = a + b;
        for (std::size_t i = 0; i < bits; ++i) {
          wires[1 + 2 * i] = (a >> i) & 1u;
          wires[2 + 2 * i] = (sum >> i) & 1u;
        }
        wires[2 * bits + 1] = (sum >> bits) & 1u;
        expect_deterministic(c, bits_of(c, wires));
      }
    }
  }
}

TEST(CuccaroAdder, WiderInstance) {
  const Circuit c = cuccaro_adder(6, 45, 29);
  EXPECT_EQ(c.num_qubits(), 14u);
  std::vector<int> wires(14, 0);
  const std::uint64_t sum = 45 + 29;
  for (std::size_t i = 0; i < 6; ++i) {
    wires[1 + 2 * i] = (45 >> i) & 1;
    wires[2 + 2 * i] = (sum >> i) & 1u;
  }
  wires[13] = (sum >> 6) & 1u;
  expect_deterministic(c, bits_of(c, wires));
  EXPECT_THROW(cuccaro_adder(0, 0, 0), Error);
}

TEST(GfMultiplier, ReferenceProduct) {
  for (std::size_t m : {2u, 3u, 4u, 8u, 16u}) {
    const auto taps = gf2m_taps(m);
    EXPECT_EQ(taps.front(), 0u);
    for (std::uint64_t a : {1ull, 2ull, 3ull, 0xA5ull, 0xBEEFull}) {
      for (std::uint64_t b : {1ull, 3ull, 0x53ull, 0x1234ull}) {
        const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
        EXPECT_EQ(gf2m_multiply(m, a, b), field_product(m, a & mask, b & mask, taps)) << m;
      }
    }
  }
  // x * x^3 = x^4 = x + 1 in GF(16).
  EXPECT_EQ(gf2m_multiply(4, 0b0010, 0b1000), 0b0011u);
  EXPECT_THROW(gf2m_taps(5), Error);
}

TEST(GfMultiplier, CircuitComputesProduct) {
  for (std::size_t m : {2u, 3u, 4u}) {
    const auto wires_out = gf2m_product_wires(m);
    ASSERT_EQ(std::set<Qubit>(wires_out.begin(), wires_out.end()).size(), m);
    for (std::uint64_t a = 0; a < (1u << m); a += (m == 4 ? 3 : 1)) {
      for (std::uint64_t b = 0; b < (1u << m); b += (m == 4 ? 5 : 1)) {
        const Circuit c = gf2m_multiplier(m, a, b);
        std::vector<int> wires(3 * m, 0);
        const std::uint64_t p = field_product(m, a, b, gf2m_taps(m));
        for (std::size_t i = 0; i < m; ++i) {
          wires[i] = (a >> i) & 1u;
          wires[m + i] = (b >> i) & 1u;
          wires[wires_out[i]] = (p >> i) & 1u;
        }
        expect_deterministic(c, bits_of(c, wires));
      }
    }
  }
}

TEST(Grover, SingleIterationAmplifiesMarked) {
  for (std::size_t n : {2u, 3u, 4u, 5u}) {
    const double theta = std::asin(1.0 / std::sqrt(static_cast<double>(1u << n)));
    const double expected = std::pow(std::sin(3 * theta), 2);
    for (std::uint64_t marked : {0ull, 1ull, (1ull << n) - 1}) {
      const Circuit c = grover_circuit(n, marked);
      EXPECT_EQ(c.measured().size(), n);
      std::string key;
      for (std::size_t i = 0; i < n; ++i) {
        key.push_back(((marked >> i) & 1u) ? '1' : '0');
      }
      const Distribution d = exact_distribution(simulate(c), c.measured());
      EXPECT_NEAR(d.at(key), expected, 1e-9) << n << " " << marked;
      for (const auto &[k, p] : d) {
        EXPECT_LE(p, d.at(key) + 1e-12);
      }
      // Ancillas return to zero.
      const Distribution full = exact_distribution(simulate(c));
      for (const auto &[k, p] : full) {
        if (p > 1e-12) {
          EXPECT_EQ(k.substr(n), std::string(c.num_qubits() - n, '0'));
        }
      }
    }
  }
  EXPECT_THROW(grover_circuit(1, 0), Error);
}

TEST(BernsteinVazirani, RecoversSecret) {
  for (std::size_t n : {1u, 4u, 8u, 12u}) {
    for (std::uint64_t secret : {0ull, 1ull, 0b1011ull, 0xABCull}) {
      const std::uint64_t s = secret & ((1ull << n) - 1);
      const Circuit c = bv_circuit(n, s);
      std::string expected;
      for (std::size_t i = 0; i < n; ++i) {
        expected.push_back(((s >> i) & 1u) ? '1' : '0');
      }
      expect_deterministic(c, expected);
    }
  }
}

TEST(ApproximateQft, UniformOutputAndUnitary) {
  for (std::size_t n : {1u, 3u, 4u, 6u}) {
    for (std::uint64_t input : {0ull, 1ull, 5ull}) {
      const Circuit c = approximate_qft_circuit(n, input);
      const Distribution d = exact_distribution(simulate(c), c.measured());
      EXPECT_EQ(d.size(), std::size_t{1} << n);
      for (const auto &[k, p] : d) {
        EXPECT_NEAR(p, 1.0 / static_cast<double>(std::size_t{1} << n), 1e-9);
      }
    }
  }
}

TEST(ControlledS, Matrix) {
  Circuit c(2);
  append_controlled_s(c, 0, 1);
  const MatrixX u = circuit_unitary(c);
  MatrixX expected = MatrixX::Identity(4, 4);
  expected(3, 3) = Complex(0.0, 1.0);
  EXPECT_TRUE(equal_up_to_global_phase(u, expected, 1e-9));
}

TEST(Suites, NamesAndShapes) {
  std::set<std::string> all;
  for (std::string_view name : suite_names()) {
    const auto suite = make_suite(name, 7, 4);
    EXPECT_FALSE(suite.empty()) << name;
    for (const NamedCircuit &nc : suite) {
      EXPECT_TRUE(all.insert(nc.name).second) << nc.name;
      EXPECT_FALSE(nc.circuit.empty()) << nc.name;
      EXPECT_FALSE(nc.circuit.measured().empty()) << nc.name;
    }
  }
  EXPECT_EQ(make_suite("random", 1, 5).size(), 5u);
  EXPECT_THROW(make_suite("nope", 0), Error);
}

TEST(Suites, DeterministicPerSeed) {
  for (std::string_view name : suite_names()) {
    const auto a = make_suite(name, 3, 3);
    const auto b = make_suite(name, 3, 3);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_TRUE(same_circuit(a[i].circuit, b[i].circuit)) << a[i].name;
    }
  }
}

TEST(Suites, SmallMembersSimulateCleanly) {
  for (std::string_view name : suite_names()) {
    for (const NamedCircuit &nc : make_suite(name, 2, 3)) {
      if (nc.circuit.num_qubits() > 14) {
        continue;
      }
      double total = 0.0;
      for (const auto &[k, p] : exact_distribution(simulate(nc.circuit), nc.circuit.measured())) {
        total += p;
      }
      EXPECT_NEAR(total, 1.0, 1e-10) << nc.name;
    }
  }
}

}  // namespace
}  // namespace qobf
