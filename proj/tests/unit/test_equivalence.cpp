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

#include <map>

#include "qobf/circuit_library.hpp"
#include "qobf/decoupling.hpp"
#include "qobf/equivalence.hpp"
#include "qobf/error.hpp"
#include "qobf/qcoo.hpp"
#include "qobf/random_circuit.hpp"

namespace qobf {
namespace {

Circuit one_gate(GateKind kind) {
  Circuit c(1);
  c.add(kind, {0});
  return c;
}

Circuit tt() {
  Circuit c(1);
  c.add(GateKind::T, {0});
  c.add(GateKind::T, {0});
  return c;
}

/// Number of gates deleted or changed, matched by uid.
std::size_t touched_gates(const Circuit &original, const Circuit &mutated) {
  std::map<GateUid, GateKind> after;
  for (const Gate &g : mutated) {
    after[g.uid] = g.kind;
  }
  std::size_t touched = 0;
  for (const Gate &g : original) {
    auto it = after.find(g.uid);
    touched += it == after.end() || it->second != g.kind;
  }
  return touched;
}

TEST(Canonical, SelfEqual) {
  const PathSum p = circuit_to_pathsum(random_clifford_t_circuit(4, 40, 0.3, 1));
  const EquivVerdict v = pathsum_canonical_equal(p, p);
  EXPECT_TRUE(v.equal);
  EXPECT_EQ(v.mode, EquivMode::Canonical);
  EXPECT_FALSE(v.witness.has_value());
}

TEST(Canonical, TwoTsEqualS) {
  EXPECT_TRUE(pathsum_canonical_equal(circuit_to_pathsum(tt()), circuit_to_pathsum(one_gate(GateKind::S))).equal);
}

TEST(Canonical, GlobalPhaseIgnored) {
  Circuit rz(1);
  rz.add(GateKind::RZ, {0}, {Angle::pi_fraction(1, 2)});
  EXPECT_TRUE(pathsum_canonical_equal(circuit_to_pathsum(rz), circuit_to_pathsum(one_gate(GateKind::T))).equal);
}

TEST(Canonical, XVersusZ) {
  const EquivVerdict v =
      pathsum_canonical_equal(circuit_to_pathsum(one_gate(GateKind::X)), circuit_to_pathsum(one_gate(GateKind::Z)));
  EXPECT_FALSE(v.equal);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->kind, WitnessKind::OutputMismatch);
}

TEST(Canonical, StructuralWitnesses) {
  const EquivVerdict w = pathsum_canonical_equal(PathSum(1), PathSum(2));
  ASSERT_TRUE(w.witness.has_value());
  EXPECT_EQ(w.witness->kind, WitnessKind::WidthMismatch);
  const EquivVerdict m =
      pathsum_canonical_equal(circuit_to_pathsum(one_gate(GateKind::H)), circuit_to_pathsum(one_gate(GateKind::X)));
  ASSERT_TRUE(m.witness.has_value());
  EXPECT_EQ(m.witness->kind, WitnessKind::PathCountMismatch);
}

TEST(Canonical, PhaseWitnessIsGenuine) {
  const PathSum p = circuit_to_pathsum(one_gate(GateKind::S));
  const PathSum q = circuit_to_pathsum(one_gate(GateKind::T));
  const EquivVerdict v = pathsum_canonical_equal(p, q);
  EXPECT_FALSE(v.equal);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->kind, WitnessKind::PhaseMismatch);
  EXPECT_EQ(v.witness->x, "1");
  const std::vector<std::uint8_t> a{1};
  EXPECT_NE(p.evaluate_phase(a), q.evaluate_phase(a));
}

TEST(Ptd, IdenticalSums) {
  const PathSum p = circuit_to_pathsum(random_clifford_t_circuit(5, 60, 0.3, 2));
  for (std::size_t samples : {1u, 8u, 64u}) {
    const EquivVerdict v = ptd_equivalent(p, p, samples, 3);
    EXPECT_TRUE(v.equal);
    EXPECT_EQ(v.mode, EquivMode::Sampled);
    EXPECT_EQ(v.samples_used, samples);
  }
}

TEST(Ptd, TwoTsEqualS) {
  EXPECT_TRUE(ptd_equivalent(circuit_to_pathsum(tt()), circuit_to_pathsum(one_gate(GateKind::S)), 64, 5).equal);
}

TEST(Ptd, DeletedCnotFound) {
  Circuit c(3);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::T, {1});
  c.add(GateKind::CX, {1, 2});
  c.add(GateKind::H, {2});
  Circuit d(3);
  for (const Gate &g : c) {
    if (!(g.kind == GateKind::CX && g.qubits[0] == 1)) {
      d.append(g);
    }
  }
  const PathSum p = circuit_to_pathsum(c);
  const PathSum q = circuit_to_pathsum(d);
  const EquivVerdict v = ptd_equivalent(p, q, 64, 9);
  EXPECT_FALSE(v.equal);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->x.size(), 3u);
  EXPECT_EQ(v.witness->y.size(), 2u);
  // Replay the witness.
  std::vector<std::uint8_t> a;
  for (char ch : v.witness->x + v.witness->y) {
    a.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  EXPECT_TRUE(p.evaluate_outputs(a) != q.evaluate_outputs(a) || p.evaluate_phase(a) != q.evaluate_phase(a));
}

TEST(Ptd, DeterministicAndErrors) {
  const PathSum p = circuit_to_pathsum(random_clifford_t_circuit(4, 30, 0.3, 4));
  const PathSum q = circuit_to_pathsum(random_clifford_t_circuit(4, 30, 0.3, 5));
  const EquivVerdict a = ptd_equivalent(p, q, 64, 1);
  const EquivVerdict b = ptd_equivalent(p, q, 64, 1);
  EXPECT_EQ(a.equal, b.equal);
  EXPECT_EQ(a.samples_used, b.samples_used);
  if (a.witness && b.witness) {
    EXPECT_EQ(a.witness->x, b.witness->x);
    EXPECT_EQ(a.witness->y, b.witness->y);
  }
  EXPECT_THROW(ptd_equivalent(p, q, 0, 1), Error);
}

TEST(Ptd, NoFalseWitnesses) {
  std::size_t unequal = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 1 + seed % 4;
    const Circuit c = random_clifford_t_circuit(n, 12, 0.3, seed);
    Circuit other(n);
    switch (seed % 3) {
      case 0:
        other = mutate_circuit(c, 0.1, seed);
        break;
      case 1:
        other = insert_dd([&] {
                            Circuit m = c;
                            m.measure_all();
                            return m;
                          }(),
                          DurationTable::defaults(), true, seed)
                    .circuit;
        break;
      default:
        other = random_clifford_t_circuit(n, 12, 0.3, seed + 5000);
        break;
    }
    const PathSum p = circuit_to_pathsum(c);
    const PathSum q = circuit_to_pathsum(other);
    const EquivVerdict sampled = ptd_equivalent(p, q, 16, seed);
    const EquivVerdict exact = pathsum_canonical_equal(p, q);
    if (!sampled.equal) {
      ++unequal;
      EXPECT_FALSE(exact.equal) << "seed " << seed;
    }
  }
  EXPECT_GT(unequal, 300u);
}

TEST(Mutate, CeilingCount) {
  const Circuit c = random_clifford_t_circuit(4, 40, 0.3, 7);
  ASSERT_EQ(c.size(), 40u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    EXPECT_EQ(touched_gates(c, mutate_circuit(c, 0.10, seed)), 4u);
  }
  EXPECT_EQ(touched_gates(c, mutate_circuit(c, 0.05, 1)), 2u);
  EXPECT_EQ(touched_gates(c, mutate_circuit(c, 0.11, 1)), 5u);
  EXPECT_EQ(touched_gates(c, mutate_circuit(c, 1.0, 1)), 40u);
  EXPECT_EQ(touched_gates(c, mutate_circuit(c, 0.001, 1)), 1u);
}

TEST(Mutate, ValidAndDeterministic) {
  const Circuit c = [] {
    Circuit r = random_clifford_t_circuit(4, 40, 0.3, 8);
    r.measure_all();
    return r;
  }();
  const Circuit a = mutate_circuit(c, 0.15, 3);
  EXPECT_TRUE(same_circuit(a, mutate_circuit(c, 0.15, 3)));
  EXPECT_EQ(a.measured(), c.measured());
  EXPECT_LE(a.size(), c.size());
  for (const Gate &g : a) {
    EXPECT_EQ(g.qubits.size(), gate_arity(g.kind));
    EXPECT_EQ(g.params.size(), gate_param_count(g.kind));
  }
}

TEST(Mutate, Errors) {
  EXPECT_THROW(mutate_circuit(Circuit(2), 0.1, 0), Error);
  const Circuit c = random_clifford_t_circuit(2, 10, 0.3, 0);
  EXPECT_THROW(mutate_circuit(c, 0.0, 0), Error);
  EXPECT_THROW(mutate_circuit(c, 1.5, 0), Error);
}

TEST(Mutate, DetectionRate) {
  std::size_t detected = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Circuit c = random_clifford_t_circuit(5, 40, 0.25, seed);
    const Circuit fake = mutate_circuit(c, 0.10, seed);
    detected += !ptd_equivalent(circuit_to_pathsum(c), circuit_to_pathsum(fake), kDefaultPtdSamples, seed).equal;
  }
  EXPECT_GE(detected, 99u);
}

TEST(DecouplingPreservesPathSums, AllSuites) {
  for (std::string_view suite : suite_names()) {
    for (const NamedCircuit &nc : make_suite(suite, 3, 5)) {
      const EncryptionResult enc = qcoo_transform(nc.circuit, keygen(nc.circuit.num_qubits(), 1));
      for (bool lambda : {true, false}) {
        const Circuit obf = insert_dd(enc.enc_circuit, DurationTable::defaults(), lambda, 0).circuit;
        EXPECT_TRUE(pathsum_canonical_equal(circuit_to_pathsum(enc.enc_circuit), circuit_to_pathsum(obf)).equal)
            << nc.name << " lambda " << lambda;
      }
    }
  }
}

TEST(PositiveNegative, IdentityObfuscation) {
  const Circuit c = random_clifford_t_circuit(4, 40, 0.3, 12);
  const PositiveNegativeReport r = positive_negative_test(c, c, 0.1, 64, 1);
  EXPECT_TRUE(r.positive.equal);
  EXPECT_FALSE(r.negative.equal);
  EXPECT_TRUE(r.passed());
  EXPECT_GE(r.positive_ms, 0.0);
  EXPECT_GE(r.negative_ms, 0.0);
}

TEST(PositiveNegative, AfterDecoupling) {
  std::size_t passed = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Circuit c = random_clifford_t_circuit(4, 40, 0.3, seed);
    c.measure_all();
    const EncryptionResult enc = qcoo_transform(c, keygen(4, seed));
    const Circuit obf = insert_dd(enc.enc_circuit, DurationTable::defaults(), true, seed).circuit;
    const PositiveNegativeReport r = positive_negative_test(enc.enc_circuit, obf, 0.1, 64, seed);
    EXPECT_TRUE(r.positive.equal) << seed;
    passed += r.passed();
    const PositiveNegativeReport again = positive_negative_test(enc.enc_circuit, obf, 0.1, 64, seed);
    EXPECT_TRUE(same_circuit(r.mutated, again.mutated));
    const PositiveNegativeReport exact =
        positive_negative_test(enc.enc_circuit, obf, 0.1, 64, seed, EquivMode::Canonical);
    EXPECT_TRUE(exact.positive.equal);
    EXPECT_EQ(exact.positive.mode, EquivMode::Canonical);
  }
  EXPECT_GE(passed, 29u);
}

TEST(PositiveNegative, FallbackOnlyOnSampledMiss) {
  const Circuit c = random_clifford_t_circuit(3, 30, 0.3, 2);
  const PositiveNegativeReport r = verify_with_fallback(c, c, 0.1, 64, 3);
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.canonical_fallback);
  // One sample is weak enough that some seeds miss and fall back.
  std::size_t fallbacks = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const PositiveNegativeReport w = verify_with_fallback(c, c, 0.1, 1, seed);
    if (w.canonical_fallback) {
      ++fallbacks;
      EXPECT_EQ(w.negative.mode, EquivMode::Canonical);
    }
  }
  EXPECT_GT(fallbacks, 0u);
}

TEST(Names, Stable) {
  EXPECT_EQ(equiv_mode_name(EquivMode::Canonical), "canonical");
  EXPECT_EQ(equiv_mode_name(EquivMode::Sampled), "sampled");
  EXPECT_EQ(witness_kind_name(WitnessKind::OutputMismatch), "output_mismatch");
  EXPECT_EQ(witness_kind_name(WitnessKind::PathCountMismatch), "path_count_mismatch");
}

}  // namespace
}  // namespace qobf
