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
#include <set>

#include "qobf/circuit_library.hpp"
#include "qobf/dag.hpp"
#include "qobf/error.hpp"
#include "qobf/random_circuit.hpp"

namespace qobf {
namespace {

using Edge = std::pair<std::size_t, std::size_t>;

TEST(BuildDag, SuccessorRelation) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::H, {1});
  const CircuitDag g = build_dag(c);
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_EQ(g.label(1), GateKind::CX);
}

TEST(BuildDag, DisjointQubitsHaveNoEdges) {
  Circuit c(2);
  c.add(GateKind::X, {0});
  c.add(GateKind::Y, {1});
  EXPECT_EQ(build_dag(c).num_edges(), 0u);
}

TEST(BuildDag, TenTGatesFormAChain) {
  Circuit c(1);
  for (int i = 0; i < 10; ++i) {
    c.add(GateKind::T, {0});
  }
  const CircuitDag g = build_dag(c);
  EXPECT_EQ(g.num_nodes(), 10u);
  EXPECT_EQ(g.num_edges(), 9u);
  EXPECT_EQ(g.longest_path(), 10u);
  for (std::size_t i = 0; i + 1 < 10; ++i) {
    EXPECT_TRUE(g.has_edge(i, i + 1));
  }
}

TEST(BuildDag, ParallelDependenciesCollapse) {
  Circuit c(2);
  c.add(GateKind::CX, {0, 1});
  c.add(GateKind::CZ, {1, 0});
  EXPECT_EQ(build_dag(c).num_edges(), 1u);
}

TEST(CircuitDag, RejectsCycles) {
  const CircuitDag g({GateKind::X, GateKind::X}, {{0, 1}, {1, 0}});
  EXPECT_THROW((void)g.longest_path(), Error);
}

/// Independent per-wire recomputation of the successor relation.
std::set<Edge> oracle_edges(const Circuit &c) {
  std::set<Edge> edges;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (Qubit q : c[i].qubits) {
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        if (c[j].acts_on(q)) {
          edges.insert({i, j});
          break;
        }
      }
    }
  }
  return edges;
}

TEST(BuildDag, PropertiesOnRandomCircuits) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Circuit c = random_clifford_t_circuit(1 + seed % 5, 60, 0.3, seed);
    const CircuitDag g = build_dag(c);
    EXPECT_EQ(g.num_nodes(), c.size());
    const std::set<Edge> expected = oracle_edges(c);
    EXPECT_EQ(std::set<Edge>(g.edges().begin(), g.edges().end()), expected);
    for (const auto &[u, v] : g.edges()) {
      EXPECT_LT(u, v);
    }
    EXPECT_LE(g.longest_path(), c.size());
  }
}

TEST(GateCensus, HandExample) {
  Circuit c(2);
  c.add(GateKind::H, {0});
  c.add(GateKind::T, {0});
  c.add(GateKind::T, {1});
  c.add(GateKind::CX, {0, 1});
  const GateCensus g = gate_census(c);
  EXPECT_EQ(g.clifford, 2u);
  EXPECT_EQ(g.t, 2u);
  EXPECT_EQ(g.other, 0u);
  EXPECT_EQ(g.total, 4u);
  EXPECT_EQ(g.depth, 3u);
}

TEST(GateCensus, Empty) {
  const GateCensus g = gate_census(Circuit(3));
  EXPECT_EQ(g.clifford + g.t + g.other + g.depth + g.total, 0u);
}

TEST(GateCensus, ToffoliBenchmarkMatchesRecount) {
  for (const auto &entry : make_suite("toffoli", 1)) {
    const GateCensus g = gate_census(entry.circuit);
    std::map<std::string, std::size_t> recount;
    for (const Gate &gate : entry.circuit) {
      const auto k = gate.kind;
      const bool t = k == GateKind::T || k == GateKind::Tdg;
      const bool other = k == GateKind::RZ || k == GateKind::U3;
      ++recount[t ? "t" : other ? "other" : "clifford"];
    }
    EXPECT_EQ(g.clifford, recount["clifford"]) << entry.name;
    EXPECT_EQ(g.t, recount["t"]) << entry.name;
    EXPECT_EQ(g.other, recount["other"]) << entry.name;
    EXPECT_EQ(g.total, entry.circuit.size());
  }
}

TEST(RandomCircuit, ZeroGates) { EXPECT_TRUE(random_clifford_t_circuit(2, 0, 0.5, 1).empty()); }

TEST(RandomCircuit, AllTWhenFractionIsOne) {
  const Circuit c = random_clifford_t_circuit(1, 5, 1.0, 9);
  ASSERT_EQ(c.size(), 5u);
  for (const Gate &g : c) {
    EXPECT_TRUE(is_t_like(g.kind));
  }
}

TEST(RandomCircuit, Deterministic) {
  EXPECT_TRUE(same_circuit(random_clifford_t_circuit(4, 50, 0.2, 77), random_clifford_t_circuit(4, 50, 0.2, 77)));
  EXPECT_FALSE(same_circuit(random_clifford_t_circuit(4, 50, 0.2, 77), random_clifford_t_circuit(4, 50, 0.2, 78)));
}

TEST(RandomCircuit, KindsAndErrors) {
  const Circuit c = random_clifford_t_circuit(3, 500, 0.3, 4);
  const std::set<GateKind> allowed = {GateKind::H, GateKind::S, GateKind::X,  GateKind::Z,
                                      GateKind::CX, GateKind::T, GateKind::Tdg};
  std::size_t t = 0;
  for (const Gate &g : c) {
    EXPECT_TRUE(allowed.count(g.kind));
    t += is_t_like(g.kind);
  }
  EXPECT_NEAR(static_cast<double>(t) / 500.0, 0.3, 0.08);
  EXPECT_THROW(random_clifford_t_circuit(2, -1, 0.5, 1), Error);
  EXPECT_THROW(random_clifford_t_circuit(0, 3, 0.5, 1), Error);
  EXPECT_THROW(random_clifford_t_circuit(2, 3, 1.5, 1), Error);
}

}  // namespace
}  // namespace qobf
