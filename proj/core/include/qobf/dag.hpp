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

#include <cstddef>
#include <utility>
#include <vector>

#include "qobf/circuit.hpp"

namespace qobf {

/// Qubit-dependency DAG of a circuit: node i is gate i, and there is an edge
/// u -> v when v is the next gate after u on one of u's wires. Parallel
/// dependencies between the same pair collapse into one edge.
class CircuitDag {
 public:
  CircuitDag() = default;
  CircuitDag(std::vector<GateKind> labels, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  GateKind label(std::size_t node) const { return labels_[node]; }
  const std::vector<GateKind> &labels() const { return labels_; }
  /// Sorted, deduplicated (from, to) pairs.
  const std::vector<std::pair<std::size_t, std::size_t>> &edges() const { return edges_; }
  const std::vector<std::size_t> &successors(std::size_t node) const { return succ_[node]; }
  const std::vector<std::size_t> &predecessors(std::size_t node) const { return pred_[node]; }
  bool has_edge(std::size_t from, std::size_t to) const;

  /// Number of nodes on the longest path (0 for an empty graph).
  std::size_t longest_path() const;

 private:
  std::vector<GateKind> labels_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> succ_;
  std::vector<std::vector<std::size_t>> pred_;
};

CircuitDag build_dag(const Circuit &circuit);

struct GateCensus {
  std::size_t clifford = 0;
  /// T plus Tdg.
  std::size_t t = 0;
  /// RZ and U3.
  std::size_t other = 0;
  std::size_t depth = 0;
  std::size_t total = 0;
};

GateCensus gate_census(const Circuit &circuit);

}  // namespace qobf
