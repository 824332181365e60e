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

#include "qobf/dag.hpp"

#include <algorithm>
#include <limits>

#include "qobf/error.hpp"

namespace qobf {

CircuitDag::CircuitDag(std::vector<GateKind> labels, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : labels_(std::move(labels)), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  succ_.resize(labels_.size());
  pred_.resize(labels_.size());
  for (const auto &[u, v] : edges_) {
    if (u >= labels_.size() || v >= labels_.size() || u == v) {
      throw Error("invalid DAG edge");
    }
    succ_[u].push_back(v);
    pred_[v].push_back(u);
  }
}

bool CircuitDag::has_edge(std::size_t from, std::size_t to) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(from, to));
}

std::size_t CircuitDag::longest_path() const {
  // Kahn order; the graph need not be index-ordered when built by hand.
  const std::size_t n = labels_.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto &e : edges_) {
    ++indeg[e.second];
  }
  std::vector<std::size_t> queue;
  for (std::size_t i = 0; i < n; ++i) {
    if (indeg[i] == 0) {
      queue.push_back(i);
    }
  }
  std::vector<std::size_t> dist(n, 1);
  std::size_t best = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    best = std::max(best, dist[u]);
    for (std::size_t v : succ_[u]) {
      dist[v] = std::max(dist[v], dist[u] + 1);
      if (--indeg[v] == 0) {
        queue.push_back(v);
      }
    }
  }
  if (queue.size() != n) {
    throw Error("graph has a cycle");
  }
  return best;
}

CircuitDag build_dag(const Circuit &circuit) {
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> last(circuit.num_qubits(), kNone);
  std::vector<GateKind> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  labels.reserve(circuit.size());
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    labels.push_back(circuit[i].kind);
    for (Qubit q : circuit[i].qubits) {
      if (last[q] != kNone) {
        edges.emplace_back(last[q], i);
      }
      last[q] = i;
    }
  }
  return CircuitDag(std::move(labels), std::move(edges));
}

GateCensus gate_census(const Circuit &circuit) {
  GateCensus c;
  for (const auto &g : circuit) {
    if (is_t_like(g.kind)) {
      ++c.t;
    } else if (is_clifford(g.kind)) {
      ++c.clifford;
    } else {
      ++c.other;
    }
  }
  c.total = circuit.size();
  c.depth = build_dag(circuit).longest_path();
  return c;
}

}  // namespace qobf
