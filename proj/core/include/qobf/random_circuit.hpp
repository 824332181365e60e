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
#include <cstdint>

#include "qobf/circuit.hpp"

namespace qobf {

/// Seeded Clifford+T circuit over {H, S, X, Z, CX, T, Tdg}. Each gate is T or
/// Tdg with probability `t_fraction`, otherwise a Clifford (CX only when
/// there are two or more qubits). All qubits are measured.
Circuit random_clifford_t_circuit(std::size_t n_qubits, std::int64_t n_gates, double t_fraction, std::uint64_t seed);

}  // namespace qobf
