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

#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "qobf/circuit.hpp"

namespace qobf {

using Complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using MatrixX = Eigen::MatrixXcd;

Matrix2 rz_matrix(double theta);
Matrix2 ry_matrix(double theta);
/// OpenQASM u3: [[cos(t/2), -e^{il} sin(t/2)], [e^{ip} sin(t/2), e^{i(p+l)} cos(t/2)]].
Matrix2 u3_matrix(double theta, double phi, double lambda);

/// Matrix of a single-qubit gate.
Matrix2 single_qubit_matrix(const Gate &gate);
Matrix2 single_qubit_matrix(GateKind kind);
/// Matrix of CX or CZ. Basis index = bit(qubits[0]) + 2 * bit(qubits[1]).
Matrix4 two_qubit_matrix(GateKind kind);

/// U = e^{i alpha} Rz(beta) Ry(gamma) Rz(delta).
struct ZyzAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
};

Matrix2 zyz_matrix(const ZyzAngles &angles);
/// Exact Z-Y-Z decomposition of a 2x2 unitary (global phase included).
ZyzAngles zyz_decompose(const Matrix2 &u);

struct U3Angles {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
};

/// u3 parameters reproducing `u` up to global phase; angles in (-pi, pi].
U3Angles u3_from_matrix(const Matrix2 &u);

bool equal_up_to_global_phase(const MatrixX &a, const MatrixX &b, double tolerance);

/// Dense X^a Z^b over a.size() qubits (qubit i is bit i of the basis index).
MatrixX pauli_operator(const std::vector<std::uint8_t> &a, const std::vector<std::uint8_t> &b);

}  // namespace qobf
