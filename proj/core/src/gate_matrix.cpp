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

#include "qobf/gate_matrix.hpp"

#include <cmath>
#include <numbers>

#include "qobf/error.hpp"

namespace qobf {

namespace {

constexpr Complex kI{0.0, 1.0};

double wrap_angle(double x) {
  x = std::remainder(x, 2.0 * std::numbers::pi);
  if (x <= -std::numbers::pi + 1e-15) {
    x += 2.0 * std::numbers::pi;
  }
  return x;
}

}  // namespace

Matrix2 rz_matrix(double theta) {
  Matrix2 m;
  m << std::exp(-kI * theta / 2.0), 0.0, 0.0, std::exp(kI * theta / 2.0);
  return m;
}

Matrix2 ry_matrix(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Matrix2 m;
  m << c, -s, s, c;
  return m;
}

Matrix2 u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  Matrix2 m;
  m << c, -std::exp(kI * lambda) * s, std::exp(kI * phi) * s, std::exp(kI * (phi + lambda)) * c;
  return m;
}

Matrix2 single_qubit_matrix(GateKind kind) {
  const double r = 1.0 / std::numbers::sqrt2;
  Matrix2 m;
  switch (kind) {
    case GateKind::X:
      m << 0.0, 1.0, 1.0, 0.0;
      break;
    case GateKind::Y:
      m << 0.0, -kI, kI, 0.0;
      break;
    case GateKind::Z:
      m << 1.0, 0.0, 0.0, -1.0;
      break;
    case GateKind::H:
      m << r, r, r, -r;
      break;
    case GateKind::S:
      m << 1.0, 0.0, 0.0, kI;
      break;
    case GateKind::Sdg:
      m << 1.0, 0.0, 0.0, -kI;
      break;
    case GateKind::T:
      m << 1.0, 0.0, 0.0, std::exp(kI * std::numbers::pi / 4.0);
      break;
    case GateKind::Tdg:
      m << 1.0, 0.0, 0.0, std::exp(-kI * std::numbers::pi / 4.0);
      break;
    default:
      throw UnsupportedGateError("gate " + std::string(gate_name(kind)) + " has no fixed single-qubit matrix");
  }
  return m;
}

Matrix2 single_qubit_matrix(const Gate &gate) {
  switch (gate.kind) {
    case GateKind::RZ:
      return rz_matrix(gate.params.at(0).radians());
    case GateKind::U3:
      return u3_matrix(gate.params.at(0).radians(), gate.params.at(1).radians(), gate.params.at(2).radians());
    default:
      return single_qubit_matrix(gate.kind);
  }
}

Matrix4 two_qubit_matrix(GateKind kind) {
  Matrix4 m = Matrix4::Zero();
  switch (kind) {
    case GateKind::CX:
      // control = bit 0, target = bit 1
      m(0, 0) = 1.0;
      m(2, 2) = 1.0;
      m(3, 1) = 1.0;
      m(1, 3) = 1.0;
      break;
    case GateKind::CZ:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      m(2, 2) = 1.0;
      m(3, 3) = -1.0;
      break;
    default:
      throw UnsupportedGateError("gate " + std::string(gate_name(kind)) + " is not a two-qubit gate");
  }
  return m;
}

Matrix2 zyz_matrix(const ZyzAngles &a) {
  return std::exp(kI * a.alpha) * rz_matrix(a.beta) * ry_matrix(a.gamma) * rz_matrix(a.delta);
}

ZyzAngles zyz_decompose(const Matrix2 &u) {
  // u = e^{i alpha} [[e^{-i(b+d)/2} c, -e^{-i(b-d)/2} s], [e^{i(b-d)/2} s, e^{i(b+d)/2} c]]
  const Complex det = u.determinant();
  ZyzAngles z;
  z.alpha = std::arg(det) / 2.0;
  const Matrix2 v = u * std::exp(-kI * z.alpha);
  const double c = std::abs(v(0, 0));
  const double s = std::abs(v(1, 0));
  z.gamma = 2.0 * std::atan2(s, c);
  constexpr double kEps = 1e-12;
  if (s < kEps) {
    z.beta = 2.0 * std::arg(v(1, 1));
    z.delta = 0.0;
  } else if (c < kEps) {
    z.beta = 2.0 * std::arg(v(1, 0));
    z.delta = 0.0;
  } else {
    const double sum = 2.0 * std::arg(v(1, 1));   // b + d
    const double diff = 2.0 * std::arg(v(1, 0));  // b - d
    z.beta = (sum + diff) / 2.0;
    z.delta = (sum - diff) / 2.0;
  }
  // det(v) = 1 fixes v only up to a sign; absorb a mismatch into alpha.
  if ((zyz_matrix(z) - u).norm() > 1e-9) {
    z.alpha += std::numbers::pi;
  }
  return z;
}

U3Angles u3_from_matrix(const Matrix2 &u) {
  const double c = std::abs(u(0, 0));
  const double s = std::abs(u(1, 0));
  U3Angles a;
  a.theta = 2.0 * std::atan2(s, c);
  constexpr double kEps = 1e-12;
  if (s < kEps) {
    a.phi = 0.0;
    a.lambda = std::arg(u(1, 1) / u(0, 0));
  } else if (c < kEps) {
    a.lambda = 0.0;
    a.phi = std::arg(u(1, 0) / -u(0, 1));
  } else {
    a.phi = std::arg(u(1, 0) / u(0, 0));
    a.lambda = std::arg(-u(0, 1) / u(0, 0));
  }
  a.theta = wrap_angle(a.theta);
  a.phi = wrap_angle(a.phi);
  a.lambda = wrap_angle(a.lambda);
  return a;
}

bool equal_up_to_global_phase(const MatrixX &a, const MatrixX &b, double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    return false;
  }
  // Align phase on the largest entry of a.
  Eigen::Index r = 0;
  Eigen::Index col = 0;
  a.cwiseAbs().maxCoeff(&r, &col);
  if (std::abs(a(r, col)) < tolerance) {
    return b.cwiseAbs().maxCoeff() <= tolerance;
  }
  if (std::abs(b(r, col)) < 1e-300) {
    return false;
  }
  const Complex phase = b(r, col) / a(r, col);
  const Complex unit = phase / std::abs(phase);
  return (a * unit - b).cwiseAbs().maxCoeff() <= tolerance;
}

MatrixX pauli_operator(const std::vector<std::uint8_t> &a, const std::vector<std::uint8_t> &b) {
  if (a.size() != b.size()) {
    throw WidthMismatchError("Pauli key halves differ in length");
  }
  const std::size_t n = a.size();
  const std::size_t dim = std::size_t{1} << n;
  std::size_t xmask = 0;
  std::size_t zmask = 0;
  for (std::size_t i = 0; i < n; ++i) {
    xmask |= static_cast<std::size_t>(a[i] & 1) << i;
    zmask |= static_cast<std::size_t>(b[i] & 1) << i;
  }
  // (X^a Z^b)|k> = (-1)^{popcount(k & zmask)} |k ^ xmask>
  MatrixX m = MatrixX::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t k = 0; k < dim; ++k) {
    const double sign = (__builtin_popcountll(k & zmask) & 1) ? -1.0 : 1.0;
    m(static_cast<Eigen::Index>(k ^ xmask), static_cast<Eigen::Index>(k)) = sign;
  }
  return m;
}

}  // namespace qobf
