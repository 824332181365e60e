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

// Path-sum semantics: U = 2^{-m/2} sum_y e^{2 pi i (phi(x,y) + g)} |f(x,y)><x|.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qobf/circuit.hpp"
#include "qobf/gate_matrix.hpp"

namespace qobf {

/// Variable index: 0..n-1 are inputs x, n..n+m-1 are path variables y in
/// H-occurrence order.
using Var = std::uint32_t;

/// Product of up to three distinct variables, packed 21 bits per slot
/// (slot value = var + 1, zero = unused), ascending.
using Monomial = std::uint64_t;

inline constexpr int kMaxMonomialDegree = 3;
inline constexpr Var kMaxVars = (1u << 21) - 1;

Monomial make_monomial(std::span<const Var> vars);
std::vector<Var> monomial_vars(Monomial m);
std::size_t monomial_degree(Monomial m);

/// Affine GF(2) form: XOR of `vars` (sorted, distinct) and `constant`.
struct AffineForm {
  std::vector<Var> vars;
  bool constant = false;

  bool operator==(const AffineForm &) const = default;
  bool evaluate(std::span<const std::uint8_t> assignment) const;
  std::string to_string(std::size_t num_inputs) const;
};

AffineForm xor_forms(const AffineForm &a, const AffineForm &b);

class PathSum {
 public:
  /// Coefficients are stored in units of 1/8 (mod 8); the global phase in
  /// units of 1/16 (mod 16).
  static constexpr int kPhaseUnits = 8;
  static constexpr int kGlobalUnits = 16;

  explicit PathSum(std::size_t num_inputs);

  std::size_t num_inputs() const { return n_; }
  std::size_t num_paths() const { return m_; }
  std::size_t num_vars() const { return n_ + m_; }

  const std::vector<AffineForm> &outputs() const { return outputs_; }
  const std::unordered_map<Monomial, std::uint8_t> &phase() const { return phase_; }
  /// Terms sorted by (degree, key).
  std::vector<std::pair<Monomial, int>> sorted_terms() const;
  int coefficient(Monomial m) const;
  int global_phase() const { return global_; }

  void apply(const Gate &gate);

  /// Phase polynomial value (in eighths, 0..7) at an assignment of all n+m
  /// variables.
  int evaluate_phase(std::span<const std::uint8_t> assignment) const;
  std::vector<std::uint8_t> evaluate_outputs(std::span<const std::uint8_t> assignment) const;

  /// Dense operator including the global phase. Needs n <= 12 and m <= 20.
  MatrixX to_operator() const;

  std::string to_string() const;

 private:
  void add_term(Monomial m, int eighths);
  void add_global(int sixteenths);
  /// phase += (eighths / 8) * L for a boolean affine form L.
  void add_linear_phase(int eighths, const AffineForm &form);
  /// phase += (1/2) * L1 * L2.
  void add_half_product(const AffineForm &a, const AffineForm &b);
  /// diag(e^{2 pi i p0/16}, e^{2 pi i p1/16}) on wire q.
  void apply_diagonal(Qubit q, int p0, int p1);
  void apply_h(Qubit q);
  void apply_u3(Qubit q, const Gate &gate);
  Var new_path_var();

  std::size_t n_;
  std::size_t m_ = 0;
  std::vector<AffineForm> outputs_;
  std::unordered_map<Monomial, std::uint8_t> phase_;
  int global_ = 0;
};

/// Gate-by-gate path sum. RZ must be a multiple of pi/4; U3 needs theta a
/// multiple of pi/2 and phi, lambda multiples of pi/4.
PathSum circuit_to_pathsum(const Circuit &circuit);

}  // namespace qobf
