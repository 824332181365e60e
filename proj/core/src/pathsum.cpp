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

#include "qobf/pathsum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <sstream>

#include "qobf/error.hpp"

namespace qobf {

namespace {

constexpr int kSlotBits = 21;
constexpr std::uint64_t kSlotMask = (std::uint64_t{1} << kSlotBits) - 1;

int mod(int v, int m) {
  const int r = v % m;
  return r < 0 ? r + m : r;
}

/// Angle as a multiple of pi/4, if it is one.
std::optional<std::int64_t> quarter_pi_units(const Angle &a) {
  if (a.is_dyadic()) {
    return a.multiple_of_pi_over(2);
  }
  const Angle s = Angle::snapped(a.radians(), 2);
  return s.is_dyadic() ? s.multiple_of_pi_over(2) : std::nullopt;
}

std::string var_name(Var v, std::size_t n) {
  return v < n ? "x" + std::to_string(v) : "y" + std::to_string(v - n);
}

}  // namespace

Monomial make_monomial(std::span<const Var> vars) {
  if (vars.empty() || vars.size() > kMaxMonomialDegree) {
    throw Error("monomial degree must be 1..3");
  }
  std::vector<Var> sorted(vars.begin(), vars.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error("monomial variables must be distinct");
  }
  Monomial m = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= kMaxVars) {
      throw Error("path sum variable index overflow");
    }
    m |= (std::uint64_t{sorted[i]} + 1) << (kSlotBits * i);
  }
  return m;
}

std::vector<Var> monomial_vars(Monomial m) {
  std::vector<Var> out;
  for (int i = 0; i < kMaxMonomialDegree; ++i) {
    const std::uint64_t slot = (m >> (kSlotBits * i)) & kSlotMask;
    if (slot == 0) {
      break;
    }
    out.push_back(static_cast<Var>(slot - 1));
  }
  return out;
}

std::size_t monomial_degree(Monomial m) {
  std::size_t d = 0;
  while (d < kMaxMonomialDegree && ((m >> (kSlotBits * d)) & kSlotMask) != 0) {
    ++d;
  }
  return d;
}

bool AffineForm::evaluate(std::span<const std::uint8_t> assignment) const {
  bool v = constant;
  for (Var x : vars) {
    v ^= assignment[x] != 0;
  }
  return v;
}

std::string AffineForm::to_string(std::size_t num_inputs) const {
  std::string s;
  for (Var v : vars) {
    if (!s.empty()) {
      s += "+";
    }
    s += var_name(v, num_inputs);
  }
  if (constant || s.empty()) {
    s += s.empty() ? (constant ? "1" : "0") : "+1";
  }
  return s;
}

AffineForm xor_forms(const AffineForm &a, const AffineForm &b) {
  AffineForm out;
  out.constant = a.constant != b.constant;
  std::set_symmetric_difference(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(),
                                std::back_inserter(out.vars));
  return out;
}

PathSum::PathSum(std::size_t num_inputs) : n_(num_inputs), outputs_(num_inputs) {
  if (num_inputs >= kMaxVars) {
    throw Error("too many inputs for a path sum");
  }
  for (std::size_t q = 0; q < n_; ++q) {
    outputs_[q].vars = {static_cast<Var>(q)};
  }
}

std::vector<std::pair<Monomial, int>> PathSum::sorted_terms() const {
  std::vector<std::pair<Monomial, int>> terms(phase_.begin(), phase_.end());
  std::sort(terms.begin(), terms.end(), [](const auto &l, const auto &r) {
    const auto dl = monomial_degree(l.first);
    const auto dr = monomial_degree(r.first);
    return dl != dr ? dl < dr : l.first < r.first;
  });
  return terms;
}

int PathSum::coefficient(Monomial m) const {
  const auto it = phase_.find(m);
  return it == phase_.end() ? 0 : it->second;
}

void PathSum::add_term(Monomial m, int eighths) {
  const int c = mod(eighths, kPhaseUnits);
  if (c == 0) {
    return;
  }
  auto [it, inserted] = phase_.try_emplace(m, static_cast<std::uint8_t>(c));
  if (!inserted) {
    const int next = mod(it->second + c, kPhaseUnits);
    if (next == 0) {
      phase_.erase(it);
    } else {
      it->second = static_cast<std::uint8_t>(next);
    }
  }
}

void PathSum::add_global(int sixteenths) { global_ = mod(global_ + sixteenths, kGlobalUnits); }

void PathSum::add_linear_phase(int eighths, const AffineForm &form) {
  int alpha = mod(eighths, kPhaseUnits);
  if (alpha == 0) {
    return;
  }
  if (form.constant) {
    // alpha * (1 - L) = alpha - alpha * L
    add_global(2 * alpha);
    alpha = mod(-alpha, kPhaseUnits);
  }
  // XOR of k bits = sum over nonempty S of (-2)^{|S|-1} prod x_S; terms of
  // degree >= 4 carry a multiple of 8 and vanish.
  const auto &v = form.vars;
  const std::size_t k = v.size();
  const int c2 = mod(-2 * alpha, kPhaseUnits);
  const int c3 = mod(4 * alpha, kPhaseUnits);
  for (std::size_t i = 0; i < k; ++i) {
    const Var one[] = {v[i]};
    add_term(make_monomial(one), alpha);
    if (c2 == 0) {
      continue;
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      const Var two[] = {v[i], v[j]};
      add_term(make_monomial(two), c2);
      if (c3 == 0) {
        continue;
      }
      for (std::size_t l = j + 1; l < k; ++l) {
        const Var three[] = {v[i], v[j], v[l]};
        add_term(make_monomial(three), c3);
      }
    }
  }
}

void PathSum::add_half_product(const AffineForm &a, const AffineForm &b) {
  // With weight 1/2 only parities matter: (ca + A)(cb + B) mod 2.
  constexpr int kHalf = kPhaseUnits / 2;
  if (a.constant && b.constant) {
    add_global(kGlobalUnits / 2);
  }
  if (a.constant) {
    for (Var v : b.vars) {
      const Var one[] = {v};
      add_term(make_monomial(one), kHalf);
    }
  }
  if (b.constant) {
    for (Var v : a.vars) {
      const Var one[] = {v};
      add_term(make_monomial(one), kHalf);
    }
  }
  for (Var u : a.vars) {
    for (Var v : b.vars) {
      if (u == v) {
        const Var one[] = {u};
        add_term(make_monomial(one), kHalf);
      } else {
        const Var two[] = {u, v};
        add_term(make_monomial(two), kHalf);
      }
    }
  }
}

void PathSum::apply_diagonal(Qubit q, int p0, int p1) {
  const int diff = p1 - p0;
  if (mod(diff, 2) != 0) {
    throw UnsupportedGateError("diagonal phase outside the pi/4 lattice");
  }
  add_global(p0);
  add_linear_phase(diff / 2, outputs_[q]);
}

Var PathSum::new_path_var() {
  const std::size_t v = n_ + m_;
  if (v >= kMaxVars) {
    throw Error("path sum variable index overflow");
  }
  ++m_;
  return static_cast<Var>(v);
}

void PathSum::apply_h(Qubit q) {
  AffineForm y;
  y.vars = {new_path_var()};
  add_half_product(outputs_[q], y);
  outputs_[q] = std::move(y);
}

void PathSum::apply_u3(Qubit q, const Gate &gate) {
  const auto th = quarter_pi_units(gate.params[0]);
  const auto phi = quarter_pi_units(gate.params[1]);
  const auto lam = quarter_pi_units(gate.params[2]);
  if (!th || mod(static_cast<int>(*th % 8), 2) != 0 || !phi || !lam) {
    throw UnsupportedGateError("u3 angles outside the supported lattice: " + gate.to_string());
  }
  // u3 = P(phi) Ry(theta) P(lambda), theta = k pi/2.
  const int k = mod(static_cast<int>(*th / 2 % 8), 8);
  const int lam8 = mod(static_cast<int>(*lam % 8), 8);
  const int phi8 = mod(static_cast<int>(*phi % 8), 8);
  apply_diagonal(q, 0, 2 * lam8);
  if (k >= 4) {
    add_global(kGlobalUnits / 2);
  }
  // Ry(pi/2) = H Z, Ry(pi) = X Z, Ry(3 pi/2) = X Z H Z (rightmost first).
  switch (k % 4) {
    case 1:
      apply_diagonal(q, 0, 8);
      apply_h(q);
      break;
    case 2:
      apply_diagonal(q, 0, 8);
      outputs_[q].constant = !outputs_[q].constant;
      break;
    case 3:
      apply_diagonal(q, 0, 8);
      apply_h(q);
      apply_diagonal(q, 0, 8);
      outputs_[q].constant = !outputs_[q].constant;
      break;
    default:
      break;
  }
  apply_diagonal(q, 0, 2 * phi8);
}

void PathSum::apply(const Gate &gate) {
  for (Qubit q : gate.qubits) {
    if (q >= n_) {
      throw WidthMismatchError("gate " + gate.to_string() + " outside a " + std::to_string(n_) + "-qubit path sum");
    }
  }
  const Qubit q = gate.qubits[0];
  switch (gate.kind) {
    case GateKind::X:
      outputs_[q].constant = !outputs_[q].constant;
      break;
    case GateKind::Y:
      apply_diagonal(q, 0, 8);
      outputs_[q].constant = !outputs_[q].constant;
      add_global(4);
      break;
    case GateKind::Z:
      apply_diagonal(q, 0, 8);
      break;
    case GateKind::H:
      apply_h(q);
      break;
    case GateKind::S:
      apply_diagonal(q, 0, 4);
      break;
    case GateKind::Sdg:
      apply_diagonal(q, 0, 12);
      break;
    case GateKind::T:
      apply_diagonal(q, 0, 2);
      break;
    case GateKind::Tdg:
      apply_diagonal(q, 0, 14);
      break;
    case GateKind::RZ: {
      const auto k = quarter_pi_units(gate.params[0]);
      if (!k) {
        throw UnsupportedGateError("rz angle is not a multiple of pi/4: " + gate.to_string());
      }
      const int j = mod(static_cast<int>(*k % 16), 16);
      apply_diagonal(q, -j, j);
      break;
    }
    case GateKind::U3:
      apply_u3(q, gate);
      break;
    case GateKind::CX: {
      const Qubit t = gate.qubits[1];
      outputs_[t] = xor_forms(outputs_[t], outputs_[q]);
      break;
    }
    case GateKind::CZ:
      add_half_product(outputs_[q], outputs_[gate.qubits[1]]);
      break;
  }
}

int PathSum::evaluate_phase(std::span<const std::uint8_t> assignment) const {
  if (assignment.size() != num_vars()) {
    throw WidthMismatchError("assignment width does not match the path sum");
  }
  int total = 0;
  for (const auto &[m, c] : phase_) {
    bool all = true;
    for (int i = 0; i < kMaxMonomialDegree && all; ++i) {
      const std::uint64_t slot = (m >> (kSlotBits * i)) & kSlotMask;
      if (slot == 0) {
        break;
      }
      all = assignment[slot - 1] != 0;
    }
    if (all) {
      total += c;
    }
  }
  return mod(total, kPhaseUnits);
}

std::vector<std::uint8_t> PathSum::evaluate_outputs(std::span<const std::uint8_t> assignment) const {
  if (assignment.size() != num_vars()) {
    throw WidthMismatchError("assignment width does not match the path sum");
  }
  std::vector<std::uint8_t> out(n_);
  for (std::size_t q = 0; q < n_; ++q) {
    out[q] = outputs_[q].evaluate(assignment) ? 1 : 0;
  }
  return out;
}

MatrixX PathSum::to_operator() const {
  if (n_ > 12 || m_ > 20) {
    throw Error("path sum too large for operator reconstruction");
  }
  const std::size_t dim = std::size_t{1} << n_;
  MatrixX u = MatrixX::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  const double norm = std::pow(2.0, -static_cast<double>(m_) / 2.0);
  const Complex global = std::polar(1.0, 2.0 * std::numbers::pi * global_ / kGlobalUnits);
  std::vector<std::uint8_t> assignment(num_vars());
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t i = 0; i < n_; ++i) {
      assignment[i] = (x >> i) & 1u;
    }
    for (std::size_t y = 0; y < (std::size_t{1} << m_); ++y) {
      for (std::size_t j = 0; j < m_; ++j) {
        assignment[n_ + j] = (y >> j) & 1u;
      }
      std::size_t row = 0;
      for (std::size_t q = 0; q < n_; ++q) {
        row |= static_cast<std::size_t>(outputs_[q].evaluate(assignment)) << q;
      }
      const double angle = 2.0 * std::numbers::pi * evaluate_phase(assignment) / kPhaseUnits;
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(x)) += norm * global * std::polar(1.0, angle);
    }
  }
  return u;
}

std::string PathSum::to_string() const {
  std::ostringstream os;
  os << "n=" << n_ << " m=" << m_ << " global=" << global_ << "/16\nphi =";
  const auto terms = sorted_terms();
  if (terms.empty()) {
    os << " 0";
  }
  for (const auto &[m, c] : terms) {
    os << " + " << c << "/8*";
    const auto vars = monomial_vars(m);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      os << (i ? "*" : "") << var_name(vars[i], n_);
    }
  }
  os << "\nf = (";
  for (std::size_t q = 0; q < n_; ++q) {
    os << (q ? ", " : "") << outputs_[q].to_string(n_);
  }
  os << ")";
  return os.str();
}

PathSum circuit_to_pathsum(const Circuit &circuit) {
  PathSum ps(circuit.num_qubits());
  for (const Gate &g : circuit) {
    ps.apply(g);
  }
  return ps;
}

}  // namespace qobf
