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

#include <cstdint>
#include <optional>
#include <string>

namespace qobf {

/// A rotation angle in radians that remembers when it is an exact dyadic
/// multiple of pi, i.e. num * pi / 2^k.
///
/// Dyadic angles come from the parser ("pi/4", "-3*pi/8") and from passes
/// that must not lose exactness (T replacement, Z merging). Non-dyadic angles
/// are plain doubles.
class Angle {
 public:
  Angle() = default;

  static Angle pi_fraction(std::int64_t numerator, int log2_denominator);
  static Angle from_radians(double radians);
  /// Like from_radians, but rounds onto the pi/2^max_log2_den lattice when
  /// the value is within `tolerance` of it.
  static Angle snapped(double radians, int max_log2_den = 4, double tolerance = 1e-9);

  double radians() const { return radians_; }
  bool is_dyadic() const { return dyadic_; }
  std::int64_t numerator() const { return numerator_; }
  int log2_denominator() const { return log2_den_; }

  /// The integer j with angle == j * pi / 2^log2_den, if one exists.
  std::optional<std::int64_t> multiple_of_pi_over(int log2_den) const;

  Angle operator-() const;

  /// QASM rendering: "pi/4", "-3*pi/8", "0", or a round-trippable decimal.
  std::string to_qasm() const;

  /// Semantic equality: exact for dyadic pairs, 1e-12 otherwise.
  bool same_value(const Angle &other) const;

 private:
  double radians_ = 0.0;
  bool dyadic_ = true;
  std::int64_t numerator_ = 0;
  int log2_den_ = 0;
};

}  // namespace qobf
