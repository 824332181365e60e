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

#include "qobf/angle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "qobf/error.hpp"

namespace qobf {

Angle Angle::pi_fraction(std::int64_t numerator, int log2_denominator) {
  if (log2_denominator < 0 || log2_denominator > 40) {
    throw Error("dyadic angle denominator out of range");
  }
  while (log2_denominator > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --log2_denominator;
  }
  if (numerator == 0) {
    log2_denominator = 0;
  }
  Angle a;
  a.dyadic_ = true;
  a.numerator_ = numerator;
  a.log2_den_ = log2_denominator;
  a.radians_ = std::numbers::pi * static_cast<double>(numerator) / std::ldexp(1.0, log2_denominator);
  return a;
}

Angle Angle::from_radians(double radians) {
  if (radians == 0.0) {
    return pi_fraction(0, 0);
  }
  Angle a;
  a.dyadic_ = false;
  a.radians_ = radians;
  return a;
}

Angle Angle::snapped(double radians, int max_log2_den, double tolerance) {
  const double units = radians / std::numbers::pi * std::ldexp(1.0, max_log2_den);
  const double nearest = std::round(units);
  if (std::abs(units - nearest) * std::numbers::pi / std::ldexp(1.0, max_log2_den) <= tolerance) {
    return pi_fraction(static_cast<std::int64_t>(nearest), max_log2_den);
  }
  return from_radians(radians);
}

std::optional<std::int64_t> Angle::multiple_of_pi_over(int log2_den) const {
  if (!dyadic_ || log2_den_ > log2_den) {
    return std::nullopt;
  }
  return numerator_ * (std::int64_t{1} << (log2_den - log2_den_));
}

Angle Angle::operator-() const {
  if (dyadic_) {
    return pi_fraction(-numerator_, log2_den_);
  }
  return from_radians(-radians_);
}

std::string Angle::to_qasm() const {
  if (!dyadic_) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", radians_);
    return buf;
  }
  if (numerator_ == 0) {
    return "0";
  }
  std::string out = numerator_ < 0 ? "-" : "";
  const std::int64_t mag = numerator_ < 0 ? -numerator_ : numerator_;
  if (mag != 1) {
    out += std::to_string(mag) + "*";
  }
  out += "pi";
  if (log2_den_ > 0) {
    out += "/" + std::to_string(std::int64_t{1} << log2_den_);
  }
  return out;
}

bool Angle::same_value(const Angle &other) const {
  if (dyadic_ && other.dyadic_) {
    return numerator_ == other.numerator_ && log2_den_ == other.log2_den_;
  }
  return std::abs(radians_ - other.radians_) <= 1e-12;
}

}  // namespace qobf
