// Copyright 2026 The cseries Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cseries/bounds.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "cseries/error.hpp"

namespace cseries {

namespace {

constexpr long double kCeilLimit = 9.2e18L;  // just under 2^63

std::optional<std::uint64_t> ceil_of(long double raw) {
  if (!(raw < kCeilLimit)) return std::nullopt;
  return static_cast<std::uint64_t>(std::ceil(raw));
}

// t^(exponent_scale * (1 + log2 t)), exact when t is a power of two.
BoundValue power_bound(std::uint64_t t, long double exponent_scale) {
  if (t == 0) throw Error(ErrorKind::kInvalidArgument, "bound input must be >= 1");
  BoundValue b;
  b.input = t;
  if (std::has_single_bit(t)) {
    const long double k = std::countr_zero(t);
    const long double e = exponent_scale * k * (k + 1);  // integer for both scales
    b.log2_raw = static_cast<double>(e);
    b.raw = std::exp2(e);
    if (e < 63) b.ceil = std::uint64_t{1} << static_cast<unsigned>(e);
    return b;
  }
  const long double l = std::log2(static_cast<long double>(t));
  const long double e = exponent_scale * (1 + l);
  b.log2_raw = static_cast<double>(e * l);
  b.raw = std::pow(static_cast<long double>(t), e);
  b.ceil = ceil_of(b.raw);
  return b;
}

}  // namespace

bool BoundValue::admits(std::uint64_t value) const {
  if (ceil) return value <= *ceil;
  if (value == 0) return true;
  return std::log2(static_cast<long double>(value)) <= log2_raw;
}

BoundValue bound_g(std::uint64_t t) { return power_bound(t, 1.0L); }

BoundValue bound_kos(std::uint64_t t) { return power_bound(t, 0.5L); }

BoundValue bound_f(std::uint64_t t) {
  if (t == 0) throw Error(ErrorKind::kInvalidArgument, "bound input must be >= 1");
  if (t > kBoundFCap)
    throw Error(ErrorKind::kOverflow,
                "f(" + std::to_string(t) + ") is beyond the evaluation cap " +
                    std::to_string(kBoundFCap));

  // Exact integer while it fits, log2 afterwards. Once in the log domain
  // the ceilings change the value by less than one part in 2^64 and are
  // dropped, which only lowers the bound.
  std::optional<std::uint64_t> exact = 1;
  long double lg = 0;
  auto apply_g = [&]() {
    if (exact) {
      BoundValue gv = bound_g(*exact);
      exact = gv.ceil;
      lg = exact ? std::log2(static_cast<long double>(*exact)) : gv.log2_raw;
      return;
    }
    lg = (1 + lg) * lg;
  };
  for (std::uint64_t s = 1; s < t; ++s) {
    apply_g();
    apply_g();
    const std::uint64_t mult = s + 1;
    if (exact && *exact <= static_cast<std::uint64_t>(kCeilLimit) / mult) {
      *exact *= mult;
      lg = std::log2(static_cast<long double>(*exact));
    } else {
      exact.reset();
      lg += std::log2(static_cast<long double>(mult));
    }
  }
  if (!std::isfinite(static_cast<double>(lg)))
    throw Error(ErrorKind::kOverflow, "log2 f(" + std::to_string(t) + ") overflows");

  BoundValue b;
  b.input = t;
  b.log2_raw = static_cast<double>(lg);
  if (exact) {
    b.raw = static_cast<long double>(*exact);
    b.ceil = exact;
  } else {
    b.raw = std::exp2(lg);
  }
  return b;
}

}  // namespace cseries
