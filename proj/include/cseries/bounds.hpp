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

// Bounding functions for finite-by-hypercentral groups:
//
//   g(t)   = t^(1 + log2 t)
//   kos(t) = t^((1 + log2 t) / 2)
//   f(1)   = 1,  f(t + 1) = (t + 1) * g(g(f(t)))
//
// The bounded quantities are cardinalities, so comparisons use the integer
// ceiling, and f applies the ceiling after every evaluation of g. Values
// grow too fast for any fixed-width type, so each BoundValue also carries
// log2 of the real value, which stays finite for all t accepted here.

#ifndef CSERIES_BOUNDS_HPP_
#define CSERIES_BOUNDS_HPP_

#include <cstdint>
#include <optional>

namespace cseries {

struct BoundValue {
  std::uint64_t input = 0;
  // The real value; +inf once it no longer fits in a long double.
  long double raw = 0;
  double log2_raw = 0;
  // ceil(raw), when it fits in 63 bits.
  std::optional<std::uint64_t> ceil;

  // value <= bound, decided exactly when the ceiling is known and through
  // log2 otherwise.
  bool admits(std::uint64_t value) const;
};

// Both throw kInvalidArgument for t == 0.
BoundValue bound_g(std::uint64_t t);
BoundValue bound_kos(std::uint64_t t);

// Largest t for which log2 f(t) is finite in double precision.
inline constexpr std::uint64_t kBoundFCap = 7;

// Throws kInvalidArgument for t == 0 and kOverflow for t > kBoundFCap.
BoundValue bound_f(std::uint64_t t);

}  // namespace cseries

#endif  // CSERIES_BOUNDS_HPP_
