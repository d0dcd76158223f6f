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

#ifndef CSERIES_PRODUCTS_HPP_
#define CSERIES_PRODUCTS_HPP_

#include <string>

#include "cseries/group.hpp"
#include "cseries/morphisms.hpp"

namespace cseries {

// The pair (g, h) has index g * |H| + h. Throws kCapExceeded.
Group direct_product(const Group& g, const Group& h,
                     const Limits& limits = default_limits());

struct SemidirectProduct {
  Group group;
  // n -> (n, 1)
  GroupMap embed_normal;
  // i -> (e, a_i), indexed by A's member order (the domain is aut_table(A)).
  GroupMap embed_acting;
};

// N x| A with (n1, a1)(n2, a2) = (n1 a1(n2), a1 a2). The pair (n, a_i) has
// index n * |A| + i. Throws kCapExceeded.
SemidirectProduct semidirect_product(const Group& n, const AutSubgroup& a,
                                     std::string name = "",
                                     const Limits& limits = default_limits());

}  // namespace cseries

#endif  // CSERIES_PRODUCTS_HPP_
