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

// Upper central series and A-center series.
//
// Z_0(G, A) = 1 and Z_{i+1}(G, A) / Z_i(G, A) = C_{G / Z_i(G, A)}(A). On a
// finite group the tower stabilizes after finitely many strict steps, so the
// series is stored as the list of distinct terms, each as a subgroup of G
// itself rather than of a quotient.

#ifndef CSERIES_SERIES_HPP_
#define CSERIES_SERIES_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cseries/group.hpp"
#include "cseries/morphisms.hpp"

namespace cseries {

struct AscendingSeries {
  // terms[0] is trivial; terms strictly increase; terms.back() is the
  // A-hypercenter.
  std::vector<Subgroup> terms;
  // True iff terms.back() is the whole group.
  bool reaches_group = false;

  // Number of strict steps.
  std::size_t length() const { return terms.size() - 1; }
  // Z_k for any k >= 0; past stabilization this is the last term.
  const Subgroup& term(std::size_t k) const {
    return terms[k < terms.size() ? k : terms.size() - 1];
  }
  const Subgroup& last() const { return terms.back(); }
};

// Throws kNotNormal if a term fails to be normal in G, which can only happen
// when A is not normalized by Inn(G).
AscendingSeries a_center_series(const Group& g, const AutSubgroup& a);

// Computed directly from commutators: Z_{i+1} = {x : [x, y] in Z_i for all y}.
AscendingSeries upper_central_series(const Group& g);

Subgroup hypercenter(const Group& g, const AutSubgroup& a);
Subgroup hypercenter(const Group& g);

// k with Z_k(G, A) = G, or nullopt if G is not A-hypercentral.
std::optional<std::size_t> hypercentral_type(const Group& g, const AutSubgroup& a);

// Upper central series length when the group is nilpotent.
std::optional<std::size_t> nilpotency_class(const Group& g);

// True iff alpha(m) m^-1 lies in N for every consecutive pair N <= M of the
// chain and every alpha in A. Throws kNotAChain unless each term contains the
// previous one, kNotInvariant unless each term is A-invariant.
bool stabilizes_series(const Group& g, const AutSubgroup& a,
                       const std::vector<Subgroup>& chain);

}  // namespace cseries

#endif  // CSERIES_SERIES_HPP_
