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

#include "cseries/series.hpp"

#include "cseries/error.hpp"

namespace cseries {

namespace {

template <typename InNext>
AscendingSeries build_tower(const Group& g, InNext in_next) {
  AscendingSeries s;
  s.terms.push_back(Subgroup::trivial(g));
  while (true) {
    const Subgroup& cur = s.terms.back();
    std::vector<Elem> next;
    for (std::size_t x = 0; x < g.order(); ++x)
      if (in_next(cur, static_cast<Elem>(x))) next.push_back(static_cast<Elem>(x));
    if (next.size() == cur.size()) break;
    s.terms.push_back(Subgroup::from_sorted_unchecked(g.order(), std::move(next)));
  }
  s.reaches_group = s.terms.back().is_whole();
  return s;
}

}  // namespace

AscendingSeries a_center_series(const Group& g, const AutSubgroup& a) {
  // gZ is fixed by the induced action iff g^-1 alpha(g) lies in Z; checking
  // the generators of A suffices.
  AscendingSeries s = build_tower(g, [&](const Subgroup& cur, Elem x) {
    const Elem xi = g.inv(x);
    for (std::size_t gi : a.generator_indices())
      if (!cur.contains(g.mul(xi, a.member(gi)(x)))) return false;
    return true;
  });
  for (const auto& term : s.terms) {
    if (!is_normal(g, term))
      throw Error(ErrorKind::kNotNormal,
                  "A-center term of order " + std::to_string(term.size()) +
                      " is not normal in " + g.name());
  }
  return s;
}

AscendingSeries upper_central_series(const Group& g) {
  const std::vector<Elem> gens = greedy_generating_set(g);
  return build_tower(g, [&](const Subgroup& cur, Elem x) {
    for (Elem y : gens)
      if (!cur.contains(g.commutator(x, y))) return false;
    return true;
  });
}

Subgroup hypercenter(const Group& g, const AutSubgroup& a) {
  return a_center_series(g, a).last();
}

Subgroup hypercenter(const Group& g) { return upper_central_series(g).last(); }

std::optional<std::size_t> hypercentral_type(const Group& g, const AutSubgroup& a) {
  AscendingSeries s = a_center_series(g, a);
  if (!s.reaches_group) return std::nullopt;
  return s.length();
}

std::optional<std::size_t> nilpotency_class(const Group& g) {
  AscendingSeries s = upper_central_series(g);
  if (!s.reaches_group) return std::nullopt;
  return s.length();
}

bool stabilizes_series(const Group& g, const AutSubgroup& a,
                       const std::vector<Subgroup>& chain) {
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].parent_order() != g.order())
      throw Error(ErrorKind::kInvalidArgument, "chain term of a different group");
    if (i > 0 && !chain[i - 1].is_subset_of(chain[i]))
      throw Error(ErrorKind::kNotAChain,
                  "term " + std::to_string(i - 1) + " is not contained in term " +
                      std::to_string(i));
    if (!is_invariant(a, chain[i]))
      throw Error(ErrorKind::kNotInvariant,
                  "term " + std::to_string(i) + " is not invariant under " +
                      a.name());
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Subgroup& lower = chain[i - 1];
    for (Elem m : chain[i].elements()) {
      const Elem mi = g.inv(m);
      for (std::size_t gi : a.generator_indices())
        if (!lower.contains(g.mul(a.member(gi)(m), mi))) return false;
    }
  }
  return true;
}

}  // namespace cseries
