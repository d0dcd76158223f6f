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

// Automorphisms, automorphism subgroups, and the action machinery used by
// the A-center series.
//
// Automorphisms compose as functions: (a * b)(x) = a(b(x)). With this
// convention a group acting from the left is a homomorphism into Aut(G),
// which is what semidirect_product assumes.

#ifndef CSERIES_MORPHISMS_HPP_
#define CSERIES_MORPHISMS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "cseries/group.hpp"

namespace cseries {

class Automorphism {
 public:
  Automorphism() = default;
  // Throws Error{kNotAutomorphism} if `image` is not a bijective
  // homomorphism of g.
  static Automorphism checked(const Group& g, std::vector<Elem> image);
  static Automorphism identity(std::size_t n);
  static Automorphism unchecked(std::vector<Elem> image) {
    Automorphism a;
    a.image_ = std::move(image);
    return a;
  }

  Elem operator()(Elem x) const { return image_[static_cast<std::size_t>(x)]; }
  std::span<const Elem> images() const { return image_; }
  const std::vector<Elem>& image_vector() const { return image_; }
  std::size_t degree() const { return image_.size(); }
  bool is_identity() const;

  // (*this)(other(x)).
  Automorphism after(const Automorphism& other) const;
  Automorphism inverse() const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) {
    return a.image_ == b.image_;
  }
  friend bool operator<(const Automorphism& a, const Automorphism& b) {
    return a.image_ < b.image_;
  }

 private:
  std::vector<Elem> image_;
};

// Conjugation x -> g x g^-1.
Automorphism conjugation(const Group& g, Elem by);

struct ImageHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept;
};

// A subgroup of Aut(G) stored member by member. members()[0] is always the
// identity; members are in breadth-first closure order from the generators.
class AutSubgroup {
 public:
  AutSubgroup() = default;

  // Closure of `gens`; each generator is validated against g. Throws
  // kNotAutomorphism or kCapExceeded (more than limits.aut_member_cap).
  static AutSubgroup generate(const Group& g, std::vector<Automorphism> gens,
                              std::string name,
                              const Limits& limits = default_limits());
  static AutSubgroup trivial(const Group& g, std::string name = "1");

  // `members` must already be a closed set. Generators are picked greedily
  // in member order.
  static AutSubgroup from_closed_set(std::size_t degree,
                                     std::vector<Automorphism> members,
                                     std::string name);

  std::size_t order() const { return members_.size(); }
  std::size_t degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Automorphism>& members() const { return members_; }
  const Automorphism& member(std::size_t i) const { return members_[i]; }
  const std::vector<std::size_t>& generator_indices() const { return gens_; }
  std::vector<Automorphism> generators() const;

  std::optional<std::size_t> index_of(const Automorphism& a) const;
  bool contains(const Automorphism& a) const { return index_of(a).has_value(); }

  AutSubgroup renamed(std::string name) const;

 private:
  std::size_t degree_ = 0;
  std::string name_;
  std::vector<Automorphism> members_;
  std::vector<std::size_t> gens_;
  std::unordered_map<std::vector<Elem>, std::size_t, ImageHash> index_;

  void rebuild_index();
};

// Cayley table of A under composition, members in A's order. Throws
// kCapExceeded above limits.table_cap.
Group aut_table(const AutSubgroup& a, const Limits& limits = default_limits());

// |Aut(G)| by the orbit-product count over a greedy generating set, without
// materializing the group. Throws kCapExceeded above limits.aut_group_cap.
std::uint64_t automorphism_group_order(const Group& g,
                                       const Limits& limits = default_limits());

// The full automorphism group by backtracking over generator images.
// Throws kCapExceeded if |G| > aut_group_cap or |Aut(G)| > aut_member_cap.
AutSubgroup automorphism_group(const Group& g,
                               const Limits& limits = default_limits());

// Automorphisms found by randomized depth-first search; deterministic in
// `seed`. Not uniformly distributed.
std::vector<Automorphism> sample_automorphisms(
    const Group& g, std::size_t count, std::uint64_t seed,
    const Limits& limits = default_limits());

// Greedy generating set: repeatedly adds the element whose closure gain is
// largest (smallest index on ties).
std::vector<Elem> greedy_generating_set(const Group& g);

struct InnerAutomorphisms {
  AutSubgroup inn;
  Group table;
  // g -> index of conjugation by g in inn.
  GroupMap bar;
};

InnerAutomorphisms inner_automorphisms(const Group& g,
                                       const Limits& limits = default_limits());

// True iff c^-1 a c lies in A for every a in A and every inner c.
bool is_normalized_by_inner(const Group& g, const AutSubgroup& a);
// True iff every inner automorphism of g is a member of A.
bool contains_inner(const Group& g, const AutSubgroup& a);

bool is_invariant(const AutSubgroup& a, const Subgroup& h);

// Smallest A-invariant subgroup containing s.
Subgroup a_invariant_closure(const Group& g, const AutSubgroup& a,
                             std::span<const Elem> s);

// C_G(A).
Subgroup fixed_points(const Group& g, const AutSubgroup& a);

struct InducedAction {
  Quotient quotient;
  AutSubgroup action;
};

// Action of A on G/N. Duplicate induced maps are merged. Throws
// kNotNormal or kNotInvariant.
InducedAction restrict_action_to_quotient(
    const Group& g, const Subgroup& n, const AutSubgroup& a,
    const Limits& limits = default_limits());

// Restriction of A to an A-invariant subgroup H, re-indexed as in as_group.
AutSubgroup restrict_action_to_subgroup(const Group& g,
                                        const SubgroupAsGroup& h,
                                        const AutSubgroup& a,
                                        const Limits& limits = default_limits());

}  // namespace cseries

#endif  // CSERIES_MORPHISMS_HPP_
