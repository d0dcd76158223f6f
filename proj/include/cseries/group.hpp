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

// Finite groups as Cayley tables, plus the subgroup, quotient and
// commutator algebra built on top of them.
//
// Elements of a group of order n are the indices 0..n-1. All types here are
// immutable once constructed and may be shared freely between threads.

#ifndef CSERIES_GROUP_HPP_
#define CSERIES_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cseries {

using Elem = std::int32_t;

struct Limits {
  // Largest table any operation will build.
  std::size_t table_cap = 2048;
  // Associativity is checked on all n^3 triples up to this order, sampled above.
  std::size_t exhaustive_assoc_cap = 512;
  // Largest group whose automorphism group will be searched.
  std::size_t aut_group_cap = 128;
  // Largest automorphism group that will be materialized member by member.
  std::size_t aut_member_cap = 50000;
  // Largest group whose subgroup lattice (normal or full) will be enumerated.
  std::size_t enumeration_cap = 128;
};

const Limits& default_limits();

class Group {
 public:
  // Validates `raw` as a group table and locates identity and inverses.
  // Throws Error{kNotClosed, kNotAssociative, kNoIdentity, kNoInverse,
  // kCapExceeded, kInvalidArgument}.
  static Group from_table(const std::vector<std::vector<int>>& raw,
                          std::string name,
                          const Limits& limits = default_limits());

  // Same validation on a row-major flat table of size n*n.
  static Group from_flat(std::size_t n, std::vector<Elem> flat,
                         std::string name,
                         const Limits& limits = default_limits());

  static Group trivial(std::string name = "C1");

  std::size_t order() const { return order_; }
  Elem identity() const { return identity_; }
  const std::string& name() const { return name_; }

  Elem mul(Elem x, Elem y) const {
    return table_[static_cast<std::size_t>(x) * order_ +
                  static_cast<std::size_t>(y)];
  }
  Elem inv(Elem x) const { return inverse_[static_cast<std::size_t>(x)]; }
  std::span<const Elem> row(Elem x) const {
    return {table_.data() + static_cast<std::size_t>(x) * order_, order_};
  }

  // x^k for k >= 0.
  Elem pow(Elem x, std::size_t k) const;
  std::size_t element_order(Elem x) const;
  // [x, y] = x^-1 y^-1 x y.
  Elem commutator(Elem x, Elem y) const {
    return mul(mul(inv(x), inv(y)), mul(x, y));
  }
  bool is_abelian() const;

  std::vector<std::vector<int>> to_rows() const;
  const std::vector<Elem>& flat_table() const { return table_; }

  Group renamed(std::string name) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  Group() = default;

  std::size_t order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::string name_;
};

// A subset of a parent group's elements that is closed under the group
// operations. Only the algebra in this library hands these out; `checked`
// certifies an arbitrary set.
class Subgroup {
 public:
  Subgroup() = default;

  // Throws Error{kNotClosed} if `elems` is not a subgroup of `parent`.
  static Subgroup checked(const Group& parent, std::vector<Elem> elems);
  static Subgroup trivial(const Group& parent);
  static Subgroup whole(const Group& parent);

  std::size_t size() const { return elems_.size(); }
  std::size_t parent_order() const { return mask_.size(); }
  std::span<const Elem> elements() const { return elems_; }
  bool contains(Elem x) const { return mask_[static_cast<std::size_t>(x)]; }
  bool is_subset_of(const Subgroup& other) const;
  bool is_trivial() const { return elems_.size() == 1; }
  bool is_whole() const { return elems_.size() == mask_.size(); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elems_ == b.elems_;
  }
  // Smaller order first, then lexicographic on the sorted element indices.
  friend bool witness_less(const Subgroup& a, const Subgroup& b);

  // Internal: `elems` must be a sorted subgroup of a group of order n.
  static Subgroup from_sorted_unchecked(std::size_t n, std::vector<Elem> elems);

 private:
  std::vector<Elem> elems_;
  std::vector<bool> mask_;
};

bool witness_less(const Subgroup& a, const Subgroup& b);

// A multiplication-preserving map between two groups.
class GroupMap {
 public:
  GroupMap() = default;
  // Throws Error{kInvalidArgument} if `image` is not a homomorphism.
  static GroupMap checked(const Group& source, const Group& target,
                          std::vector<Elem> image);
  static GroupMap unchecked(std::size_t target_order, Elem target_identity,
                            std::vector<Elem> image);

  Elem operator()(Elem x) const { return image_[static_cast<std::size_t>(x)]; }
  std::span<const Elem> images() const { return image_; }
  std::size_t source_order() const { return image_.size(); }
  std::size_t target_order() const { return target_order_; }

  std::vector<Elem> kernel() const;
  bool is_bijective() const;
  bool preserves(const Group& source, const Group& target) const;

 private:
  std::vector<Elem> image_;
  std::size_t target_order_ = 0;
  Elem target_identity_ = 0;
};

// ---------------------------------------------------------------------------
// Subgroup algebra.

Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens);
Subgroup centralizer(const Group& g, std::span<const Elem> s);
Subgroup center(const Group& g);
// <[h, k] : h in H, k in K>.
Subgroup commutator_subgroup(const Group& g, const Subgroup& h,
                             const Subgroup& k);
bool is_normal(const Group& g, const Subgroup& h);
Subgroup intersection(const Group& g, const Subgroup& a, const Subgroup& b);
// <A, B>; equals the set product AB when one of them is normal.
Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b);
// Smallest normal subgroup containing `s`.
Subgroup normal_closure(const Group& g, std::span<const Elem> s);

// Full preimage of a subgroup of the target under a homomorphism.
Subgroup preimage(const Group& source, const GroupMap& map,
                  const Subgroup& target_sub);
// Image of a subgroup of the source.
Subgroup image(const Group& target, const GroupMap& map, const Subgroup& sub);

struct Quotient {
  Group group;
  GroupMap projection;
  // Minimal element of each coset, in coset order.
  std::vector<Elem> representatives;
};

// Cosets are numbered by their minimal element index. Throws kNotNormal.
Quotient quotient(const Group& g, const Subgroup& n,
                  const Limits& limits = default_limits());

struct SubgroupAsGroup {
  Group group;
  // group element i corresponds to parent element embedding(i).
  GroupMap embedding;
};

// Re-indexes a subgroup as a group in its own right, preserving the order
// of the parent's element indices.
SubgroupAsGroup as_group(const Group& g, const Subgroup& h, std::string name);

// Conjugacy class of each element: classes[i] lists one class, sorted, in
// order of minimal member.
std::vector<std::vector<Elem>> conjugacy_classes(const Group& g);

// All normal subgroups, as unions of conjugacy classes closed under
// multiplication, sorted by (order, elements). Throws kCapExceeded above
// limits.enumeration_cap.
std::vector<Subgroup> normal_subgroups(const Group& g,
                                       const Limits& limits = default_limits());
// Every subgroup, sorted by (order, elements).
std::vector<Subgroup> all_subgroups(const Group& g,
                                    const Limits& limits = default_limits());

// Standard small constructions (used by the catalog and tests).
Group cyclic_group(std::size_t n);
Group dihedral_group(std::size_t order);     // order 2n, n >= 1
Group dicyclic_group(std::size_t order);     // generalized quaternion, order 4m
Group symmetric_group(std::size_t degree);
Group elementary_abelian_group(std::size_t p, std::size_t rank);

// Group generated by permutations of {0..degree-1}; `perms[i][x]` is the
// image of x. Elements are numbered in breadth-first discovery order from the
// identity; the product x*y applies x first, then y.
Group permutation_group(std::size_t degree,
                        const std::vector<std::vector<int>>& perms,
                        std::string name,
                        const Limits& limits = default_limits());

}  // namespace cseries

#endif  // CSERIES_GROUP_HPP_
