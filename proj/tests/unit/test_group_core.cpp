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

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "cseries/error.hpp"
#include "cseries/group.hpp"
#include "cseries/morphisms.hpp"
#include "cseries/products.hpp"

namespace cseries {
namespace {

using Perm = std::array<int, 3>;

// S3 from explicit permutation composition (apply p, then q).
Group s3_by_hand() {
  std::vector<Perm> perms;
  Perm p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<int>> rows(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      Perm r;
      for (int x = 0; x < 3; ++x) r[x] = perms[j][perms[i][x]];
      rows[i][j] = static_cast<int>(std::find(perms.begin(), perms.end(), r) - perms.begin());
    }
  }
  return Group::from_table(rows, "S3");
}

bool is_subgroup_set(const Group& g, const std::vector<Elem>& s) {
  std::vector<bool> in(g.order(), false);
  for (Elem x : s) in[x] = true;
  if (!in[g.identity()]) return false;
  for (Elem x : s)
    for (Elem y : s)
      if (!in[g.mul(x, g.inv(y))]) return false;
  return true;
}

bool is_normal_set(const Group& g, const std::vector<Elem>& s) {
  std::vector<bool> in(g.order(), false);
  for (Elem x : s) in[x] = true;
  for (Elem x : s)
    for (std::size_t c = 0; c < g.order(); ++c) {
      const Elem cc = static_cast<Elem>(c);
      if (!in[g.mul(g.mul(g.inv(cc), x), cc)]) return false;
    }
  return true;
}

// Counts of (subgroups, normal subgroups) by scanning every subset.
std::pair<std::size_t, std::size_t> brute_subgroup_counts(const Group& g) {
  std::size_t subs = 0, normals = 0;
  const std::size_t n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Elem> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(static_cast<Elem>(i));
    if (s.empty() || !is_subgroup_set(g, s)) continue;
    ++subs;
    if (is_normal_set(g, s)) ++normals;
  }
  return {subs, normals};
}

std::vector<Group> small_groups() {
  return {Group::trivial(),  cyclic_group(2),    cyclic_group(6),   cyclic_group(8),
          dihedral_group(6), dihedral_group(8),  dicyclic_group(8), symmetric_group(3),
          elementary_abelian_group(2, 3), direct_product(symmetric_group(3), cyclic_group(2)),
          dihedral_group(16), symmetric_group(4), elementary_abelian_group(3, 2)};
}

TEST(GroupTable, TrivialTable) {
  Group g = Group::from_table({{0}}, "C1");
  EXPECT_EQ(g.order(), 1u);
  EXPECT_EQ(g.identity(), 0);
}

TEST(GroupTable, S3FromPermutations) {
  Group g = s3_by_hand();
  EXPECT_EQ(g.order(), 6u);
  EXPECT_EQ(g.identity(), 0);
  EXPECT_FALSE(g.is_abelian());
}

TEST(GroupTable, IdentityAnywhere) {
  // Z/3 with the identity stored at index 2.
  Group g = Group::from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, "C3'");
  EXPECT_EQ(g.identity(), 2);
  EXPECT_EQ(g.inv(0), 1);
}

TEST(GroupTable, RejectsMissingInverse) {
  try {
    Group::from_table({{0, 1}, {1, 1}}, "bad");
    FAIL();
  } catch (const Error& e) {
    EXPECT_TRUE(e.kind() == ErrorKind::kNoInverse || e.kind() == ErrorKind::kNoIdentity);
  }
}

TEST(GroupTable, RejectsOutOfRange) {
  try {
    Group::from_table({{0, 2}, {1, 0}}, "bad");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotClosed);
  }
}

TEST(GroupTable, RejectsNonAssociative) {
  // Quasigroup x*y = -x-y mod 3: closed, not associative.
  std::vector<std::vector<int>> rows(3, std::vector<int>(3));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) rows[x][y] = (6 - x - y) % 3;
  try {
    Group::from_table(rows, "bad");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotAssociative);
    EXPECT_NE(std::string(e.what()).find("("), std::string::npos);
  }
}

TEST(GroupTable, ConstructionsHaveExpectedOrders) {
  EXPECT_EQ(cyclic_group(12).order(), 12u);
  EXPECT_EQ(dihedral_group(10).order(), 10u);
  EXPECT_EQ(dicyclic_group(16).order(), 16u);
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_EQ(elementary_abelian_group(3, 3).order(), 27u);
  EXPECT_EQ(permutation_group(3, {{1, 2, 0}}, "c").order(), 3u);
}

TEST(Subgroups, Generated) {
  Group s3 = symmetric_group(3);
  EXPECT_TRUE(generated_subgroup(s3, std::vector<Elem>{}).is_trivial());
  for (std::size_t x = 0; x < s3.order(); ++x)
    if (s3.element_order(static_cast<Elem>(x)) == 3)
      EXPECT_EQ(generated_subgroup(s3, std::vector<Elem>{static_cast<Elem>(x)}).size(), 3u);
  Group q8 = dicyclic_group(8);
  std::vector<Elem> fours;
  for (std::size_t x = 0; x < 8; ++x)
    if (q8.element_order(static_cast<Elem>(x)) == 4) fours.push_back(static_cast<Elem>(x));
  // i and j: two order-4 elements that are not mutual inverses.
  Elem i = fours[0], j = -1;
  for (Elem y : fours)
    if (y != i && y != q8.inv(i)) j = y;
  EXPECT_EQ(generated_subgroup(q8, std::vector<Elem>{i, j}).size(), 8u);
}

TEST(Subgroups, Centers) {
  EXPECT_EQ(center(symmetric_group(3)).size(), 1u);
  EXPECT_EQ(center(dicyclic_group(8)).size(), 2u);
  EXPECT_TRUE(center(cyclic_group(10)).is_whole());
  EXPECT_EQ(center(direct_product(symmetric_group(3), cyclic_group(2))).size(), 2u);
}

TEST(Subgroups, CommutatorSubgroups) {
  auto derived = [](const Group& g) {
    return commutator_subgroup(g, Subgroup::whole(g), Subgroup::whole(g));
  };
  EXPECT_EQ(derived(symmetric_group(3)).size(), 3u);
  EXPECT_EQ(derived(dicyclic_group(8)).size(), 2u);
  EXPECT_TRUE(derived(cyclic_group(9)).is_trivial());
  for (const Group& g : small_groups()) EXPECT_EQ(derived(g).is_trivial(), g.is_abelian());
}

TEST(Subgroups, Normality) {
  Group s3 = symmetric_group(3);
  for (std::size_t x = 0; x < s3.order(); ++x) {
    const Elem e = static_cast<Elem>(x);
    const std::size_t o = s3.element_order(e);
    if (o == 1) continue;
    const Subgroup h = generated_subgroup(s3, std::vector<Elem>{e});
    EXPECT_EQ(is_normal(s3, h), o == 3);
  }
  for (const Group& g : small_groups()) EXPECT_TRUE(is_normal(g, center(g)));
}

TEST(Subgroups, EnumerationMatchesSubsetScan) {
  for (const Group& g : small_groups()) {
    if (g.order() > 16) continue;
    const auto [subs, normals] = brute_subgroup_counts(g);
    EXPECT_EQ(all_subgroups(g).size(), subs) << g.name();
    EXPECT_EQ(normal_subgroups(g).size(), normals) << g.name();
  }
}

TEST(Subgroups, EnumerationIsSortedAndNormal) {
  for (const Group& g : small_groups()) {
    const auto ns = normal_subgroups(g);
    ASSERT_FALSE(ns.empty());
    EXPECT_TRUE(ns.front().is_trivial());
    EXPECT_TRUE(ns.back().is_whole());
    for (std::size_t i = 0; i + 1 < ns.size(); ++i) EXPECT_TRUE(witness_less(ns[i], ns[i + 1]));
    for (const auto& n : ns) {
      EXPECT_TRUE(is_normal(g, n));
      EXPECT_EQ(g.order() % n.size(), 0u);
    }
  }
}

TEST(Subgroups, ConjugacyClassCounts) {
  EXPECT_EQ(conjugacy_classes(symmetric_group(3)).size(), 3u);
  EXPECT_EQ(conjugacy_classes(symmetric_group(4)).size(), 5u);
  EXPECT_EQ(conjugacy_classes(dihedral_group(8)).size(), 5u);
  EXPECT_EQ(conjugacy_classes(cyclic_group(7)).size(), 7u);
}

TEST(Quotients, ProjectionKernelAndOrder) {
  for (const Group& g : small_groups()) {
    for (const Subgroup& n : normal_subgroups(g)) {
      const Quotient q = quotient(g, n);
      EXPECT_EQ(q.group.order() * n.size(), g.order());
      EXPECT_TRUE(q.projection.preserves(g, q.group));
      EXPECT_EQ(q.projection.kernel(),
                std::vector<Elem>(n.elements().begin(), n.elements().end()));
    }
  }
}

TEST(Quotients, Degenerate) {
  Group d8 = dihedral_group(8);
  EXPECT_EQ(quotient(d8, Subgroup::whole(d8)).group.order(), 1u);
  EXPECT_TRUE(quotient(d8, Subgroup::trivial(d8)).projection.is_bijective());
}

TEST(Quotients, Q8ModCenterIsKlein) {
  Group q8 = dicyclic_group(8);
  const Group k = quotient(q8, center(q8)).group;
  ASSERT_EQ(k.order(), 4u);
  for (std::size_t x = 0; x < 4; ++x)
    if (static_cast<Elem>(x) != k.identity()) EXPECT_EQ(k.element_order(static_cast<Elem>(x)), 2u);
}

TEST(Quotients, CosetsOrderedByMinimalElement) {
  Group s3 = symmetric_group(3);
  const Subgroup a3 = commutator_subgroup(s3, Subgroup::whole(s3), Subgroup::whole(s3));
  const Quotient q = quotient(s3, a3);
  for (std::size_t i = 0; i + 1 < q.representatives.size(); ++i)
    EXPECT_LT(q.representatives[i], q.representatives[i + 1]);
}

TEST(Quotients, NotNormalThrows) {
  Group s3 = symmetric_group(3);
  for (std::size_t x = 0; x < 6; ++x) {
    if (s3.element_order(static_cast<Elem>(x)) != 2) continue;
    const Subgroup h = generated_subgroup(s3, std::vector<Elem>{static_cast<Elem>(x)});
    try {
      quotient(s3, h);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kNotNormal);
    }
    break;
  }
}

TEST(Products, Direct) {
  const Group c3 = cyclic_group(3);
  const Group e9 = direct_product(c3, c3);
  EXPECT_EQ(e9.order(), 9u);
  EXPECT_TRUE(e9.is_abelian());
  for (std::size_t x = 1; x < 9; ++x) EXPECT_EQ(e9.element_order(static_cast<Elem>(x)), 3u);
  const Group s = direct_product(symmetric_group(3), Group::trivial());
  // pair (g, e) has index g, so the product is the same table
  EXPECT_EQ(s.flat_table(), symmetric_group(3).flat_table());
}

TEST(Products, DirectCap) {
  Limits lim;
  lim.table_cap = 16;
  try {
    direct_product(cyclic_group(5), cyclic_group(5), lim);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
}

TEST(Products, SemidirectHolomorphOfC3) {
  const Group c3 = cyclic_group(3);
  const SemidirectProduct s = semidirect_product(c3, automorphism_group(c3));
  EXPECT_EQ(s.group.order(), 6u);
  EXPECT_TRUE(center(s.group).is_trivial());
  EXPECT_TRUE(s.embed_normal.preserves(c3, s.group));
}

TEST(Products, SemidirectTrivialActionIsRelabeling) {
  const Group d8 = dihedral_group(8);
  const SemidirectProduct s = semidirect_product(d8, AutSubgroup::trivial(d8));
  EXPECT_EQ(s.group.order(), 8u);
  EXPECT_TRUE(s.embed_normal.preserves(d8, s.group));
  EXPECT_TRUE(s.embed_normal.is_bijective());
}

TEST(Products, SemidirectSwap) {
  const Group e9 = elementary_abelian_group(3, 2);
  // index c0 + 3 c1; swap the coordinates
  std::vector<Elem> img(9);
  for (int x = 0; x < 9; ++x) img[x] = static_cast<Elem>((x % 3) * 3 + x / 3);
  const AutSubgroup a = AutSubgroup::generate(e9, {Automorphism::checked(e9, img)}, "swap");
  const SemidirectProduct s = semidirect_product(e9, a);
  EXPECT_EQ(s.group.order(), 18u);
  EXPECT_TRUE(s.embed_acting.preserves(aut_table(a), s.group));
  // left action: (1,a)(n,1)(1,a)^-1 = (a(n),1)
  const Elem act = s.embed_acting(1);
  for (int n = 0; n < 9; ++n) {
    const Elem sn = s.embed_normal(n);
    EXPECT_EQ(s.group.mul(s.group.mul(act, sn), s.group.inv(act)), s.embed_normal(img[n]));
  }
}

}  // namespace
}  // namespace cseries
