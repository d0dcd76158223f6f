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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "cseries/bounds.hpp"
#include "cseries/checks.hpp"
#include "cseries/error.hpp"
#include "cseries/products.hpp"
#include "cseries/series.hpp"
#include "cseries/sweeps.hpp"

namespace cseries {
namespace {

Subgroup derived(const Group& g) {
  return commutator_subgroup(g, Subgroup::whole(g), Subgroup::whole(g));
}

// The S3 factor of S3 x C2 (pairs (s, e) have index 2s).
Subgroup s3_factor(const Group& g) {
  std::vector<Elem> e;
  for (Elem s = 0; s < 6; ++s) e.push_back(static_cast<Elem>(2 * s));
  return Subgroup::checked(g, e);
}
Subgroup c2_factor(const Group& g) { return Subgroup::checked(g, {0, 1}); }

const Group& s3xc2() {
  static const Group g = direct_product(symmetric_group(3), cyclic_group(2));
  return g;
}

// ---------------------------------------------------------------------------
// Bounds

TEST(Bounds, TabulatedValues) {
  EXPECT_EQ(bound_g(1).ceil, 1u);
  EXPECT_EQ(bound_g(2).ceil, 4u);
  EXPECT_EQ(bound_g(4).ceil, 64u);
  EXPECT_EQ(bound_kos(1).ceil, 1u);
  EXPECT_EQ(bound_kos(2).ceil, 2u);
  EXPECT_EQ(bound_kos(4).ceil, 8u);
  EXPECT_EQ(bound_f(1).ceil, 1u);
  EXPECT_EQ(bound_f(2).ceil, 2u);
  EXPECT_EQ(bound_f(3).ceil, 192u);
}

TEST(Bounds, GOfThreeAgainstClosedForm) {
  // 3^(1 + log2 3) = 3 * 2^((log2 3)^2)
  const double l = std::log2(3.0);
  const double expect = 3.0 * std::exp2(l * l);
  EXPECT_NEAR(static_cast<double>(bound_g(3).raw), expect, 1e-9);
  EXPECT_EQ(bound_g(3).ceil, static_cast<std::uint64_t>(std::ceil(expect)));
  EXPECT_EQ(bound_g(3).ceil, 18u);
}

TEST(Bounds, CeilIsSmallestIntegerAbove) {
  for (std::uint64_t t = 1; t <= 1024; ++t) {
    for (const BoundValue& b : {bound_g(t), bound_kos(t)}) {
      EXPECT_GE(b.raw, 1.0L);
      if (!b.ceil) continue;
      EXPECT_GE(static_cast<long double>(*b.ceil), b.raw * (1 - 1e-15L));
      EXPECT_LT(static_cast<long double>(*b.ceil) - 1, b.raw);
    }
  }
}

TEST(Bounds, Monotone) {
  for (std::uint64_t t = 2; t < 1024; ++t) {
    EXPECT_LT(bound_g(t).log2_raw, bound_g(t + 1).log2_raw) << t;
    EXPECT_LT(bound_kos(t).log2_raw, bound_kos(t + 1).log2_raw) << t;
    EXPECT_LE(bound_kos(t).log2_raw, bound_g(t).log2_raw) << t;
  }
  for (std::uint64_t t = 2; t < kBoundFCap; ++t)
    EXPECT_LT(bound_f(t).log2_raw, bound_f(t + 1).log2_raw) << t;
}

TEST(Bounds, FFourInLogDomain) {
  // log2 f(4) = 2 + log2 g(g(192)), g in log domain: L -> L (1 + L)
  const double l192 = std::log2(192.0);
  const double l1 = l192 * (1 + l192);
  const double l2 = l1 * (1 + l1);
  EXPECT_NEAR(bound_f(4).log2_raw, 2 + l2, 1e-6 * l2);
  EXPECT_FALSE(bound_f(4).ceil.has_value());
  EXPECT_TRUE(bound_f(4).admits(1u << 30));
}

TEST(Bounds, Errors) {
  EXPECT_THROW(bound_g(0), Error);
  try {
    bound_f(kBoundFCap + 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kOverflow);
  }
}

// ---------------------------------------------------------------------------
// Theorem 1

TEST(Theorem1, S3Equality) {
  const Group s3 = symmetric_group(3);
  const CheckReport r = verify_theorem1(s3, Subgroup::whole(s3));
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("lhs_index"), 6);
  EXPECT_EQ(r.integer("rhs_bound"), 6);
}

TEST(Theorem1, S3TimesC2) {
  const CheckReport r = verify_theorem1(s3xc2(), s3_factor(s3xc2()));
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("lhs_index"), 6);
  EXPECT_EQ(r.integer("rhs_bound"), 6);
}

TEST(Theorem1, TrivialL) {
  const Group d8 = dihedral_group(8);
  const CheckReport r = verify_theorem1(d8, Subgroup::trivial(d8));
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("lhs_index"), 1);
  EXPECT_EQ(r.integer("rhs_bound"), 1);
  const Group s3 = symmetric_group(3);
  EXPECT_EQ(verify_theorem1(s3, Subgroup::trivial(s3)).verdict, Verdict::kPremisesUnmet);
}

TEST(Theorem1, NotNormalIsUnmet) {
  const Group s3 = symmetric_group(3);
  Elem t = 0;
  for (Elem x = 0; x < 6; ++x)
    if (s3.element_order(x) == 2) t = x;
  const CheckReport r = verify_theorem1(s3, generated_subgroup(s3, std::vector<Elem>{t}));
  EXPECT_EQ(r.verdict, Verdict::kPremisesUnmet);
  EXPECT_FALSE(r.premises_ok);
}

// ---------------------------------------------------------------------------
// Lemma 1 and the coprime decomposition

TEST(Lemma1, Examples) {
  const Group d8 = dihedral_group(8);
  EXPECT_EQ(verify_lemma1(d8, Subgroup::trivial(d8), Subgroup::trivial(d8)).verdict,
            Verdict::kHolds);
  const Group s3 = symmetric_group(3);
  EXPECT_EQ(verify_lemma1(s3, Subgroup::whole(s3), derived(s3)).verdict,
            Verdict::kPremisesUnmet);
}

TEST(Lemma1, CentralSubgroupOfH) {
  // A = Z(Q8) is central in H = Q8 and Q8/C(Q8) = Q8/Z is nilpotent.
  const Group q8 = dicyclic_group(8);
  const CheckReport r = verify_lemma1(q8, center(q8), Subgroup::whole(q8));
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.verdict, Verdict::kHolds) << r.witness->dump();
  const Group g = s3xc2();
  EXPECT_EQ(verify_lemma1(g, c2_factor(g), c2_factor(g)).verdict, Verdict::kHolds);
}

TEST(Coprime, Examples) {
  const Group c3 = cyclic_group(3);
  const CheckReport triv = coprime_decomposition(c3, AutSubgroup::trivial(c3));
  EXPECT_EQ(triv.verdict, Verdict::kHolds);
  EXPECT_EQ(triv.integer("commutator_order"), 1);
  EXPECT_EQ(triv.integer("fixed_order"), 3);

  const AutSubgroup inv = automorphism_group(c3);
  const CheckReport r = coprime_decomposition(c3, inv);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("commutator_order"), 3);
  EXPECT_EQ(r.integer("fixed_order"), 1);

  // inversion on the first coordinate of (Z/3)^2, index c0 + 3 c1
  const Group e9 = elementary_abelian_group(3, 2);
  std::vector<Elem> img(9);
  for (int x = 0; x < 9; ++x) img[x] = static_cast<Elem>((3 - x % 3) % 3 + 3 * (x / 3));
  const AutSubgroup q = AutSubgroup::generate(e9, {Automorphism::checked(e9, img)}, "q");
  const CheckReport s = coprime_decomposition(e9, q);
  EXPECT_EQ(s.verdict, Verdict::kHolds);
  EXPECT_EQ(s.witness->at("commutator"), nlohmann::json({0, 1, 2}));
  EXPECT_EQ(s.witness->at("fixed"), nlohmann::json({0, 3, 6}));
}

TEST(Coprime, PremisesChecked) {
  const Group s3 = symmetric_group(3);
  EXPECT_EQ(coprime_decomposition(s3, AutSubgroup::trivial(s3)).verdict,
            Verdict::kPremisesUnmet);
  const Group c4 = cyclic_group(4);
  EXPECT_EQ(coprime_decomposition(c4, automorphism_group(c4)).verdict,
            Verdict::kPremisesUnmet);
}

// ---------------------------------------------------------------------------
// Corollary 2 and the KOS witness

TEST(Corollary2, Examples) {
  const Group d16 = dihedral_group(16);
  const CheckReport nil = verify_corollary2(d16, Subgroup::trivial(d16), 3);
  EXPECT_EQ(nil.verdict, Verdict::kHolds);

  const CheckReport r = verify_corollary2(s3xc2(), s3_factor(s3xc2()), 1);
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("d"), 6);
  EXPECT_EQ(r.integer("z_d_plus_m_order"), 2);
  EXPECT_EQ(r.integer("index_z_2m"), 6);

  const Group s3 = symmetric_group(3);
  const CheckReport a = verify_corollary2(s3, derived(s3), 1);
  EXPECT_EQ(a.verdict, Verdict::kHolds);
  EXPECT_EQ(a.integer("d"), 3);
  EXPECT_EQ(a.integer("index_z_2m"), 6);

  EXPECT_EQ(verify_corollary2(d16, Subgroup::trivial(d16), 2).verdict,
            Verdict::kPremisesUnmet);
}

TEST(Kos, Examples) {
  const CheckReport n = search_kos_witness(dihedral_group(8));
  EXPECT_EQ(n.integer("t"), 1);
  EXPECT_EQ(n.integer("witness_order"), 1);
  EXPECT_EQ(n.verdict, Verdict::kHolds);

  const CheckReport s = search_kos_witness(symmetric_group(3));
  EXPECT_EQ(s.integer("t"), 6);
  EXPECT_EQ(s.integer("witness_order"), 3);
  EXPECT_NEAR(s.real("kos_bound_raw"), 24.8211, 1e-3);
  EXPECT_EQ(s.verdict, Verdict::kHolds);

  const CheckReport p = search_kos_witness(s3xc2());
  EXPECT_EQ(p.integer("t"), 6);
  EXPECT_EQ(p.integer("witness_order"), 3);
}

TEST(MinimalWitness, TieBreakIsLexicographic) {
  // C2 x S3 has a unique minimal witness, A3 x 1
  const Subgroup w = minimal_hypercentral_witness(s3xc2());
  EXPECT_EQ(w.size(), 3u);
  EXPECT_TRUE(w.is_subset_of(s3_factor(s3xc2())));
}

// ---------------------------------------------------------------------------
// Claim (*) and Theorem 2

TEST(ClaimStar, Examples) {
  const Group c6 = cyclic_group(6);
  const CheckReport a = verify_claim_star(c6, inner_automorphisms(c6).inn);
  EXPECT_EQ(a.verdict, Verdict::kHolds);
  EXPECT_EQ(a.integer("s_order"), 6);

  const Group q8 = dicyclic_group(8);
  const CheckReport q = verify_claim_star(q8, inner_automorphisms(q8).inn);
  EXPECT_EQ(q.verdict, Verdict::kHolds);
  EXPECT_EQ(q.integer("s_order"), 32);

  const Group d8 = dihedral_group(8);
  const CheckReport d = verify_claim_star(d8, automorphism_group(d8));
  EXPECT_EQ(d.verdict, Verdict::kHolds);
  EXPECT_EQ(d.integer("s_order"), 64);

  EXPECT_EQ(verify_claim_star(d8, AutSubgroup::trivial(d8)).verdict, Verdict::kPremisesUnmet);
}

TEST(Theorem2, ReductionToTheorem1) {
  for (const Group& g : {symmetric_group(3), s3xc2(), dihedral_group(12), symmetric_group(4),
                         dicyclic_group(16)}) {
    const AutSubgroup inn = inner_automorphisms(g).inn;
    for (const Subgroup& l : normal_subgroups(g)) {
      const CheckReport h = verify_theorem2_H(g, inn, l);
      const CheckReport t = verify_theorem1(g, l);
      EXPECT_EQ(h.verdict, t.verdict) << g.name();
      if (t.verdict == Verdict::kHolds) {
        EXPECT_EQ(h.integer("index"), t.integer("lhs_index"));
        EXPECT_EQ(h.integer("k"), 1);
      }
    }
  }
}

TEST(Theorem2, HExamples) {
  const ExampleInstance ex = build_example(3, 1);
  EXPECT_EQ(verify_theorem2_H(ex.group, ex.action, ex.z).verdict, Verdict::kPremisesUnmet);

  const Group e9 = elementary_abelian_group(3, 2);
  std::vector<Elem> inv(9);
  for (int x = 0; x < 9; ++x) inv[x] = e9.inv(static_cast<Elem>(x));
  const AutSubgroup a = AutSubgroup::generate(e9, {Automorphism::checked(e9, inv)}, "inv");
  const CheckReport r = verify_theorem2_H(e9, a, Subgroup::whole(e9));
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("index"), 9);
}

TEST(Theorem2, BExamples) {
  const Group d8 = dihedral_group(8);
  EXPECT_EQ(verify_theorem2_B(d8, inner_automorphisms(d8).inn).integer("witness_order"), 1);
  const Group s3 = symmetric_group(3);
  const CheckReport s = verify_theorem2_B(s3, inner_automorphisms(s3).inn);
  EXPECT_EQ(s.integer("witness_order"), 3);
  const ExampleInstance ex = build_example(3, 2);
  const CheckReport e = verify_theorem2_B(ex.group, ex.action);
  EXPECT_EQ(e.verdict, Verdict::kHolds);
  EXPECT_EQ(e.integer("witness_order"), 27);
}

TEST(Theorem2, OuterIndex) {
  // Aut(D8) = D8 with Inn = Klein four, Aut/Inn of order 2
  const Group d8 = dihedral_group(8);
  const OuterQuotientData o = outer_hypercenter_index(d8, automorphism_group(d8));
  EXPECT_EQ(o.inner_in_a, 4u);
  EXPECT_EQ(o.outer_order, 2u);
  EXPECT_EQ(o.k, 1u);
}

// ---------------------------------------------------------------------------
// Example

TEST(Example, Construction) {
  const ExampleInstance a = build_example(3, 1);
  EXPECT_EQ(a.group.order(), 9u);
  EXPECT_EQ(a.action.generators().size(), 2u);
  const ExampleInstance b = build_example(3, 2);
  EXPECT_EQ(b.group.order() / b.z.size(), 3u);
  const ExampleInstance c = build_example(5, 1);
  EXPECT_EQ(c.group.order(), 25u);
  const CheckReport r = verify_example(5, 1);
  EXPECT_EQ(r.integer("tau_order"), 4);
}

TEST(Example, GeneratorsCentralizeZ) {
  const ExampleInstance ex = build_example(5, 2);
  for (const Automorphism& g : ex.action.generators())
    for (Elem z : ex.z.elements()) EXPECT_EQ(g(z), z);
  EXPECT_EQ(ex.tau(ex.a0), ex.group.mul(ex.a0, ex.a0));
  for (std::size_t i = 0; i < ex.gammas.size(); ++i)
    EXPECT_EQ(ex.gammas[i](ex.a0), ex.group.mul(ex.a0, ex.basis[i + 1]));
}

TEST(Example, Errors) {
  for (std::size_t p : {2u, 9u, 1u}) {
    try {
      build_example(p, 1);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kNotOddPrime);
    }
  }
  EXPECT_THROW(build_example(3, 8), Error);
}

TEST(Example, Verify) {
  const CheckReport a = verify_example(3, 1);
  EXPECT_EQ(a.verdict, Verdict::kHolds);
  EXPECT_EQ(a.integer("subgroup_count"), 6);
  EXPECT_EQ(a.integer("proper_invariant_count"), 2);
  const CheckReport b = verify_example(3, 2);
  EXPECT_EQ(b.verdict, Verdict::kHolds);
  EXPECT_EQ(b.integer("proper_invariant_count"), 6);
  EXPECT_EQ(verify_example(5, 1).verdict, Verdict::kHolds);
  EXPECT_EQ(verify_example(5, 2).verdict, Verdict::kHolds);
}

// ---------------------------------------------------------------------------
// Corollaries 3 and 4

TEST(Corollary3, Examples) {
  const Group s3 = symmetric_group(3);
  const Subgroup w = Subgroup::whole(s3), one = Subgroup::trivial(s3);
  const CheckReport r = verify_corollary3(s3, {w, w, one});
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("t"), 6);
  EXPECT_EQ(r.integer("witness_order"), 3);

  const Group d8 = dihedral_group(8);
  const Subgroup t = Subgroup::trivial(d8);
  EXPECT_EQ(verify_corollary3(d8, {Subgroup::whole(d8), t, t}).verdict,
            Verdict::kPremisesUnmet);
}

TEST(Corollary3, TwoFactorsOnS3xS3) {
  const Group s3 = symmetric_group(3);
  const Group g = direct_product(s3, s3);
  const Subgroup a3 = derived(s3);
  // F1 = S3 x A3, G1 = S3 x 1, F2 = A3 x 1, G2 = 1
  std::vector<Elem> f1, g1, f2;
  for (Elem x = 0; x < 6; ++x)
    for (Elem y = 0; y < 6; ++y) {
      const Elem e = static_cast<Elem>(x * 6 + y);
      if (a3.contains(y)) f1.push_back(e);
      if (y == s3.identity()) g1.push_back(e);
      if (y == s3.identity() && a3.contains(x)) f2.push_back(e);
    }
  const CheckReport r = verify_corollary3(
      g, {Subgroup::whole(g), Subgroup::checked(g, f1), Subgroup::checked(g, g1),
          Subgroup::checked(g, f2), Subgroup::trivial(g)});
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("n_factors"), 2);
  EXPECT_EQ(r.integer("t"), 9);
  EXPECT_EQ(r.integer("f_lower_bound"), 1);
  EXPECT_EQ(r.integer("witness_order"), 9);
}

TEST(Corollary4, Examples) {
  const Group d8 = dihedral_group(8);
  const AutSubgroup inn = inner_automorphisms(d8).inn;
  const CheckReport n = verify_corollary4(d8, inn, {Subgroup::trivial(d8), Subgroup::whole(d8)}, {1});
  EXPECT_EQ(n.verdict, Verdict::kHolds);
  EXPECT_EQ(n.integer("g0_index"), 1);
  EXPECT_EQ(n.integer("witness_order"), 1);

  const Group s3 = symmetric_group(3);
  const AutSubgroup si = inner_automorphisms(s3).inn;
  const Subgroup a3 = derived(s3);
  const CheckReport s = verify_corollary4(
      s3, si, {Subgroup::trivial(s3), a3, Subgroup::whole(s3)}, {1, 2});
  EXPECT_EQ(s.verdict, Verdict::kHolds);
  EXPECT_EQ(s.integer("witness_order"), 3);
  // A3/1 is not stabilized by Inn(S3), so leaving it unmarked fails the premise
  EXPECT_EQ(verify_corollary4(s3, si, {Subgroup::trivial(s3), a3, Subgroup::whole(s3)}, {2})
                .verdict,
            Verdict::kPremisesUnmet);
}

TEST(Corollary4, ExampleForcesWholeGroup) {
  const ExampleInstance ex = build_example(3, 1);
  const CheckReport r = verify_corollary4(
      ex.group, ex.action, {Subgroup::trivial(ex.group), ex.z, Subgroup::whole(ex.group)}, {2});
  EXPECT_EQ(r.verdict, Verdict::kHolds);
  EXPECT_EQ(r.integer("witness_order"), 9);
}

TEST(Stabilized, Report) {
  const Group s3 = symmetric_group(3);
  const AutSubgroup si = inner_automorphisms(s3).inn;
  EXPECT_EQ(verify_stabilized(s3, si, {Subgroup::trivial(s3), Subgroup::whole(s3)}).verdict,
            Verdict::kFails);
  EXPECT_EQ(verify_stabilized(s3, si, {Subgroup::whole(s3), Subgroup::trivial(s3)}).verdict,
            Verdict::kPremisesUnmet);
}

// ---------------------------------------------------------------------------
// Sweeps

TEST(Sweeps, RunnerOrderIsDeterministic) {
  std::vector<SweepTask> tasks;
  for (const Group& g : {symmetric_group(3), dihedral_group(8), cyclic_group(4)})
    for (const char* c : {"theorem1", "kos"})
      tasks.push_back([g, c] { return sweep_group(c, SweepInput{g, {}, std::nullopt}); });
  const auto a = run_tasks(tasks, 1);
  const auto b = run_tasks(tasks, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].check_name, b[i].check_name);
    EXPECT_EQ(a[i].group_name, b[i].group_name);
    EXPECT_EQ(a[i].quantities, b[i].quantities);
    if (i) EXPECT_LE(a[i - 1].check_name, a[i].check_name);
  }
}

TEST(Sweeps, ErrorsPropagate) {
  std::vector<SweepTask> tasks{[]() -> std::vector<CheckReport> {
    throw Error(ErrorKind::kCapExceeded, "boom");
  }};
  EXPECT_THROW(run_tasks(tasks, 2), Error);
  EXPECT_THROW(sweep_group("nope", SweepInput{cyclic_group(2), {}, std::nullopt}), Error);
}

TEST(Reports, VerdictOnlyWithPremises) {
  for (const auto& c : check_names()) {
    for (const auto& r : sweep_group(c, SweepInput{s3xc2(), {}, std::nullopt})) {
      EXPECT_EQ(r.premises_ok, r.verdict != Verdict::kPremisesUnmet) << c;
    }
  }
}

}  // namespace
}  // namespace cseries
