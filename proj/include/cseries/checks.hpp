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

// Verifications of the hypercenter bounds and structural statements on
// concrete finite instances. Every check evaluates its premises first; a
// report whose premises fail carries verdict premises_unmet and the reason
// in its witness. Only cap violations are thrown.

#ifndef CSERIES_CHECKS_HPP_
#define CSERIES_CHECKS_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cseries/bounds.hpp"
#include "cseries/group.hpp"
#include "cseries/morphisms.hpp"
#include "cseries/report.hpp"

namespace cseries {

// [G : Z_inf(G)] <= |Aut(L)| * |Z(L)| whenever L is normal and G/L is
// hypercentral.
CheckReport verify_theorem1(const Group& g, const Subgroup& l);

// For normal A <= H with A central in H, G/C_G(H) nilpotent and H/A inside
// Z_inf(G/A): H <= Z_inf(G) A.
CheckReport verify_lemma1(const Group& g, const Subgroup& a_sub,
                          const Subgroup& h);

// X = [X, Q] x C_X(Q) for abelian X and |Q| coprime to |X|.
CheckReport coprime_decomposition(const Group& x, const AutSubgroup& q);

// With |L| = d and G/L nilpotent of class <= m: Z_{d+m}(G) = Z_inf(G); the
// order of G/Z_{2m}(G) is recorded.
CheckReport verify_corollary2(const Group& g, const Subgroup& l, std::size_t m);

// Smallest normal N with G/N hypercentral against ceil(kos([G : Z_inf(G)])).
CheckReport search_kos_witness(const Group& g);

// For Inn(G) <= A: G_d * bar(G_d) <= Z_d(G x| A) at every step d, where
// G_d = Z_d(G, A).
CheckReport verify_claim_star(const Group& g, const AutSubgroup& a);

// Existence form: with A normalized by Inn(G), L a normal A-subgroup and G/L
// A-hypercentral, records (d, k, [G : Z_inf(G, A)]).
CheckReport verify_theorem2_H(const Group& g, const AutSubgroup& a,
                              const Subgroup& l);

// Existence form: records t = [G : Z_inf(G, A)], k, and the smallest normal
// A-subgroup L with G/L A-hypercentral.
CheckReport verify_theorem2_B(const Group& g, const AutSubgroup& a);

struct ExampleInstance {
  Group group;
  AutSubgroup action;
  // <a_1, .., a_n>
  Subgroup z;
  Elem a0 = 0;
  // basis[i] is a_i; element index sum c_i p^i stands for prod a_i^c_i.
  std::vector<Elem> basis;
  Automorphism tau;
  std::vector<Automorphism> gammas;
};

// Elementary abelian G of order p^(n+1) with basis a_0..a_n; A is generated
// by tau (a_0 -> a_0^2) and gamma_i (a_0 -> a_0 a_i), all centralizing
// Z = <a_1..a_n>. Throws kNotOddPrime, kCapExceeded.
ExampleInstance build_example(std::size_t p, std::size_t n);

// Z_1(G, A) = Z of index p; every proper A-invariant subgroup lies in Z; no
// quotient by one of them is A-hypercentral.
CheckReport verify_example(std::size_t p, std::size_t n);

// Chain G = G_0 >= F_1 >= G_1 >= ... >= F_n >= G_n = 1, given as
// {G_0, F_1, G_1, ..., F_n, G_n}. Compares the smallest L with G/L
// hypercentral against f(t_1 ... t_n).
CheckReport verify_corollary3(const Group& g, const std::vector<Subgroup>& chain);

// `chain` ascends from 1 to G; `finite_factors` lists the indices i >= 1 of
// the factors chain[i] / chain[i-1] exempt from the trivial-action premise.
CheckReport verify_corollary4(const Group& g, const AutSubgroup& a,
                              const std::vector<Subgroup>& chain,
                              const std::vector<std::size_t>& finite_factors);

// Whether A acts trivially on every factor of a user-supplied chain.
CheckReport verify_stabilized(const Group& g, const AutSubgroup& a,
                              const std::vector<Subgroup>& chain);

// ---------------------------------------------------------------------------
// Shared pieces, exposed for tests and sweeps.

// [G : Z_inf(G)].
std::size_t hypercenter_index(const Group& g);

bool is_hypercentral_quotient(const Group& g, const Subgroup& n);
// G/N is A-hypercentral under the induced action (N normal, A-invariant).
bool is_a_hypercentral_quotient(const Group& g, const AutSubgroup& a,
                                const Subgroup& n);

// Smallest normal N (by order, then elements) with G/N hypercentral.
Subgroup minimal_hypercentral_witness(const Group& g);
// Smallest normal A-subgroup L with G/L A-hypercentral.
Subgroup minimal_a_hypercentral_witness(const Group& g, const AutSubgroup& a);

struct OuterQuotientData {
  std::size_t inner_in_a = 0;  // |A cap Inn(G)|
  std::size_t outer_order = 0; // |A / (A cap Inn(G))|
  std::size_t k = 0;           // index of the hypercenter of the latter
};

OuterQuotientData outer_hypercenter_index(const Group& g, const AutSubgroup& a);

}  // namespace cseries

#endif  // CSERIES_CHECKS_HPP_
