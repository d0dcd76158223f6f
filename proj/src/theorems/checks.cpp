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

#include "cseries/checks.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "cseries/error.hpp"
#include "cseries/products.hpp"
#include "cseries/series.hpp"

namespace cseries {

namespace {

CheckReport make_report(std::string check, const Group& g) {
  CheckReport r;
  r.check_name = std::move(check);
  r.group_name = g.name();
  r.set("order", g.order());
  return r;
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

std::size_t hypercenter_index(const Group& g) {
  return g.order() / hypercenter(g).size();
}

bool is_hypercentral_quotient(const Group& g, const Subgroup& n) {
  return nilpotency_class(quotient(g, n).group).has_value();
}

bool is_a_hypercentral_quotient(const Group& g, const AutSubgroup& a,
                                const Subgroup& n) {
  InducedAction induced = restrict_action_to_quotient(g, n, a);
  return a_center_series(induced.quotient.group, induced.action).reaches_group;
}

Subgroup minimal_hypercentral_witness(const Group& g) {
  for (const Subgroup& n : normal_subgroups(g))
    if (is_hypercentral_quotient(g, n)) return n;
  return Subgroup::whole(g);
}

Subgroup minimal_a_hypercentral_witness(const Group& g, const AutSubgroup& a) {
  for (const Subgroup& n : normal_subgroups(g)) {
    if (!is_invariant(a, n)) continue;
    if (is_a_hypercentral_quotient(g, a, n)) return n;
  }
  return Subgroup::whole(g);
}

OuterQuotientData outer_hypercenter_index(const Group& g, const AutSubgroup& a) {
  const Group table = aut_table(a);
  std::unordered_set<std::vector<Elem>, ImageHash> conj;
  for (std::size_t x = 0; x < g.order(); ++x)
    conj.insert(conjugation(g, static_cast<Elem>(x)).image_vector());
  std::vector<Elem> inner;
  for (std::size_t i = 0; i < a.order(); ++i)
    if (conj.contains(a.member(i).image_vector())) inner.push_back(static_cast<Elem>(i));
  const Subgroup inner_sub = Subgroup::checked(table, inner);
  const Quotient outer = quotient(table, inner_sub);
  OuterQuotientData out;
  out.inner_in_a = inner_sub.size();
  out.outer_order = outer.group.order();
  out.k = hypercenter_index(outer.group);
  return out;
}

// ---------------------------------------------------------------------------

CheckReport verify_theorem1(const Group& g, const Subgroup& l) {
  CheckReport r = make_report("theorem1", g);
  r.set("l_order", l.size());
  r.add_witness("L", to_json(l));
  if (!is_normal(g, l)) {
    r.unmet("L is not normal in G");
    return r;
  }
  if (!is_hypercentral_quotient(g, l)) {
    r.unmet("G/L is not hypercentral");
    return r;
  }
  const Subgroup z = hypercenter(g);
  const std::uint64_t lhs = g.order() / z.size();
  const SubgroupAsGroup lg = as_group(g, l, g.name() + ".L");
  const std::uint64_t aut = automorphism_group_order(lg.group);
  const std::uint64_t zl = center(lg.group).size();
  r.set("lhs_index", lhs);
  r.set("aut_l_order", aut);
  r.set("center_l_order", zl);
  r.set("rhs_bound", aut * zl);
  r.add_witness("hypercenter", to_json(z));
  r.conclude(lhs <= aut * zl);
  return r;
}

CheckReport verify_lemma1(const Group& g, const Subgroup& a_sub, const Subgroup& h) {
  CheckReport r = make_report("lemma1", g);
  r.set("a_order", a_sub.size());
  r.set("h_order", h.size());
  r.add_witness("A", to_json(a_sub));
  r.add_witness("H", to_json(h));
  r.add_witness("reading", "locally nilpotent checked as nilpotent (finite case)");
  if (!a_sub.is_subset_of(h)) {
    r.unmet("A is not contained in H");
    return r;
  }
  if (!is_normal(g, a_sub) || !is_normal(g, h)) {
    r.unmet("A and H must both be normal in G");
    return r;
  }
  for (Elem x : a_sub.elements())
    for (Elem y : h.elements())
      if (g.mul(x, y) != g.mul(y, x)) {
        r.unmet("A is not central in H");
        return r;
      }
  const Subgroup c = centralizer(g, h.elements());
  if (!is_hypercentral_quotient(g, c)) {
    r.unmet("G/C_G(H) is not nilpotent");
    return r;
  }
  const Quotient qa = quotient(g, a_sub);
  const Subgroup zqa = hypercenter(qa.group);
  for (Elem x : h.elements())
    if (!zqa.contains(qa.projection(x))) {
      r.unmet("H/A is not contained in Z_inf(G/A)");
      return r;
    }
  const Subgroup z = hypercenter(g);
  const Subgroup prod = join(g, z, a_sub);
  r.set("centralizer_order", c.size());
  r.set("hypercenter_order", z.size());
  r.set("product_order", prod.size());
  r.conclude(h.is_subset_of(prod));
  return r;
}

CheckReport coprime_decomposition(const Group& x, const AutSubgroup& q) {
  CheckReport r = make_report("coprime", x);
  r.set("q_order", q.order());
  r.add_witness("action", q.name());
  if (!x.is_abelian()) {
    r.unmet("X is not abelian");
    return r;
  }
  if (std::gcd(x.order(), q.order()) != 1) {
    r.unmet("|Q| is not coprime to |X|");
    return r;
  }
  std::vector<Elem> gens;
  std::vector<bool> seen(x.order(), false);
  for (const Automorphism& alpha : q.members()) {
    for (std::size_t e = 0; e < x.order(); ++e) {
      const Elem c = x.mul(x.inv(static_cast<Elem>(e)), alpha(static_cast<Elem>(e)));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        gens.push_back(c);
      }
    }
  }
  const Subgroup comm = generated_subgroup(x, gens);
  const Subgroup fixed = fixed_points(x, q);
  const Subgroup meet = intersection(x, comm, fixed);
  const Subgroup joint = join(x, comm, fixed);
  r.set("commutator_order", comm.size());
  r.set("fixed_order", fixed.size());
  r.set("intersection_order", meet.size());
  r.set("join_order", joint.size());
  r.add_witness("commutator", to_json(comm));
  r.add_witness("fixed", to_json(fixed));
  r.conclude(meet.is_trivial() && joint.is_whole());
  return r;
}

CheckReport verify_corollary2(const Group& g, const Subgroup& l, std::size_t m) {
  CheckReport r = make_report("corollary2", g);
  r.set("d", l.size());
  r.set("m", m);
  r.add_witness("L", to_json(l));
  if (!is_normal(g, l)) {
    r.unmet("L is not normal in G");
    return r;
  }
  const auto cls = nilpotency_class(quotient(g, l).group);
  if (!cls) {
    r.unmet("G/L is not nilpotent");
    return r;
  }
  r.set("quotient_class", *cls);
  if (*cls > m) {
    r.unmet("G/L has class greater than m");
    return r;
  }
  const AscendingSeries ucs = upper_central_series(g);
  const std::size_t d = l.size();
  const Subgroup& zdm = ucs.term(d + m);
  r.set("z_d_plus_m_order", zdm.size());
  r.set("hypercenter_order", ucs.last().size());
  r.set("series_length", ucs.length());
  r.set("index_z_2m", g.order() / ucs.term(2 * m).size());
  r.conclude(zdm == ucs.last());
  return r;
}

CheckReport search_kos_witness(const Group& g) {
  CheckReport r = make_report("kos", g);
  const std::size_t t = hypercenter_index(g);
  const Subgroup w = minimal_hypercentral_witness(g);
  const BoundValue kos = bound_kos(t);
  r.set("t", t);
  r.set("witness_order", w.size());
  r.set_real("kos_bound_raw", static_cast<double>(kos.raw));
  if (kos.ceil) r.set("kos_bound_ceil", *kos.ceil);
  r.add_witness("L", to_json(w));
  r.conclude(kos.admits(w.size()));
  return r;
}

CheckReport verify_claim_star(const Group& g, const AutSubgroup& a) {
  CheckReport r = make_report("claim_star", g);
  r.set("a_order", a.order());
  r.add_witness("action", a.name());
  if (!contains_inner(g, a)) {
    r.unmet("A does not contain Inn(G)");
    return r;
  }
  const SemidirectProduct sd = semidirect_product(g, a);
  const AscendingSeries gs = a_center_series(g, a);
  const AscendingSeries ss = upper_central_series(sd.group);
  std::vector<std::size_t> bar(g.order());
  for (std::size_t x = 0; x < g.order(); ++x)
    bar[x] = *a.index_of(conjugation(g, static_cast<Elem>(x)));

  const std::size_t na = a.order();
  const std::size_t steps = std::max(gs.length(), ss.length()) + 1;
  std::int64_t first_failure = -1;
  for (std::size_t d = 0; d <= steps && first_failure < 0; ++d) {
    const Subgroup& gd = gs.term(d);
    const Subgroup& zd = ss.term(d);
    for (Elem x : gd.elements()) {
      for (Elem y : gd.elements()) {
        const std::size_t idx = static_cast<std::size_t>(x) * na + bar[static_cast<std::size_t>(y)];
        if (!zd.contains(static_cast<Elem>(idx))) {
          first_failure = static_cast<std::int64_t>(d);
          break;
        }
      }
      if (first_failure >= 0) break;
    }
  }
  r.set("s_order", sd.group.order());
  r.set("deltas_checked", steps + 1);
  r.set("g_series_length", gs.length());
  r.set("s_series_length", ss.length());
  r.set("first_failing_delta", first_failure);
  r.conclude(first_failure < 0);
  return r;
}

CheckReport verify_theorem2_H(const Group& g, const AutSubgroup& a, const Subgroup& l) {
  CheckReport r = make_report("theorem2_H", g);
  r.set("a_order", a.order());
  r.set("d", l.size());
  r.add_witness("action", a.name());
  r.add_witness("L", to_json(l));
  if (!is_normalized_by_inner(g, a)) {
    r.unmet("A is not normalized by Inn(G)");
    return r;
  }
  if (!is_normal(g, l) || !is_invariant(a, l)) {
    r.unmet("L is not a normal A-subgroup");
    return r;
  }
  if (!is_a_hypercentral_quotient(g, a, l)) {
    r.unmet("G/L is not A-hypercentral");
    return r;
  }
  const OuterQuotientData outer = outer_hypercenter_index(g, a);
  const Subgroup z = hypercenter(g, a);
  r.set("k", outer.k);
  r.set("inner_in_a", outer.inner_in_a);
  r.set("outer_order", outer.outer_order);
  r.set("index", g.order() / z.size());
  r.conclude(true);
  return r;
}

CheckReport verify_theorem2_B(const Group& g, const AutSubgroup& a) {
  CheckReport r = make_report("theorem2_B", g);
  r.set("a_order", a.order());
  r.add_witness("action", a.name());
  if (!is_normalized_by_inner(g, a)) {
    r.unmet("A is not normalized by Inn(G)");
    return r;
  }
  const OuterQuotientData outer = outer_hypercenter_index(g, a);
  const Subgroup z = hypercenter(g, a);
  const Subgroup w = minimal_a_hypercentral_witness(g, a);
  r.set("t", g.order() / z.size());
  r.set("k", outer.k);
  r.set("witness_order", w.size());
  r.add_witness("L", to_json(w));
  r.conclude(is_invariant(a, w) && is_a_hypercentral_quotient(g, a, w));
  return r;
}

ExampleInstance build_example(std::size_t p, std::size_t n) {
  if (p % 2 == 0 || !is_prime(p))
    throw Error(ErrorKind::kNotOddPrime, std::to_string(p) + " is not an odd prime");
  std::size_t order = p;
  for (std::size_t i = 0; i < n; ++i) {
    order *= p;
    if (order > default_limits().table_cap)
      throw Error(ErrorKind::kCapExceeded,
                  "example group of order p^(n+1) exceeds the table cap");
  }
  ExampleInstance ex{
      elementary_abelian_group(p, n + 1)
          .renamed("Ex(" + std::to_string(p) + "," + std::to_string(n) + ")"),
      {}, {}, 0, {}, {}, {}};
  const Group& g = ex.group;
  std::size_t place = 1;
  for (std::size_t i = 0; i <= n; ++i, place *= p) ex.basis.push_back(static_cast<Elem>(place));
  ex.a0 = ex.basis[0];

  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i, x /= p) c[i] = x % p;
    return c;
  };
  auto encode = [&](const std::vector<std::size_t>& c) {
    std::size_t x = 0;
    for (std::size_t i = n + 1; i-- > 0;) x = x * p + c[i];
    return static_cast<Elem>(x);
  };

  std::vector<Elem> tau(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto c = digits(x);
    c[0] = (2 * c[0]) % p;
    tau[x] = encode(c);
  }
  ex.tau = Automorphism::checked(g, std::move(tau));
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Elem> gamma(g.order());
    for (std::size_t x = 0; x < g.order(); ++x) {
      auto c = digits(x);
      c[i] = (c[i] + c[0]) % p;
      gamma[x] = encode(c);
    }
    ex.gammas.push_back(Automorphism::checked(g, std::move(gamma)));
  }
  std::vector<Automorphism> gens{ex.tau};
  gens.insert(gens.end(), ex.gammas.begin(), ex.gammas.end());
  ex.action = AutSubgroup::generate(g, std::move(gens), "A_ex");

  std::vector<Elem> z;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (x % p == 0) z.push_back(static_cast<Elem>(x));
  ex.z = Subgroup::checked(g, std::move(z));
  return ex;
}

CheckReport verify_example(std::size_t p, std::size_t n) {
  const ExampleInstance ex = build_example(p, n);
  const Group& g = ex.group;
  const AutSubgroup& a = ex.action;
  CheckReport r = make_report("example", g);
  r.set("p", p);
  r.set("n", n);
  r.set("a_order", a.order());

  bool abelian = true;
  const auto gens = a.generators();
  for (std::size_t i = 0; i < gens.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < gens.size() && abelian; ++j)
      abelian = gens[i].after(gens[j]) == gens[j].after(gens[i]);
  r.set("a_is_abelian", abelian);
  std::size_t tau_order = 1;
  for (Automorphism t = ex.tau; !t.is_identity(); t = t.after(ex.tau)) ++tau_order;
  r.set("tau_order", tau_order);
  r.set("closure_a0_order", a_invariant_closure(g, a, std::vector<Elem>{ex.a0}).size());

  // (a) first A-center and its index
  const Subgroup fixed = fixed_points(g, a);
  const AscendingSeries series = a_center_series(g, a);
  const bool first_ok = fixed == ex.z && series.term(1) == ex.z &&
                        g.order() / ex.z.size() == p;
  r.set("z_index", g.order() / fixed.size());
  r.set("series_length", series.length());

  // (b), (c) over every proper A-invariant subgroup
  const std::vector<Subgroup> subs = all_subgroups(g);
  std::size_t invariant = 0;
  bool inside_z = true, never_hypercentral = true;
  for (const Subgroup& k : subs) {
    if (k.is_whole() || !is_invariant(a, k)) continue;
    ++invariant;
    inside_z = inside_z && k.is_subset_of(ex.z);
    never_hypercentral = never_hypercentral && !is_a_hypercentral_quotient(g, a, k);
  }
  r.set("subgroup_count", subs.size());
  r.set("proper_invariant_count", invariant);
  r.set("first_center_ok", first_ok);
  r.set("invariant_inside_z", inside_z);
  r.set("no_hypercentral_quotient", never_hypercentral);
  r.add_witness("Z", to_json(ex.z));
  r.conclude(first_ok && inside_z && never_hypercentral);
  return r;
}

CheckReport verify_corollary3(const Group& g, const std::vector<Subgroup>& chain) {
  CheckReport r = make_report("corollary3", g);
  nlohmann::json chain_json = nlohmann::json::array();
  for (const auto& s : chain) chain_json.push_back(to_json(s));
  r.add_witness("chain", chain_json);
  if (chain.size() < 3 || chain.size() % 2 == 0) {
    r.unmet("chain must read G_0, F_1, G_1, ..., F_n, G_n");
    return r;
  }
  if (!chain.front().is_whole() || !chain.back().is_trivial()) {
    r.unmet("chain must run from G down to 1");
    return r;
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!is_normal(g, chain[i])) {
      r.unmet("chain term " + std::to_string(i) + " is not normal");
      return r;
    }
    if (i > 0 && !chain[i].is_subset_of(chain[i - 1])) {
      r.unmet("chain is not descending at term " + std::to_string(i));
      return r;
    }
  }
  const std::size_t factors = chain.size() / 2;
  std::uint64_t t = 1;
  for (std::size_t i = 1; i <= factors; ++i) {
    const Subgroup& prev = chain[2 * i - 2];
    const Subgroup& f = chain[2 * i - 1];
    const Subgroup& next = chain[2 * i];
    const std::size_t ti = f.size() / next.size();
    if (ti <= 1) {
      r.unmet("factor F_" + std::to_string(i) + "/G_" + std::to_string(i) +
              " is trivial");
      return r;
    }
    t *= ti;
    const Quotient q = quotient(g, f);
    const Subgroup zq = hypercenter(q.group);
    for (Elem x : prev.elements()) {
      if (!zq.contains(q.projection(x))) {
        r.unmet("G_" + std::to_string(i - 1) + "/F_" + std::to_string(i) +
                " is not in the hypercenter of G/F_" + std::to_string(i));
        return r;
      }
    }
  }
  const Subgroup w = minimal_hypercentral_witness(g);
  const std::uint64_t arg = std::min<std::uint64_t>(t, kBoundFCap);
  const BoundValue f = bound_f(arg);
  r.set("n_factors", factors);
  r.set("t", t);
  r.set("witness_order", w.size());
  r.set("f_argument", arg);
  // f is increasing, so f(t) >= f(cap) when t is past the cap
  r.set("f_lower_bound", t > kBoundFCap);
  r.set_real("f_log2", f.log2_raw);
  if (f.ceil) r.set("f_ceil", *f.ceil);
  r.set("hypercenter_index", hypercenter_index(g));
  r.add_witness("L", to_json(w));
  r.conclude(f.admits(w.size()));
  return r;
}

CheckReport verify_corollary4(const Group& g, const AutSubgroup& a,
                              const std::vector<Subgroup>& chain,
                              const std::vector<std::size_t>& finite_factors) {
  CheckReport r = make_report("corollary4", g);
  r.set("a_order", a.order());
  r.add_witness("action", a.name());
  if (!is_normalized_by_inner(g, a)) {
    r.unmet("A is not normalized by Inn(G)");
    return r;
  }
  if (chain.empty() || !chain.front().is_trivial() || !chain.back().is_whole()) {
    r.unmet("chain must ascend from 1 to G");
    return r;
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0 && !chain[i - 1].is_subset_of(chain[i])) {
      r.unmet("chain is not ascending at term " + std::to_string(i));
      return r;
    }
    if (!is_normal(g, chain[i]) || !is_invariant(a, chain[i])) {
      r.unmet("chain term " + std::to_string(i) + " is not a normal A-subgroup");
      return r;
    }
  }
  std::uint64_t finite_product = 1;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const bool marked = std::find(finite_factors.begin(), finite_factors.end(), i) !=
                        finite_factors.end();
    if (marked) {
      finite_product *= chain[i].size() / chain[i - 1].size();
      continue;
    }
    if (!stabilizes_series(g, a, {chain[i - 1], chain[i]})) {
      r.unmet("A acts nontrivially on unmarked factor " + std::to_string(i));
      return r;
    }
  }
  r.set("finite_factor_count", finite_factors.size());
  r.set("finite_factor_product", finite_product);

  // (i) the A-hypercenter, with its A-center series
  const AscendingSeries series = a_center_series(g, a);
  const Subgroup& g0 = series.last();
  const bool g0_ok = is_normal(g, g0) && is_invariant(a, g0) &&
                     stabilizes_series(g, a, series.terms);
  // (ii) a normal A-subgroup with A-hypercentral quotient
  const Subgroup l = minimal_a_hypercentral_witness(g, a);
  const bool l_ok = is_invariant(a, l) && is_a_hypercentral_quotient(g, a, l);
  r.set("g0_index", g.order() / g0.size());
  r.set("g0_series_length", series.length());
  r.set("witness_order", l.size());
  r.add_witness("G0", to_json(g0));
  r.add_witness("L", to_json(l));
  r.conclude(g0_ok && l_ok);
  return r;
}

CheckReport verify_stabilized(const Group& g, const AutSubgroup& a,
                              const std::vector<Subgroup>& chain) {
  CheckReport r = make_report("stabilizes", g);
  r.set("a_order", a.order());
  r.set("chain_length", chain.size());
  r.add_witness("action", a.name());
  try {
    r.conclude(stabilizes_series(g, a, chain));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNotAChain && e.kind() != ErrorKind::kNotInvariant)
      throw;
    r.unmet(e.what());
  }
  return r;
}

}  // namespace cseries
