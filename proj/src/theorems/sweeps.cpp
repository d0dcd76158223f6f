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

#include "cseries/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <set>
#include <thread>

#include "cseries/checks.hpp"
#include "cseries/error.hpp"
#include "cseries/series.hpp"

namespace cseries {

namespace {

constexpr std::size_t kActionTableCap = 2048;
constexpr std::size_t kCoprimeMaxOrder = 81;
constexpr std::size_t kCoprimeFullAut = 2048;
constexpr std::size_t kCoprimeSamples = 64;
constexpr std::size_t kCoprimePairs = 32;
constexpr std::uint64_t kSampleSeed = 0x5eed;

std::optional<AutSubgroup> full_aut_if_small(const Group& g, std::size_t cap) {
  if (g.order() > default_limits().aut_group_cap) return std::nullopt;
  if (automorphism_group_order(g) > cap) return std::nullopt;
  return automorphism_group(g).renamed("Aut");
}

// Inn(G), Aut(G) when |Aut(G)| <= cap, then the stored actions.
std::vector<AutSubgroup> actions_for(const SweepInput& in, std::size_t cap) {
  std::vector<AutSubgroup> out;
  out.push_back(inner_automorphisms(in.group).inn.renamed("Inn"));
  if (auto aut = full_aut_if_small(in.group, cap)) out.push_back(std::move(*aut));
  out.insert(out.end(), in.actions.begin(), in.actions.end());
  return out;
}

std::vector<CheckReport> sweep_theorem1(const Group& g) {
  std::vector<CheckReport> out;
  for (const Subgroup& l : normal_subgroups(g)) out.push_back(verify_theorem1(g, l));
  return out;
}

std::vector<CheckReport> sweep_lemma1(const Group& g) {
  std::vector<CheckReport> out;
  const Subgroup one = Subgroup::trivial(g);
  for (const Subgroup& h : normal_subgroups(g)) {
    const SubgroupAsGroup hg = as_group(g, h, "H");
    const Subgroup zh = image(g, hg.embedding, center(hg.group));
    out.push_back(verify_lemma1(g, one, h));
    if (!zh.is_trivial()) out.push_back(verify_lemma1(g, zh, h));
  }
  return out;
}

std::size_t aut_order(const Automorphism& a) {
  std::size_t k = 1;
  for (Automorphism t = a; !t.is_identity(); t = t.after(a)) ++k;
  return k;
}

Automorphism power(const Automorphism& a, std::size_t k) {
  Automorphism r = Automorphism::identity(a.degree());
  for (std::size_t i = 0; i < k; ++i) r = r.after(a);
  return r;
}

// The power of `a` generating the part of <a> whose order is prime to n.
std::optional<Automorphism> coprime_part(const Automorphism& a, std::size_t n) {
  std::size_t o = aut_order(a), u = 1;
  for (std::size_t d = std::gcd(o, n); d > 1; d = std::gcd(o, n)) {
    o /= d;
    u *= d;
  }
  if (o == 1) return std::nullopt;
  return power(a, u);
}

std::vector<CheckReport> sweep_coprime(const SweepInput& in) {
  const Group& x = in.group;
  if (!x.is_abelian() || x.order() > kCoprimeMaxOrder) return {};
  std::vector<Automorphism> pool;
  if (automorphism_group_order(x) <= kCoprimeFullAut) {
    pool = automorphism_group(x).members();
  } else {
    pool = sample_automorphisms(x, kCoprimeSamples, kSampleSeed);
  }
  for (const AutSubgroup& a : in.actions)
    pool.insert(pool.end(), a.members().begin(), a.members().end());

  std::vector<Automorphism> cyclic_gens;
  for (const Automorphism& a : pool)
    if (auto c = coprime_part(a, x.order())) cyclic_gens.push_back(*c);

  std::set<std::vector<Automorphism>> seen;
  std::vector<AutSubgroup> qs;
  auto consider = [&](std::vector<Automorphism> gens, const std::string& name) {
    Limits lim = default_limits();
    lim.aut_member_cap = kActionTableCap;
    AutSubgroup q;
    try {
      q = AutSubgroup::generate(x, std::move(gens), name, lim);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kCapExceeded) return;
      throw;
    }
    if (std::gcd(q.order(), x.order()) != 1) return;
    std::vector<Automorphism> key = q.members();
    std::sort(key.begin(), key.end());
    if (seen.insert(std::move(key)).second) qs.push_back(std::move(q));
  };
  consider({}, "1");
  for (const Automorphism& c : cyclic_gens) consider({c}, "Q" + std::to_string(qs.size()));
  const std::size_t cyclic = qs.size();
  std::size_t pairs = 0;
  for (std::size_t i = 1; i < cyclic && pairs < kCoprimePairs; ++i) {
    for (std::size_t j = i + 1; j < cyclic && pairs < kCoprimePairs; ++j, ++pairs) {
      std::vector<Automorphism> gens = qs[i].generators();
      const auto more = qs[j].generators();
      gens.insert(gens.end(), more.begin(), more.end());
      consider(std::move(gens), "Q" + std::to_string(qs.size()));
    }
  }
  std::vector<CheckReport> out;
  for (const AutSubgroup& q : qs) out.push_back(coprime_decomposition(x, q));
  return out;
}

std::vector<CheckReport> sweep_corollary2(const Group& g) {
  std::vector<CheckReport> out;
  for (const Subgroup& l : normal_subgroups(g)) {
    const auto cls = nilpotency_class(quotient(g, l).group);
    if (!cls) continue;
    out.push_back(verify_corollary2(g, l, *cls));
    out.push_back(verify_corollary2(g, l, *cls + 1));
  }
  return out;
}

std::vector<CheckReport> sweep_claim_star(const SweepInput& in) {
  const Group& g = in.group;
  std::vector<CheckReport> out;
  for (const AutSubgroup& a : actions_for(in, kActionTableCap / g.order())) {
    if (g.order() * a.order() > kActionTableCap) continue;
    out.push_back(verify_claim_star(g, a));
  }
  return out;
}

std::vector<CheckReport> sweep_theorem2_H(const SweepInput& in) {
  const Group& g = in.group;
  std::vector<CheckReport> out;
  const std::vector<Subgroup> normals = normal_subgroups(g);
  for (const AutSubgroup& a : actions_for(in, kActionTableCap)) {
    if (!is_normalized_by_inner(g, a)) {
      out.push_back(verify_theorem2_H(g, a, Subgroup::whole(g)));
      continue;
    }
    for (const Subgroup& l : normals)
      if (is_invariant(a, l)) out.push_back(verify_theorem2_H(g, a, l));
  }
  return out;
}

std::vector<CheckReport> sweep_theorem2_B(const SweepInput& in) {
  std::vector<CheckReport> out;
  for (const AutSubgroup& a : actions_for(in, kActionTableCap))
    out.push_back(verify_theorem2_B(in.group, a));
  return out;
}

std::vector<CheckReport> sweep_corollary3(const Group& g) {
  std::vector<CheckReport> out;
  if (g.order() == 1) return out;
  const Subgroup whole = Subgroup::whole(g), one = Subgroup::trivial(g);
  out.push_back(verify_corollary3(g, {whole, whole, one}));
  const Subgroup l = minimal_hypercentral_witness(g);
  if (!l.is_trivial()) out.push_back(verify_corollary3(g, {whole, l, one}));
  if (!l.is_trivial() && !l.is_whole())
    out.push_back(verify_corollary3(g, {whole, whole, l, l, one}));
  return out;
}

std::vector<CheckReport> sweep_corollary4(const SweepInput& in) {
  const Group& g = in.group;
  std::vector<CheckReport> out;
  const Subgroup whole = Subgroup::whole(g), one = Subgroup::trivial(g);
  for (const AutSubgroup& a : actions_for(in, kActionTableCap)) {
    if (!is_normalized_by_inner(g, a)) continue;
    if (g.order() == 1) {
      out.push_back(verify_corollary4(g, a, {one}, {}));
      continue;
    }
    out.push_back(verify_corollary4(g, a, {one, whole}, {1}));
    // the A-center series, with only the top factor marked finite
    std::vector<Subgroup> chain = a_center_series(g, a).terms;
    if (!chain.back().is_whole()) chain.push_back(whole);
    if (chain.size() > 2) {
      std::vector<std::size_t> marked;
      if (!a_center_series(g, a).reaches_group) marked.push_back(chain.size() - 1);
      out.push_back(verify_corollary4(g, a, chain, marked));
    }
  }
  return out;
}

std::vector<CheckReport> sweep_kos(const Group& g) { return {search_kos_witness(g)}; }

std::vector<CheckReport> sweep_example(const SweepInput& in) {
  if (!in.example) return {};
  return {verify_example(in.example->first, in.example->second)};
}

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "theorem1",   "kos",        "corollary2", "claim_star", "coprime",    "lemma1",
      "theorem2_H", "theorem2_B", "example",    "corollary3", "corollary4"};
  return names;
}

bool is_check_name(std::string_view name) {
  const auto& n = check_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

std::vector<CheckReport> sweep_group(const std::string& check, const SweepInput& in) {
  const Group& g = in.group;
  if (check == "theorem1") return sweep_theorem1(g);
  if (check == "kos") return sweep_kos(g);
  if (check == "corollary2") return sweep_corollary2(g);
  if (check == "claim_star") return sweep_claim_star(in);
  if (check == "coprime") return sweep_coprime(in);
  if (check == "lemma1") return sweep_lemma1(g);
  if (check == "theorem2_H") return sweep_theorem2_H(in);
  if (check == "theorem2_B") return sweep_theorem2_B(in);
  if (check == "example") return sweep_example(in);
  if (check == "corollary3") return sweep_corollary3(g);
  if (check == "corollary4") return sweep_corollary4(in);
  throw Error(ErrorKind::kInvalidArgument, "unknown check '" + check + "'");
}

std::vector<CheckReport> run_tasks(std::vector<SweepTask> tasks, unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size() && !failed; i = next++) {
      try {
        results[i] = tasks[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed = true;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  std::vector<CheckReport> out;
  for (auto& r : results)
    for (auto& rep : r) out.push_back(std::move(rep));
  sort_reports(out);
  return out;
}

}  // namespace cseries
