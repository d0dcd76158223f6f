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

#include "cseries/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <utility>

#include "cseries/error.hpp"

namespace cseries {

Automorphism Automorphism::checked(const Group& g, std::vector<Elem> image) {
  const std::size_t n = g.order();
  if (image.size() != n)
    throw Error(ErrorKind::kNotAutomorphism, "image has the wrong length");
  std::vector<bool> hit(n, false);
  for (Elem y : image) {
    if (y < 0 || static_cast<std::size_t>(y) >= n ||
        hit[static_cast<std::size_t>(y)])
      throw Error(ErrorKind::kNotAutomorphism, "map is not a bijection");
    hit[static_cast<std::size_t>(y)] = true;
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Elem xy = g.mul(static_cast<Elem>(x), static_cast<Elem>(y));
      if (image[static_cast<std::size_t>(xy)] != g.mul(image[x], image[y]))
        throw Error(ErrorKind::kNotAutomorphism,
                    "map does not preserve the product of " + std::to_string(x) +
                        " and " + std::to_string(y));
    }
  }
  return unchecked(std::move(image));
}

Automorphism Automorphism::identity(std::size_t n) {
  std::vector<Elem> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<Elem>(i);
  return unchecked(std::move(id));
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<Elem>(i)) return false;
  return true;
}

Automorphism Automorphism::after(const Automorphism& other) const {
  std::vector<Elem> out(image_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = image_[static_cast<std::size_t>(other.image_[i])];
  return unchecked(std::move(out));
}

Automorphism Automorphism::inverse() const {
  std::vector<Elem> out(image_.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[static_cast<std::size_t>(image_[i])] = static_cast<Elem>(i);
  return unchecked(std::move(out));
}

Automorphism conjugation(const Group& g, Elem by) {
  std::vector<Elem> out(g.order());
  const Elem inv = g.inv(by);
  for (std::size_t x = 0; x < out.size(); ++x)
    out[x] = g.mul(g.mul(by, static_cast<Elem>(x)), inv);
  return Automorphism::unchecked(std::move(out));
}

std::size_t ImageHash::operator()(const std::vector<Elem>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Elem x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

// ---------------------------------------------------------------------------

void AutSubgroup::rebuild_index() {
  index_.clear();
  index_.reserve(members_.size());
  for (std::size_t i = 0; i < members_.size(); ++i)
    index_.emplace(members_[i].image_vector(), i);
}

std::optional<std::size_t> AutSubgroup::index_of(const Automorphism& a) const {
  auto it = index_.find(a.image_vector());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Automorphism> AutSubgroup::generators() const {
  std::vector<Automorphism> out;
  out.reserve(gens_.size());
  for (std::size_t i : gens_) out.push_back(members_[i]);
  return out;
}

AutSubgroup AutSubgroup::renamed(std::string name) const {
  AutSubgroup a = *this;
  a.name_ = std::move(name);
  return a;
}

AutSubgroup AutSubgroup::trivial(const Group& g, std::string name) {
  AutSubgroup a;
  a.degree_ = g.order();
  a.name_ = std::move(name);
  a.members_.push_back(Automorphism::identity(g.order()));
  a.rebuild_index();
  return a;
}

namespace {

// Grows `members` (closed under composition with gens[0..k)) to the closure
// under all of `gens`. done[p] counts the generators member p has been
// multiplied by.
void grow_closure(std::vector<Automorphism>& members,
                  std::unordered_map<std::vector<Elem>, std::size_t, ImageHash>& index,
                  std::vector<std::size_t>& done,
                  const std::vector<Automorphism>& gens, std::size_t cap) {
  for (std::size_t p = 0; p < members.size(); ++p) {
    for (; done[p] < gens.size(); ++done[p]) {
      Automorphism next = members[p].after(gens[done[p]]);
      if (index.contains(next.image_vector())) continue;
      if (members.size() >= cap)
        throw Error(ErrorKind::kCapExceeded,
                    "automorphism subgroup exceeds " + std::to_string(cap) +
                        " members");
      index.emplace(next.image_vector(), members.size());
      members.push_back(std::move(next));
      done.push_back(0);
    }
  }
}

}  // namespace

AutSubgroup AutSubgroup::generate(const Group& g, std::vector<Automorphism> gens,
                                  std::string name, const Limits& limits) {
  AutSubgroup a;
  a.degree_ = g.order();
  a.name_ = std::move(name);
  std::vector<Automorphism> validated;
  for (auto& gen : gens) {
    Automorphism checked = Automorphism::checked(g, gen.image_vector());
    if (checked.is_identity()) continue;
    if (std::find(validated.begin(), validated.end(), checked) != validated.end())
      continue;
    validated.push_back(std::move(checked));
  }
  a.members_.push_back(Automorphism::identity(g.order()));
  a.rebuild_index();
  std::vector<std::size_t> done{0};
  grow_closure(a.members_, a.index_, done, validated, limits.aut_member_cap);
  for (const auto& gen : validated) a.gens_.push_back(*a.index_of(gen));
  return a;
}

AutSubgroup AutSubgroup::from_closed_set(std::size_t degree,
                                         std::vector<Automorphism> members,
                                         std::string name) {
  AutSubgroup a;
  a.degree_ = degree;
  a.name_ = std::move(name);
  auto id = Automorphism::identity(degree);
  auto it = std::find(members.begin(), members.end(), id);
  if (it == members.end())
    throw Error(ErrorKind::kInvalidArgument, "closed set lacks the identity");
  std::rotate(members.begin(), it, it + 1);
  a.members_ = std::move(members);
  a.rebuild_index();

  // Greedy generators: take each member not yet in the running closure.
  std::vector<Automorphism> closure{id};
  std::unordered_map<std::vector<Elem>, std::size_t, ImageHash> closure_index;
  closure_index.emplace(id.image_vector(), 0);
  std::vector<std::size_t> done{0};
  std::vector<Automorphism> gens;
  for (std::size_t i = 1; i < a.members_.size() && closure.size() < a.members_.size();
       ++i) {
    if (closure_index.contains(a.members_[i].image_vector())) continue;
    gens.push_back(a.members_[i]);
    a.gens_.push_back(i);
    grow_closure(closure, closure_index, done, gens, a.members_.size());
  }
  if (closure.size() != a.members_.size())
    throw Error(ErrorKind::kNotClosed, "member set is not closed");
  return a;
}

Group aut_table(const AutSubgroup& a, const Limits& limits) {
  const std::size_t m = a.order();
  if (m > limits.table_cap)
    throw Error(ErrorKind::kCapExceeded,
                "automorphism subgroup of order " + std::to_string(m) +
                    " exceeds table cap");
  std::vector<Elem> flat(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto k = a.index_of(a.member(i).after(a.member(j)));
      if (!k) throw Error(ErrorKind::kNotClosed, "automorphism set is not closed");
      flat[i * m + j] = static_cast<Elem>(*k);
    }
  }
  return Group::from_flat(m, std::move(flat), a.name(), limits);
}

// ---------------------------------------------------------------------------

std::vector<Elem> greedy_generating_set(const Group& g) {
  const std::size_t n = g.order();
  std::vector<Elem> gens;
  Subgroup current = Subgroup::trivial(g);
  while (current.size() < n) {
    Elem best = -1;
    std::size_t best_size = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (current.contains(static_cast<Elem>(x))) continue;
      gens.push_back(static_cast<Elem>(x));
      const std::size_t size = generated_subgroup(g, gens).size();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = static_cast<Elem>(x);
        if (size == n) break;
      }
    }
    gens.push_back(best);
    current = generated_subgroup(g, gens);
  }
  return gens;
}

namespace {

// Backtracking over images of a generating set. A partial map is defined on
// H_i = <g_1..g_i>; extending by g_{i+1} -> y re-derives the map on H_{i+1}
// along Cayley-graph edges and fails on the first inconsistency or collision.
class AutSearch {
 public:
  struct State {
    std::vector<Elem> phi;   // -1 where undefined
    std::vector<bool> used;  // image of the defined part
    std::vector<Elem> domain;
  };

  explicit AutSearch(const Group& g) : g_(g), gens_(greedy_generating_set(g)) {
    const std::size_t n = g.order();
    for (std::size_t x = 0; x < n; ++x)
      by_order_[g.element_order(static_cast<Elem>(x))].push_back(static_cast<Elem>(x));
  }

  std::size_t levels() const { return gens_.size(); }

  State root() const {
    State s;
    s.phi.assign(g_.order(), -1);
    s.used.assign(g_.order(), false);
    s.phi[static_cast<std::size_t>(g_.identity())] = g_.identity();
    s.used[static_cast<std::size_t>(g_.identity())] = true;
    s.domain.push_back(g_.identity());
    return s;
  }

  const std::vector<Elem>& candidates(std::size_t level) const {
    static const std::vector<Elem> kEmpty;
    auto it = by_order_.find(g_.element_order(gens_[level]));
    return it == by_order_.end() ? kEmpty : it->second;
  }

  Elem generator(std::size_t level) const { return gens_[level]; }

  // Extends `s` (defined on H_level) by gens_[level] -> y.
  std::optional<State> extend(const State& s, std::size_t level, Elem y) const {
    if (s.used[static_cast<std::size_t>(y)]) return std::nullopt;
    State t = s;
    std::vector<Elem> images(level + 1);
    for (std::size_t j = 0; j < level; ++j)
      images[j] = t.phi[static_cast<std::size_t>(gens_[j])];
    images[level] = y;
    std::vector<Elem> queue = t.domain;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const Elem x = queue[q];
      const Elem px = t.phi[static_cast<std::size_t>(x)];
      for (std::size_t j = 0; j <= level; ++j) {
        const Elem z = g_.mul(x, gens_[j]);
        const Elem w = g_.mul(px, images[j]);
        Elem& pz = t.phi[static_cast<std::size_t>(z)];
        if (pz < 0) {
          if (t.used[static_cast<std::size_t>(w)]) return std::nullopt;
          pz = w;
          t.used[static_cast<std::size_t>(w)] = true;
          t.domain.push_back(z);
          queue.push_back(z);
        } else if (pz != w) {
          return std::nullopt;
        }
      }
    }
    return t;
  }

  // Calls visit(phi) on every complete extension of `s` from `level` on;
  // stops early when visit returns false. Returns false if stopped.
  bool enumerate(const State& s, std::size_t level,
                 const std::function<bool(const std::vector<Elem>&)>& visit,
                 std::mt19937_64* rng = nullptr) const {
    if (level == gens_.size()) return visit(s.phi);
    std::vector<Elem> order = candidates(level);
    if (rng != nullptr) std::shuffle(order.begin(), order.end(), *rng);
    for (Elem y : order) {
      auto next = extend(s, level, y);
      if (!next) continue;
      if (!enumerate(*next, level + 1, visit, rng)) return false;
    }
    return true;
  }

  bool extends(const State& s, std::size_t level) const {
    bool found = false;
    enumerate(s, level, [&](const std::vector<Elem>&) {
      found = true;
      return false;
    });
    return found;
  }

 private:
  const Group& g_;
  std::vector<Elem> gens_;
  std::unordered_map<std::size_t, std::vector<Elem>> by_order_;
};

void check_aut_cap(const Group& g, const Limits& limits) {
  if (g.order() > limits.aut_group_cap)
    throw Error(ErrorKind::kCapExceeded,
                "automorphism search capped at order " +
                    std::to_string(limits.aut_group_cap));
}

}  // namespace

std::uint64_t automorphism_group_order(const Group& g, const Limits& limits) {
  check_aut_cap(g, limits);
  AutSearch search(g);
  // |Aut| = prod_i |orbit of g_i under the pointwise stabilizer of
  // g_1..g_{i-1}|, and that orbit is exactly the set of images y for which
  // (g_1, .., g_{i-1}, y) extends to an automorphism.
  std::uint64_t total = 1;
  AutSearch::State base = search.root();
  for (std::size_t level = 0; level < search.levels(); ++level) {
    std::uint64_t orbit = 0;
    for (Elem y : search.candidates(level)) {
      auto next = search.extend(base, level, y);
      if (next && search.extends(*next, level + 1)) ++orbit;
    }
    total *= orbit;
    base = *search.extend(base, level, search.generator(level));
  }
  return total;
}

AutSubgroup automorphism_group(const Group& g, const Limits& limits) {
  const std::uint64_t expected = automorphism_group_order(g, limits);
  if (expected > limits.aut_member_cap)
    throw Error(ErrorKind::kCapExceeded,
                "|Aut(" + g.name() + ")| = " + std::to_string(expected) +
                    " exceeds member cap " + std::to_string(limits.aut_member_cap));
  AutSearch search(g);
  std::vector<Automorphism> members;
  members.reserve(expected);
  search.enumerate(search.root(), 0, [&](const std::vector<Elem>& phi) {
    members.push_back(Automorphism::checked(g, phi));
    return true;
  });
  if (members.size() != expected)
    throw Error(ErrorKind::kInvalidArgument,
                "automorphism count mismatch: enumerated " +
                    std::to_string(members.size()) + ", counted " +
                    std::to_string(expected));
  return AutSubgroup::from_closed_set(g.order(), std::move(members),
                                      "Aut(" + g.name() + ")");
}

std::vector<Automorphism> sample_automorphisms(const Group& g, std::size_t count,
                                               std::uint64_t seed,
                                               const Limits& limits) {
  check_aut_cap(g, limits);
  AutSearch search(g);
  std::mt19937_64 rng(seed);
  std::vector<Automorphism> out;
  for (std::size_t i = 0; i < count; ++i) {
    search.enumerate(
        search.root(), 0,
        [&](const std::vector<Elem>& phi) {
          out.push_back(Automorphism::checked(g, phi));
          return false;
        },
        &rng);
  }
  return out;
}

InnerAutomorphisms inner_automorphisms(const Group& g, const Limits& limits) {
  std::vector<Automorphism> members;
  std::unordered_map<std::vector<Elem>, std::size_t, ImageHash> seen;
  std::vector<Elem> bar(g.order());
  // conjugation by the identity comes first, so index 0 is the identity
  std::vector<Elem> order(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) order[x] = static_cast<Elem>(x);
  std::stable_partition(order.begin(), order.end(),
                        [&](Elem x) { return x == g.identity(); });
  for (Elem x : order) {
    Automorphism c = conjugation(g, x);
    auto [it, inserted] = seen.emplace(c.image_vector(), members.size());
    if (inserted) members.push_back(std::move(c));
    bar[static_cast<std::size_t>(x)] = static_cast<Elem>(it->second);
  }
  AutSubgroup inn = AutSubgroup::from_closed_set(g.order(), std::move(members),
                                                 "Inn(" + g.name() + ")");
  Group table = aut_table(inn, limits);
  GroupMap map = GroupMap::unchecked(table.order(), table.identity(), std::move(bar));
  return InnerAutomorphisms{std::move(inn), std::move(table), std::move(map)};
}

bool is_normalized_by_inner(const Group& g, const AutSubgroup& a) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Automorphism c = conjugation(g, static_cast<Elem>(x));
    const Automorphism c_inv = c.inverse();
    for (std::size_t gi : a.generator_indices()) {
      if (!a.contains(c_inv.after(a.member(gi)).after(c))) return false;
    }
  }
  return true;
}

bool contains_inner(const Group& g, const AutSubgroup& a) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (!a.contains(conjugation(g, static_cast<Elem>(x)))) return false;
  return true;
}

bool is_invariant(const AutSubgroup& a, const Subgroup& h) {
  for (std::size_t gi : a.generator_indices()) {
    const Automorphism& alpha = a.member(gi);
    for (Elem x : h.elements())
      if (!h.contains(alpha(x))) return false;
  }
  return true;
}

Subgroup a_invariant_closure(const Group& g, const AutSubgroup& a,
                             std::span<const Elem> s) {
  std::vector<bool> in(g.order(), false);
  std::vector<Elem> orbit;
  for (Elem x : s) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = true;
      orbit.push_back(x);
    }
  }
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (std::size_t gi : a.generator_indices()) {
      const Elem y = a.member(gi)(orbit[i]);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        orbit.push_back(y);
      }
    }
  }
  return generated_subgroup(g, orbit);
}

Subgroup fixed_points(const Group& g, const AutSubgroup& a) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Elem e = static_cast<Elem>(x);
    bool fixed = true;
    for (std::size_t gi : a.generator_indices()) {
      if (a.member(gi)(e) != e) {
        fixed = false;
        break;
      }
    }
    if (fixed) out.push_back(e);
  }
  return Subgroup::from_sorted_unchecked(g.order(), std::move(out));
}

InducedAction restrict_action_to_quotient(const Group& g, const Subgroup& n,
                                          const AutSubgroup& a,
                                          const Limits& limits) {
  if (!is_invariant(a, n))
    throw Error(ErrorKind::kNotInvariant,
                "subgroup of order " + std::to_string(n.size()) +
                    " is not invariant under " + a.name());
  Quotient q = quotient(g, n, limits);
  std::vector<Automorphism> induced;
  for (std::size_t gi : a.generator_indices()) {
    const Automorphism& alpha = a.member(gi);
    std::vector<Elem> img(q.group.order());
    for (std::size_t c = 0; c < img.size(); ++c)
      img[c] = q.projection(alpha(q.representatives[c]));
    induced.push_back(Automorphism::unchecked(std::move(img)));
  }
  AutSubgroup action =
      AutSubgroup::generate(q.group, std::move(induced), a.name() + "|G/N", limits);
  return InducedAction{std::move(q), std::move(action)};
}

AutSubgroup restrict_action_to_subgroup(const Group& g, const SubgroupAsGroup& h,
                                        const AutSubgroup& a, const Limits& limits) {
  std::vector<Elem> local(g.order(), -1);
  const auto emb = h.embedding.images();
  for (std::size_t i = 0; i < emb.size(); ++i)
    local[static_cast<std::size_t>(emb[i])] = static_cast<Elem>(i);
  std::vector<Automorphism> restricted;
  for (std::size_t gi : a.generator_indices()) {
    std::vector<Elem> img(emb.size());
    for (std::size_t i = 0; i < emb.size(); ++i) {
      const Elem y = local[static_cast<std::size_t>(a.member(gi)(emb[i]))];
      if (y < 0)
        throw Error(ErrorKind::kNotInvariant,
                    "subgroup is not invariant under " + a.name());
      img[i] = y;
    }
    restricted.push_back(Automorphism::unchecked(std::move(img)));
  }
  return AutSubgroup::generate(h.group, std::move(restricted), a.name() + "|H",
                               limits);
}

}  // namespace cseries
