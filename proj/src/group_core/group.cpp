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

#include "cseries/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "cseries/error.hpp"

namespace cseries {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotClosed: return "NotClosed";
    case ErrorKind::kNotAssociative: return "NotAssociative";
    case ErrorKind::kNoIdentity: return "NoIdentity";
    case ErrorKind::kNoInverse: return "NoInverse";
    case ErrorKind::kNotNormal: return "NotNormal";
    case ErrorKind::kNotInvariant: return "NotInvariant";
    case ErrorKind::kNotAChain: return "NotAChain";
    case ErrorKind::kNotAutomorphism: return "NotAutomorphism";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kOverflow: return "Overflow";
    case ErrorKind::kNotOddPrime: return "NotOddPrime";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kIoError: return "IoError";
  }
  return "Unknown";
}

const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

namespace {

std::string tuple_str(std::initializer_list<std::size_t> xs) {
  std::ostringstream out;
  out << '(';
  bool first = true;
  for (std::size_t x : xs) {
    if (!first) out << ", ";
    out << x;
    first = false;
  }
  out << ')';
  return out.str();
}

}  // namespace

Group Group::from_table(const std::vector<std::vector<int>>& raw,
                        std::string name, const Limits& limits) {
  const std::size_t n = raw.size();
  std::vector<Elem> flat;
  flat.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (raw[i].size() != n) {
      throw Error(ErrorKind::kInvalidArgument,
                  "row " + std::to_string(i) + " has " +
                      std::to_string(raw[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      int v = raw[i][j];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw Error(ErrorKind::kNotClosed,
                    "entry " + tuple_str({i, j}) + " = " + std::to_string(v) +
                        " is outside [0, " + std::to_string(n) + ")");
      }
      flat.push_back(static_cast<Elem>(v));
    }
  }
  return from_flat(n, std::move(flat), std::move(name), limits);
}

Group Group::from_flat(std::size_t n, std::vector<Elem> flat, std::string name,
                       const Limits& limits) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "empty table");
  if (n > limits.table_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "order " + std::to_string(n) + " exceeds table cap " +
                    std::to_string(limits.table_cap));
  }
  if (flat.size() != n * n) {
    throw Error(ErrorKind::kInvalidArgument, "table is not square");
  }
  for (std::size_t k = 0; k < flat.size(); ++k) {
    if (flat[k] < 0 || static_cast<std::size_t>(flat[k]) >= n) {
      throw Error(ErrorKind::kNotClosed,
                  "entry " + tuple_str({k / n, k % n}) + " = " +
                      std::to_string(flat[k]) + " is outside [0, " +
                      std::to_string(n) + ")");
    }
  }

  Group g;
  g.order_ = n;
  g.table_ = std::move(flat);
  g.name_ = std::move(name);

  auto assoc_fails = [&](std::size_t x, std::size_t y, std::size_t z) {
    Elem xy = g.table_[x * n + y];
    Elem yz = g.table_[y * n + z];
    return g.table_[static_cast<std::size_t>(xy) * n + z] !=
           g.table_[x * n + static_cast<std::size_t>(yz)];
  };
  if (n <= limits.exhaustive_assoc_cap) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (assoc_fails(x, y, z))
            throw Error(ErrorKind::kNotAssociative,
                        "triple " + tuple_str({x, y, z}));
  } else {
    std::mt19937_64 rng(0x5eedu);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (int s = 0; s < (1 << 18); ++s) {
      std::size_t x = pick(rng), y = pick(rng), z = pick(rng);
      if (assoc_fails(x, y, z))
        throw Error(ErrorKind::kNotAssociative,
                    "triple " + tuple_str({x, y, z}));
    }
  }

  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = g.table_[e * n + x] == static_cast<Elem>(x) &&
           g.table_[x * n + e] == static_cast<Elem>(x);
    }
    if (ok) {
      g.identity_ = static_cast<Elem>(e);
      found = true;
    }
  }
  if (!found) throw Error(ErrorKind::kNoIdentity, "no two-sided identity");

  g.inverse_.assign(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (g.table_[x * n + y] == g.identity_ &&
          g.table_[y * n + x] == g.identity_) {
        g.inverse_[x] = static_cast<Elem>(y);
        break;
      }
    }
    if (g.inverse_[x] < 0) {
      throw Error(ErrorKind::kNoInverse,
                  "element " + std::to_string(x) + " has no inverse");
    }
  }
  return g;
}

Group Group::trivial(std::string name) {
  return from_flat(1, {0}, std::move(name));
}

Elem Group::pow(Elem x, std::size_t k) const {
  Elem result = identity_;
  Elem base = x;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    base = mul(base, base);
    k >>= 1u;
  }
  return result;
}

std::size_t Group::element_order(Elem x) const {
  std::size_t k = 1;
  for (Elem y = x; y != identity_; y = mul(y, x)) ++k;
  return k;
}

bool Group::is_abelian() const {
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = x + 1; y < order_; ++y)
      if (table_[x * order_ + y] != table_[y * order_ + x]) return false;
  return true;
}

std::vector<std::vector<int>> Group::to_rows() const {
  std::vector<std::vector<int>> rows(order_, std::vector<int>(order_));
  for (std::size_t x = 0; x < order_; ++x)
    for (std::size_t y = 0; y < order_; ++y) rows[x][y] = table_[x * order_ + y];
  return rows;
}

Group Group::renamed(std::string name) const {
  Group g = *this;
  g.name_ = std::move(name);
  return g;
}

// ---------------------------------------------------------------------------

Subgroup Subgroup::from_sorted_unchecked(std::size_t n, std::vector<Elem> elems) {
  Subgroup s;
  s.mask_.assign(n, false);
  for (Elem x : elems) s.mask_[static_cast<std::size_t>(x)] = true;
  s.elems_ = std::move(elems);
  return s;
}

Subgroup Subgroup::checked(const Group& parent, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (Elem x : elems) {
    if (x < 0 || static_cast<std::size_t>(x) >= parent.order())
      throw Error(ErrorKind::kInvalidArgument,
                  "element " + std::to_string(x) + " out of range");
  }
  Subgroup s = from_sorted_unchecked(parent.order(), std::move(elems));
  if (!s.contains(parent.identity()))
    throw Error(ErrorKind::kNotClosed, "subset lacks the identity");
  for (Elem x : s.elems_) {
    if (!s.contains(parent.inv(x)))
      throw Error(ErrorKind::kNotClosed,
                  "inverse of " + std::to_string(x) + " missing");
    for (Elem y : s.elems_) {
      if (!s.contains(parent.mul(x, y)))
        throw Error(ErrorKind::kNotClosed,
                    "product " + tuple_str({static_cast<std::size_t>(x),
                                            static_cast<std::size_t>(y)}) +
                        " missing");
    }
  }
  return s;
}

Subgroup Subgroup::trivial(const Group& parent) {
  return from_sorted_unchecked(parent.order(), {parent.identity()});
}

Subgroup Subgroup::whole(const Group& parent) {
  std::vector<Elem> all(parent.order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Elem>(i);
  return from_sorted_unchecked(parent.order(), std::move(all));
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  if (elems_.size() > other.elems_.size()) return false;
  return std::all_of(elems_.begin(), elems_.end(),
                     [&](Elem x) { return other.contains(x); });
}

bool witness_less(const Subgroup& a, const Subgroup& b) {
  if (a.elems_.size() != b.elems_.size())
    return a.elems_.size() < b.elems_.size();
  return a.elems_ < b.elems_;
}

// ---------------------------------------------------------------------------

GroupMap GroupMap::unchecked(std::size_t target_order, Elem target_identity,
                             std::vector<Elem> image) {
  GroupMap m;
  m.image_ = std::move(image);
  m.target_order_ = target_order;
  m.target_identity_ = target_identity;
  return m;
}

GroupMap GroupMap::checked(const Group& source, const Group& target,
                           std::vector<Elem> image) {
  if (image.size() != source.order())
    throw Error(ErrorKind::kInvalidArgument, "map has the wrong length");
  for (Elem y : image) {
    if (y < 0 || static_cast<std::size_t>(y) >= target.order())
      throw Error(ErrorKind::kInvalidArgument, "image outside the target");
  }
  GroupMap m = unchecked(target.order(), target.identity(), std::move(image));
  if (!m.preserves(source, target))
    throw Error(ErrorKind::kInvalidArgument, "map is not a homomorphism");
  return m;
}

bool GroupMap::preserves(const Group& source, const Group& target) const {
  const std::size_t n = source.order();
  if (image_.size() != n || target_order_ != target.order()) return false;
  if (image_[static_cast<std::size_t>(source.identity())] != target.identity())
    return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (image_[static_cast<std::size_t>(
              source.mul(static_cast<Elem>(x), static_cast<Elem>(y)))] !=
          target.mul(image_[x], image_[y]))
        return false;
  return true;
}

std::vector<Elem> GroupMap::kernel() const {
  std::vector<Elem> k;
  for (std::size_t x = 0; x < image_.size(); ++x)
    if (image_[x] == target_identity_) k.push_back(static_cast<Elem>(x));
  return k;
}

bool GroupMap::is_bijective() const {
  if (image_.size() != target_order_) return false;
  std::vector<bool> seen(target_order_, false);
  for (Elem y : image_) {
    if (seen[static_cast<std::size_t>(y)]) return false;
    seen[static_cast<std::size_t>(y)] = true;
  }
  return true;
}

// ---------------------------------------------------------------------------

Subgroup generated_subgroup(const Group& g, std::span<const Elem> gens) {
  const std::size_t n = g.order();
  std::vector<bool> in(n, false);
  std::vector<Elem> elems{g.identity()};
  in[static_cast<std::size_t>(g.identity())] = true;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    Elem x = elems[i];
    for (Elem s : gens) {
      Elem y = g.mul(x, s);
      if (!in[static_cast<std::size_t>(y)]) {
        in[static_cast<std::size_t>(y)] = true;
        elems.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return Subgroup::from_sorted_unchecked(n, std::move(elems));
}

Subgroup centralizer(const Group& g, std::span<const Elem> s) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Elem e = static_cast<Elem>(x);
    bool commutes = std::all_of(s.begin(), s.end(), [&](Elem y) {
      return g.mul(e, y) == g.mul(y, e);
    });
    if (commutes) out.push_back(e);
  }
  return Subgroup::from_sorted_unchecked(g.order(), std::move(out));
}

Subgroup center(const Group& g) {
  return centralizer(g, Subgroup::whole(g).elements());
}

Subgroup commutator_subgroup(const Group& g, const Subgroup& h,
                             const Subgroup& k) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> gens;
  for (Elem x : h.elements()) {
    for (Elem y : k.elements()) {
      Elem c = g.commutator(x, y);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        gens.push_back(c);
      }
    }
  }
  return generated_subgroup(g, gens);
}

bool is_normal(const Group& g, const Subgroup& h) {
  for (std::size_t x = 0; x < g.order(); ++x) {
    const Elem e = static_cast<Elem>(x);
    for (Elem y : h.elements()) {
      if (!h.contains(g.mul(g.mul(g.inv(e), y), e))) return false;
    }
  }
  return true;
}

Subgroup intersection(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> out;
  for (Elem x : a.elements())
    if (b.contains(x)) out.push_back(x);
  return Subgroup::from_sorted_unchecked(g.order(), std::move(out));
}

Subgroup join(const Group& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Elem> gens(a.elements().begin(), a.elements().end());
  gens.insert(gens.end(), b.elements().begin(), b.elements().end());
  return generated_subgroup(g, gens);
}

Subgroup normal_closure(const Group& g, std::span<const Elem> s) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Elem> gens;
  for (Elem y : s) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      const Elem e = static_cast<Elem>(x);
      Elem c = g.mul(g.mul(g.inv(e), y), e);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        gens.push_back(c);
      }
    }
  }
  return generated_subgroup(g, gens);
}

Subgroup preimage(const Group& source, const GroupMap& map,
                  const Subgroup& target_sub) {
  std::vector<Elem> out;
  for (std::size_t x = 0; x < source.order(); ++x)
    if (target_sub.contains(map(static_cast<Elem>(x))))
      out.push_back(static_cast<Elem>(x));
  return Subgroup::from_sorted_unchecked(source.order(), std::move(out));
}

Subgroup image(const Group& target, const GroupMap& map, const Subgroup& sub) {
  std::vector<bool> seen(target.order(), false);
  std::vector<Elem> out;
  for (Elem x : sub.elements()) {
    Elem y = map(x);
    if (!seen[static_cast<std::size_t>(y)]) {
      seen[static_cast<std::size_t>(y)] = true;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return Subgroup::from_sorted_unchecked(target.order(), std::move(out));
}

Quotient quotient(const Group& g, const Subgroup& n, const Limits& limits) {
  if (n.parent_order() != g.order())
    throw Error(ErrorKind::kInvalidArgument, "subgroup of a different group");
  if (!is_normal(g, n))
    throw Error(ErrorKind::kNotNormal,
                "subgroup of order " + std::to_string(n.size()) +
                    " is not normal in " + g.name());
  const std::size_t order = g.order();
  std::vector<Elem> coset(order, -1);
  std::vector<Elem> reps;
  for (std::size_t x = 0; x < order; ++x) {
    if (coset[x] >= 0) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(static_cast<Elem>(x));
    for (Elem k : n.elements())
      coset[static_cast<std::size_t>(g.mul(static_cast<Elem>(x), k))] = id;
  }
  const std::size_t m = reps.size();
  std::vector<Elem> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      flat[i * m + j] = coset[static_cast<std::size_t>(g.mul(reps[i], reps[j]))];
  Group q = Group::from_flat(m, std::move(flat), g.name() + "/N", limits);
  GroupMap proj = GroupMap::unchecked(m, q.identity(), std::move(coset));
  return Quotient{std::move(q), std::move(proj), std::move(reps)};
}

SubgroupAsGroup as_group(const Group& g, const Subgroup& h, std::string name) {
  const std::size_t m = h.size();
  std::vector<Elem> local(g.order(), -1);
  for (std::size_t i = 0; i < m; ++i)
    local[static_cast<std::size_t>(h.elements()[i])] = static_cast<Elem>(i);
  std::vector<Elem> flat(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      flat[i * m + j] = local[static_cast<std::size_t>(
          g.mul(h.elements()[i], h.elements()[j]))];
  Group sub = Group::from_flat(m, std::move(flat), std::move(name));
  std::vector<Elem> emb(h.elements().begin(), h.elements().end());
  return SubgroupAsGroup{std::move(sub),
                         GroupMap::unchecked(g.order(), g.identity(),
                                             std::move(emb))};
}

std::vector<std::vector<Elem>> conjugacy_classes(const Group& g) {
  const std::size_t n = g.order();
  std::vector<bool> done(n, false);
  std::vector<std::vector<Elem>> classes;
  for (std::size_t x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::vector<Elem> cls;
    for (std::size_t y = 0; y < n; ++y) {
      const Elem c = g.mul(g.mul(g.inv(static_cast<Elem>(y)), static_cast<Elem>(x)),
                           static_cast<Elem>(y));
      if (!done[static_cast<std::size_t>(c)]) {
        done[static_cast<std::size_t>(c)] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

namespace {

// Breadth-first closure over "blocks" (conjugacy classes or singletons):
// each discovered subgroup is extended by every block it does not contain.
std::vector<Subgroup> lattice_closure(const Group& g,
                                      const std::vector<std::vector<Elem>>& blocks) {
  struct Node {
    Subgroup sub;
    std::vector<Elem> gens;
  };
  std::vector<Node> nodes;
  // Sorted element lists of every subgroup found so far.
  std::vector<std::vector<Elem>> known;
  auto key_of = [](const Subgroup& s) {
    return std::vector<Elem>(s.elements().begin(), s.elements().end());
  };
  auto find_known = [&](const std::vector<Elem>& k) {
    auto it = std::lower_bound(known.begin(), known.end(), k);
    return std::make_pair(it, it != known.end() && *it == k);
  };

  Subgroup triv = Subgroup::trivial(g);
  known.push_back(key_of(triv));
  nodes.push_back({triv, {}});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const auto& block : blocks) {
      if (nodes[i].sub.contains(block.front())) continue;
      std::vector<Elem> gens = nodes[i].gens;
      gens.insert(gens.end(), block.begin(), block.end());
      Subgroup next = generated_subgroup(g, gens);
      auto k = key_of(next);
      auto [it, found] = find_known(k);
      if (found) continue;
      known.insert(it, std::move(k));
      nodes.push_back({std::move(next), std::move(gens)});
    }
  }
  std::vector<Subgroup> out;
  out.reserve(nodes.size());
  for (auto& node : nodes) out.push_back(std::move(node.sub));
  std::sort(out.begin(), out.end(), witness_less);
  return out;
}

}  // namespace

std::vector<Subgroup> normal_subgroups(const Group& g, const Limits& limits) {
  if (g.order() > limits.enumeration_cap)
    throw Error(ErrorKind::kCapExceeded,
                "normal subgroup enumeration capped at order " +
                    std::to_string(limits.enumeration_cap));
  auto classes = conjugacy_classes(g);
  classes.erase(classes.begin());  // identity class
  return lattice_closure(g, classes);
}

std::vector<Subgroup> all_subgroups(const Group& g, const Limits& limits) {
  if (g.order() > limits.enumeration_cap)
    throw Error(ErrorKind::kCapExceeded,
                "subgroup enumeration capped at order " +
                    std::to_string(limits.enumeration_cap));
  std::vector<std::vector<Elem>> singles;
  for (std::size_t x = 0; x < g.order(); ++x)
    if (static_cast<Elem>(x) != g.identity()) singles.push_back({static_cast<Elem>(x)});
  return lattice_closure(g, singles);
}

// ---------------------------------------------------------------------------

Group cyclic_group(std::size_t n) {
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) flat[x * n + y] = static_cast<Elem>((x + y) % n);
  return Group::from_flat(n, std::move(flat), "C" + std::to_string(n));
}

Group dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0)
    throw Error(ErrorKind::kInvalidArgument, "dihedral order must be even");
  const std::size_t n = order / 2;
  // index a*n + i is s^a r^i, with r s = s r^-1.
  std::vector<Elem> flat(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      std::size_t a = x / n, i = x % n, b = y / n, j = y % n;
      std::size_t rot = b == 0 ? (i + j) % n : (n - i + j) % n;
      flat[x * order + y] = static_cast<Elem>(((a + b) % 2) * n + rot);
    }
  }
  return Group::from_flat(order, std::move(flat), "D" + std::to_string(order));
}

Group dicyclic_group(std::size_t order) {
  if (order < 8 || order % 4 != 0)
    throw Error(ErrorKind::kInvalidArgument, "dicyclic order must be 4m, m >= 2");
  const std::size_t m = order / 4;
  const std::size_t k = 2 * m;
  // index e*k + i is a^i x^e; x a = a^-1 x, x^2 = a^m.
  std::vector<Elem> flat(order * order);
  for (std::size_t p = 0; p < order; ++p) {
    for (std::size_t q = 0; q < order; ++q) {
      std::size_t e = p / k, i = p % k, f = q / k, j = q % k;
      std::size_t pw = e == 0 ? (i + j) % k : (i + k - j) % k;
      std::size_t x = e + f;
      if (x == 2) {
        pw = (pw + m) % k;
        x = 0;
      }
      flat[p * order + q] = static_cast<Elem>(x * k + pw);
    }
  }
  return Group::from_flat(order, std::move(flat), "Q" + std::to_string(order));
}

Group symmetric_group(std::size_t degree) {
  if (degree == 0) throw Error(ErrorKind::kInvalidArgument, "degree must be >= 1");
  std::vector<std::vector<int>> gens;
  if (degree >= 2) {
    std::vector<int> swap(degree), cycle(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      swap[i] = static_cast<int>(i);
      cycle[i] = static_cast<int>((i + 1) % degree);
    }
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
    if (degree > 2) gens.push_back(cycle);
  }
  return permutation_group(degree, gens, "S" + std::to_string(degree));
}

Group elementary_abelian_group(std::size_t p, std::size_t rank) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < rank; ++i) {
    n *= p;
    if (n > default_limits().table_cap)
      throw Error(ErrorKind::kCapExceeded, "elementary abelian group too large");
  }
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t a = x, b = y, out = 0, place = 1;
      for (std::size_t i = 0; i < rank; ++i) {
        out += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
      }
      flat[x * n + y] = static_cast<Elem>(out);
    }
  }
  return Group::from_flat(n, std::move(flat),
                          "E" + std::to_string(p) + "^" + std::to_string(rank));
}

Group permutation_group(std::size_t degree,
                        const std::vector<std::vector<int>>& perms,
                        std::string name, const Limits& limits) {
  for (const auto& p : perms) {
    std::vector<bool> hit(degree, false);
    if (p.size() != degree)
      throw Error(ErrorKind::kInvalidArgument, "permutation has wrong degree");
    for (int v : p) {
      if (v < 0 || static_cast<std::size_t>(v) >= degree ||
          hit[static_cast<std::size_t>(v)])
        throw Error(ErrorKind::kInvalidArgument, "not a permutation");
      hit[static_cast<std::size_t>(v)] = true;
    }
  }
  std::vector<int> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<int>(i);

  std::vector<std::vector<int>> elems{id};
  std::vector<std::pair<std::vector<int>, Elem>> index{{id, 0}};
  auto lookup = [&](const std::vector<int>& p) -> Elem {
    auto it = std::lower_bound(
        index.begin(), index.end(), p,
        [](const auto& entry, const std::vector<int>& key) { return entry.first < key; });
    if (it != index.end() && it->first == p) return it->second;
    return -1;
  };
  auto insert = [&](const std::vector<int>& p, Elem id_) {
    auto it = std::lower_bound(
        index.begin(), index.end(), p,
        [](const auto& entry, const std::vector<int>& key) { return entry.first < key; });
    index.insert(it, {p, id_});
  };
  auto then = [&](const std::vector<int>& first, const std::vector<int>& second) {
    std::vector<int> out(degree);
    for (std::size_t i = 0; i < degree; ++i)
      out[i] = second[static_cast<std::size_t>(first[i])];
    return out;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : perms) {
      auto next = then(elems[i], s);
      if (lookup(next) >= 0) continue;
      if (elems.size() >= limits.table_cap)
        throw Error(ErrorKind::kCapExceeded,
                    "permutation group exceeds table cap " +
                        std::to_string(limits.table_cap));
      insert(next, static_cast<Elem>(elems.size()));
      elems.push_back(std::move(next));
    }
  }
  const std::size_t n = elems.size();
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) flat[x * n + y] = lookup(then(elems[x], elems[y]));
  return Group::from_flat(n, std::move(flat), std::move(name), limits);
}

}  // namespace cseries
