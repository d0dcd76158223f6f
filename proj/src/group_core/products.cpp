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

#include "cseries/products.hpp"

#include "cseries/error.hpp"

namespace cseries {

namespace {

void check_cap(std::size_t a, std::size_t b, const Limits& limits) {
  if (a * b > limits.table_cap)
    throw Error(ErrorKind::kCapExceeded,
                "product order " + std::to_string(a * b) + " exceeds table cap " +
                    std::to_string(limits.table_cap));
}

}  // namespace

Group direct_product(const Group& g, const Group& h, const Limits& limits) {
  const std::size_t ng = g.order(), nh = h.order();
  check_cap(ng, nh, limits);
  const std::size_t n = ng * nh;
  std::vector<Elem> flat(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem gx = static_cast<Elem>(x / nh), hx = static_cast<Elem>(x % nh);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem gy = static_cast<Elem>(y / nh), hy = static_cast<Elem>(y % nh);
      flat[x * n + y] = static_cast<Elem>(
          static_cast<std::size_t>(g.mul(gx, gy)) * nh +
          static_cast<std::size_t>(h.mul(hx, hy)));
    }
  }
  return Group::from_flat(n, std::move(flat), g.name() + "x" + h.name(), limits);
}

SemidirectProduct semidirect_product(const Group& n, const AutSubgroup& a,
                                     std::string name, const Limits& limits) {
  const std::size_t nn = n.order(), na = a.order();
  if (a.degree() != nn)
    throw Error(ErrorKind::kInvalidArgument,
                "action is on a group of a different order");
  check_cap(nn, na, limits);
  const Group acting = aut_table(a, limits);
  const std::size_t order = nn * na;
  std::vector<Elem> flat(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    const Elem n1 = static_cast<Elem>(x / na);
    const std::size_t a1 = x % na;
    const Automorphism& act = a.member(a1);
    for (std::size_t y = 0; y < order; ++y) {
      const Elem n2 = static_cast<Elem>(y / na);
      const Elem a2 = static_cast<Elem>(y % na);
      const Elem prod_n = n.mul(n1, act(n2));
      const Elem prod_a = acting.mul(static_cast<Elem>(a1), a2);
      flat[x * order + y] = static_cast<Elem>(
          static_cast<std::size_t>(prod_n) * na + static_cast<std::size_t>(prod_a));
    }
  }
  if (name.empty()) name = n.name() + ":" + a.name();
  Group s = Group::from_flat(order, std::move(flat), std::move(name), limits);

  const std::size_t id_a = static_cast<std::size_t>(acting.identity());
  std::vector<Elem> emb_n(nn), emb_a(na);
  for (std::size_t i = 0; i < nn; ++i)
    emb_n[i] = static_cast<Elem>(i * na + id_a);
  for (std::size_t j = 0; j < na; ++j)
    emb_a[j] = static_cast<Elem>(static_cast<std::size_t>(n.identity()) * na + j);
  GroupMap en = GroupMap::unchecked(order, s.identity(), std::move(emb_n));
  GroupMap ea = GroupMap::unchecked(order, s.identity(), std::move(emb_a));
  return SemidirectProduct{std::move(s), std::move(en), std::move(ea)};
}

}  // namespace cseries
