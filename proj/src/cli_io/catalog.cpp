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

#include "cseries/catalog.hpp"

#include <unordered_set>

#include "cseries/checks.hpp"
#include "cseries/error.hpp"
#include "cseries/products.hpp"

namespace cseries {

namespace {

constexpr std::size_t kCyclicMax = 64;
constexpr std::size_t kDihedralMax = 64;
constexpr std::size_t kElementaryMax = 81;
constexpr std::size_t kProductMax = 64;

SweepInput plain(Group g) { return SweepInput{std::move(g), {}, std::nullopt}; }

// C_n : <x -> x^k>.
SweepInput cyclic_extension(std::size_t n, std::size_t k, std::string name) {
  const Group c = cyclic_group(n);
  std::vector<Elem> img(n);
  for (std::size_t x = 0; x < n; ++x) img[x] = static_cast<Elem>((x * k) % n);
  const AutSubgroup a = AutSubgroup::generate(
      c, {Automorphism::checked(c, std::move(img))}, "<x^" + std::to_string(k) + ">");
  return plain(semidirect_product(c, a, std::move(name)).group);
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> base;
  for (std::size_t n = 1; n <= kCyclicMax; ++n)
    base.push_back({"C" + std::to_string(n), n, "cyclic " + std::to_string(n),
                    [n] { return plain(cyclic_group(n)); }});
  for (std::size_t o = 6; o <= kDihedralMax; o += 2)
    base.push_back({"D" + std::to_string(o), o, "dihedral " + std::to_string(o),
                    [o] { return plain(dihedral_group(o)); }});
  base.push_back({"Q8", 8, "quaternion 8", [] { return plain(dicyclic_group(8)); }});
  base.push_back({"Q16", 16, "quaternion 16", [] { return plain(dicyclic_group(16)); }});
  base.push_back({"S3", 6, "symmetric 3", [] { return plain(symmetric_group(3)); }});
  base.push_back({"S4", 24, "symmetric 4", [] { return plain(symmetric_group(4)); }});
  for (std::size_t p : {2u, 3u, 5u, 7u}) {
    std::size_t order = p;
    for (std::size_t k = 2; order * p <= kElementaryMax; ++k) {
      order *= p;
      base.push_back({"E" + std::to_string(p) + "^" + std::to_string(k), order,
                      "elementary-abelian " + std::to_string(p) + "^" + std::to_string(k),
                      [p, k] { return plain(elementary_abelian_group(p, k)); }});
    }
  }
  base.push_back({"C7:C3", 21, "semidirect C7 <x^2>",
                  [] { return cyclic_extension(7, 2, "C7:C3"); }});
  base.push_back({"C5:C4", 20, "semidirect C5 <x^2>",
                  [] { return cyclic_extension(5, 2, "C5:C4"); }});
  base.push_back({"C9:C6", 54, "semidirect C9 <x^2>",
                  [] { return cyclic_extension(9, 2, "C9:C6"); }});
  const std::size_t product_bases = base.size();

  for (auto [p, n] : std::vector<std::pair<std::size_t, std::size_t>>{
           {3, 1}, {3, 2}, {5, 1}, {5, 2}}) {
    std::size_t order = p;
    for (std::size_t i = 0; i < n; ++i) order *= p;
    base.push_back({"Ex(" + std::to_string(p) + "," + std::to_string(n) + ")", order,
                    "example " + std::to_string(p) + " " + std::to_string(n),
                    [p, n] {
                      ExampleInstance ex = build_example(p, n);
                      return SweepInput{std::move(ex.group), {std::move(ex.action)},
                                        std::make_pair(p, n)};
                    }});
  }

  std::vector<CatalogEntry> all = base;
  for (std::size_t i = 0; i < product_bases; ++i) {
    if (base[i].order == 1) continue;
    for (std::size_t j = i; j < product_bases; ++j) {
      if (base[j].order == 1 || base[i].order * base[j].order > kProductMax) continue;
      const auto bi = base[i].build, bj = base[j].build;
      all.push_back({base[i].name + "x" + base[j].name, base[i].order * base[j].order,
                     "product " + base[i].name + " " + base[j].name, [bi, bj] {
                       return plain(direct_product(bi().group, bj().group));
                     }});
    }
  }
  std::unordered_set<std::string> names;
  for (const auto& e : all)
    if (!names.insert(e.name).second)
      throw Error(ErrorKind::kInvalidArgument, "duplicate catalog name " + e.name);
  return all;
}

}  // namespace

const std::vector<CatalogEntry>& standard_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : standard_catalog())
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace cseries
