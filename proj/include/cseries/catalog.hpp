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

// The standard group catalog. Entries are built lazily; the order is known
// up front so callers can filter before paying for construction.

#ifndef CSERIES_CATALOG_HPP_
#define CSERIES_CATALOG_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cseries/sweeps.hpp"

namespace cseries {

struct CatalogEntry {
  std::string name;
  std::size_t order = 0;
  // Human-readable constructor, e.g. "dihedral 8" or "product C2 S3".
  std::string constructor;
  std::function<SweepInput()> build;
};

// Cyclic C1..C64, dihedral D6..D64, Q8, Q16, S3, S4, elementary abelian
// p^k <= 81, three semidirect products, the Example truncations Ex(3,1),
// Ex(3,2), Ex(5,1), Ex(5,2), then every unordered pair product of
// non-trivial base entries (Examples excluded) of order <= 64.
const std::vector<CatalogEntry>& standard_catalog();

const CatalogEntry* find_entry(std::string_view name);

}  // namespace cseries

#endif  // CSERIES_CATALOG_HPP_
