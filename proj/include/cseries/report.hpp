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

#ifndef CSERIES_REPORT_HPP_
#define CSERIES_REPORT_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cseries/group.hpp"

namespace cseries {

enum class Verdict { kHolds, kFails, kPremisesUnmet };

std::string_view to_string(Verdict v);

using Quantity = std::variant<std::int64_t, double>;

// Outcome of one verification on one instance. The verdict is holds or
// fails only when premises_ok is set.
struct CheckReport {
  std::string check_name;
  std::string group_name;
  bool premises_ok = false;
  std::map<std::string, Quantity> quantities;
  Verdict verdict = Verdict::kPremisesUnmet;
  std::optional<nlohmann::json> witness;

  void set(const std::string& key, std::int64_t v) { quantities[key] = v; }
  void set(const std::string& key, std::uint64_t v) {
    quantities[key] = static_cast<std::int64_t>(v);
  }
  void set(const std::string& key, int v) {
    quantities[key] = static_cast<std::int64_t>(v);
  }
  void set(const std::string& key, bool v) {
    quantities[key] = static_cast<std::int64_t>(v ? 1 : 0);
  }
  void set_real(const std::string& key, double v) { quantities[key] = v; }

  std::int64_t integer(const std::string& key) const;
  double real(const std::string& key) const;

  // Records why the premises failed and sets the verdict accordingly.
  void unmet(const std::string& reason);
  // Sets premises_ok and the verdict from `holds`.
  void conclude(bool holds);
  void add_witness(const std::string& key, nlohmann::json value);
};

nlohmann::json to_json(const Subgroup& s);

// Stable order: (check_name, group_name), generation order within ties.
void sort_reports(std::vector<CheckReport>& reports);

}  // namespace cseries

#endif  // CSERIES_REPORT_HPP_
