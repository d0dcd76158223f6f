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

#include "cseries/report.hpp"

#include <algorithm>

#include "cseries/error.hpp"

namespace cseries {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kPremisesUnmet: return "premises_unmet";
  }
  return "premises_unmet";
}

std::int64_t CheckReport::integer(const std::string& key) const {
  auto it = quantities.find(key);
  if (it == quantities.end())
    throw Error(ErrorKind::kInvalidArgument, "missing quantity " + key);
  if (auto* v = std::get_if<std::int64_t>(&it->second)) return *v;
  return static_cast<std::int64_t>(std::get<double>(it->second));
}

double CheckReport::real(const std::string& key) const {
  auto it = quantities.find(key);
  if (it == quantities.end())
    throw Error(ErrorKind::kInvalidArgument, "missing quantity " + key);
  if (auto* v = std::get_if<double>(&it->second)) return *v;
  return static_cast<double>(std::get<std::int64_t>(it->second));
}

void CheckReport::unmet(const std::string& reason) {
  premises_ok = false;
  verdict = Verdict::kPremisesUnmet;
  add_witness("unmet", reason);
}

void CheckReport::conclude(bool holds) {
  premises_ok = true;
  verdict = holds ? Verdict::kHolds : Verdict::kFails;
}

void CheckReport::add_witness(const std::string& key, nlohmann::json value) {
  if (!witness) witness = nlohmann::json::object();
  (*witness)[key] = std::move(value);
}

nlohmann::json to_json(const Subgroup& s) {
  return nlohmann::json(std::vector<Elem>(s.elements().begin(), s.elements().end()));
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) {
                     if (a.check_name != b.check_name) return a.check_name < b.check_name;
                     return a.group_name < b.group_name;
                   });
}

}  // namespace cseries
