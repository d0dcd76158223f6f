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

// Per-group sweeps over every check, and the runner that executes them.

#ifndef CSERIES_SWEEPS_HPP_
#define CSERIES_SWEEPS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cseries/group.hpp"
#include "cseries/morphisms.hpp"
#include "cseries/report.hpp"

namespace cseries {

// Check names in the order `verify all` runs them.
const std::vector<std::string>& check_names();
bool is_check_name(std::string_view name);

struct SweepInput {
  Group group;
  // Actions stored with the group (e.g. the Example's A); swept alongside
  // Inn(G) and Aut(G) where a check takes an action.
  std::vector<AutSubgroup> actions;
  // (p, n) when the group is an Example truncation.
  std::optional<std::pair<std::size_t, std::size_t>> example;
};

// Every report `check` produces for one group. Unknown names throw
// kInvalidArgument.
std::vector<CheckReport> sweep_group(const std::string& check, const SweepInput& in);

using SweepTask = std::function<std::vector<CheckReport>()>;

// Runs the tasks on up to `threads` workers (0: hardware concurrency) and
// returns the concatenated reports sorted by (check_name, group_name). The
// first exception thrown by any task is rethrown after all workers stop.
std::vector<CheckReport> run_tasks(std::vector<SweepTask> tasks, unsigned threads = 0);

}  // namespace cseries

#endif  // CSERIES_SWEEPS_HPP_
