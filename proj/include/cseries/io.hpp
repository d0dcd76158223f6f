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

// Cayley and permutation file formats, and report serialization.
//
// Cayley file: a JSON object {"mul": [[..], ..], "name": "..", "order": n}
// with zero-based indices. The identity may sit at any index.
//
// Permutation file:
//   # comment
//   N=4
//   (1 2)(3 4)
//   (1 2 3)
// Points are 1-based; each line after the header is one generator.

#ifndef CSERIES_IO_HPP_
#define CSERIES_IO_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cseries/group.hpp"
#include "cseries/report.hpp"

namespace cseries {

Group parse_cayley_text(std::string_view text, const std::string& source = "<text>");
Group parse_cayley_file(const std::filesystem::path& path);
// Keys sorted, one table row per line, trailing newline.
std::string cayley_text(const Group& g);
void write_cayley_file(const Group& g, const std::filesystem::path& path);

Group parse_permutation_text(std::string_view text, std::string name = "perm",
                             const std::string& source = "<text>");
Group parse_permutation_file(const std::filesystem::path& path);

struct ReportDocument {
  std::string tool_version;
  std::string timestamp;
  std::vector<CheckReport> reports;
};

struct VerdictCounts {
  std::size_t holds = 0, fails = 0, premises_unmet = 0;
};
VerdictCounts tally(const std::vector<CheckReport>& reports);

enum class ReportFormat { kJson, kCsv };

// Reports are sorted before rendering; doubles use 12 significant digits.
std::string render_report(const ReportDocument& doc, ReportFormat format);
void emit_report(const ReportDocument& doc, ReportFormat format,
                 const std::filesystem::path& path);

}  // namespace cseries

#endif  // CSERIES_IO_HPP_
