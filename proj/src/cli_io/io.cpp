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

#include "cseries/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cseries/error.hpp"

namespace cseries {

namespace {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorKind::kIoError, "write failed for " + path.string());
}

std::string position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] void parse_fail(const std::string& source, const std::string& where,
                             const std::string& what) {
  throw Error(ErrorKind::kParseError, source + ":" + where + ": " + what);
}

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s = buf;
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void write_json(std::ostringstream& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out << ",\n";
        first = false;
        out << inner << json(it.key()).dump() << ": ";
        write_json(out, it.value(), indent + 1);
      }
      out << "\n" << pad << "}";
      return;
    }
    case json::value_t::array: {
      bool scalars = true;
      for (const auto& e : v) scalars = scalars && !e.is_structured();
      if (scalars) {
        out << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out << ", ";
          write_json(out, v[i], indent + 1);
        }
        out << "]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ",\n";
        out << inner;
        write_json(out, v[i], indent + 1);
      }
      out << "\n" << pad << "]";
      return;
    }
    case json::value_t::number_float:
      out << format_double(v.get<double>());
      return;
    default:
      out << v.dump();
  }
}

json report_json(const CheckReport& r) {
  json q = json::object();
  for (const auto& [k, v] : r.quantities) {
    if (std::holds_alternative<std::int64_t>(v)) {
      q[k] = std::get<std::int64_t>(v);
    } else {
      q[k] = std::get<double>(v);
    }
  }
  json j = {{"check_name", r.check_name},
            {"group_name", r.group_name},
            {"premises_ok", r.premises_ok},
            {"quantities", q},
            {"verdict", std::string(to_string(r.verdict))}};
  if (r.witness) j["witness"] = *r.witness;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_json(const ReportDocument& doc, const std::vector<CheckReport>& reports) {
  const VerdictCounts c = tally(reports);
  json reps = json::array();
  for (const auto& r : reports) reps.push_back(report_json(r));
  json d = {{"tool_version", doc.tool_version},
            {"timestamp", doc.timestamp},
            {"summary",
             {{"holds", c.holds}, {"fails", c.fails}, {"premises_unmet", c.premises_unmet}}},
            {"reports", reps}};
  std::ostringstream out;
  write_json(out, d, 0);
  out << "\n";
  return out.str();
}

std::string render_csv(const std::vector<CheckReport>& reports) {
  std::set<std::string> keys;
  for (const auto& r : reports)
    for (const auto& [k, v] : r.quantities) keys.insert(k);
  std::ostringstream out;
  out << "check_name,group_name,premises_ok,verdict";
  for (const auto& k : keys) out << "," << csv_field(k);
  out << ",witness\n";
  for (const auto& r : reports) {
    out << csv_field(r.check_name) << "," << csv_field(r.group_name) << ","
        << (r.premises_ok ? "true" : "false") << "," << to_string(r.verdict);
    for (const auto& k : keys) {
      out << ",";
      auto it = r.quantities.find(k);
      if (it == r.quantities.end()) continue;
      if (std::holds_alternative<std::int64_t>(it->second)) {
        out << std::get<std::int64_t>(it->second);
      } else {
        out << format_double(std::get<double>(it->second));
      }
    }
    out << "," << (r.witness ? csv_field(r.witness->dump()) : "");
    out << "\n";
  }
  return out.str();
}

}  // namespace

Group parse_cayley_text(std::string_view text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
    parse_fail(source, position(text, off), "malformed JSON");
  }
  if (!doc.is_object()) parse_fail(source, "1:1", "expected an object");
  for (const char* key : {"name", "order", "mul"})
    if (!doc.contains(key)) parse_fail(source, "1:1", std::string("missing field '") + key + "'");
  if (!doc["name"].is_string()) parse_fail(source, "1:1", "'name' must be a string");
  if (!doc["order"].is_number_unsigned() || doc["order"].get<std::uint64_t>() == 0)
    parse_fail(source, "1:1", "'order' must be a positive integer");
  const std::size_t n = doc["order"].get<std::size_t>();
  const json& mul = doc["mul"];
  if (!mul.is_array() || mul.size() != n)
    parse_fail(source, "1:1", "'mul' must be an array of " + std::to_string(n) + " rows");
  std::vector<std::vector<int>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = mul[i];
    if (!row.is_array() || row.size() != n)
      parse_fail(source, "1:1", "row " + std::to_string(i) + " must have " +
                                    std::to_string(n) + " entries");
    rows[i].reserve(n);
    for (const json& v : row) {
      if (!v.is_number_integer())
        parse_fail(source, "1:1", "row " + std::to_string(i) + " holds a non-integer");
      const std::int64_t x = v.get<std::int64_t>();
      if (x < 0 || x >= static_cast<std::int64_t>(n))
        throw Error(ErrorKind::kNotClosed, "row " + std::to_string(i) + " entry " +
                                               std::to_string(x) + " is outside 0.." +
                                               std::to_string(n - 1));
      rows[i].push_back(static_cast<int>(x));
    }
  }
  return Group::from_table(rows, doc["name"].get<std::string>());
}

Group parse_cayley_file(const std::filesystem::path& path) {
  return parse_cayley_text(read_file(path), path.string());
}

std::string cayley_text(const Group& g) {
  std::ostringstream out;
  const std::size_t n = g.order();
  out << "{\n  \"mul\": [\n";
  for (std::size_t i = 0; i < n; ++i) {
    out << "    [";
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ", ";
      out << g.mul(static_cast<Elem>(i), static_cast<Elem>(j));
    }
    out << "]" << (i + 1 < n ? "," : "") << "\n";
  }
  out << "  ],\n  \"name\": " << json(g.name()).dump() << ",\n  \"order\": " << n << "\n}\n";
  return out.str();
}

void write_cayley_file(const Group& g, const std::filesystem::path& path) {
  write_file(path, cayley_text(g));
}

Group parse_permutation_text(std::string_view text, std::string name,
                             const std::string& source) {
  std::size_t degree = 0;
  bool have_header = false;
  std::vector<std::vector<int>> perms;
  std::size_t line_no = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    auto where = [&](std::size_t col) {
      return std::to_string(line_no) + ":" + std::to_string(col + 1);
    };
    if (!have_header) {
      std::size_t last = line.find_last_not_of(" \t\r");
      std::string_view h = line.substr(first, last - first + 1);
      if (h.size() < 3 || h.substr(0, 2) != "N=")
        parse_fail(source, where(first), "expected header N=<points>");
      std::size_t v = 0;
      for (std::size_t i = 2; i < h.size(); ++i) {
        if (h[i] < '0' || h[i] > '9')
          parse_fail(source, where(first + i), "expected digits after N=");
        v = v * 10 + static_cast<std::size_t>(h[i] - '0');
        if (v > 1000000) parse_fail(source, where(first + i), "point count too large");
      }
      if (v == 0) parse_fail(source, where(first), "N must be positive");
      degree = v;
      have_header = true;
      continue;
    }
    std::vector<int> perm(degree);
    for (std::size_t x = 0; x < degree; ++x) perm[x] = static_cast<int>(x);
    std::vector<bool> used(degree, false);
    std::size_t i = first;
    bool any_cycle = false;
    while (i < line.size()) {
      const char c = line[i];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++i;
        continue;
      }
      if (c != '(') parse_fail(source, where(i), "expected '('");
      any_cycle = true;
      ++i;
      std::vector<std::size_t> cycle;
      for (;;) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) ++i;
        if (i >= line.size()) parse_fail(source, where(i), "unterminated cycle");
        if (line[i] == ')') {
          ++i;
          break;
        }
        if (line[i] < '0' || line[i] > '9') parse_fail(source, where(i), "expected a point");
        const std::size_t col = i;
        std::size_t v = 0;
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
          v = v * 10 + static_cast<std::size_t>(line[i] - '0');
          if (v > degree) break;
          ++i;
        }
        if (v < 1 || v > degree)
          parse_fail(source, where(col), "point outside 1.." + std::to_string(degree));
        if (used[v - 1]) parse_fail(source, where(col), "point " + std::to_string(v) + " repeated");
        used[v - 1] = true;
        cycle.push_back(v - 1);
      }
      for (std::size_t k = 0; k < cycle.size(); ++k)
        perm[cycle[k]] = static_cast<int>(cycle[(k + 1) % cycle.size()]);
    }
    if (!any_cycle) parse_fail(source, where(first), "expected a permutation");
    perms.push_back(std::move(perm));
    if (end == text.size()) break;
  }
  if (!have_header) parse_fail(source, "1:1", "missing header N=<points>");
  return permutation_group(degree, perms, std::move(name));
}

Group parse_permutation_file(const std::filesystem::path& path) {
  return parse_permutation_text(read_file(path), path.stem().string(), path.string());
}

VerdictCounts tally(const std::vector<CheckReport>& reports) {
  VerdictCounts c;
  for (const auto& r : reports) {
    switch (r.verdict) {
      case Verdict::kHolds: ++c.holds; break;
      case Verdict::kFails: ++c.fails; break;
      case Verdict::kPremisesUnmet: ++c.premises_unmet; break;
    }
  }
  return c;
}

std::string render_report(const ReportDocument& doc, ReportFormat format) {
  std::vector<CheckReport> reports = doc.reports;
  sort_reports(reports);
  return format == ReportFormat::kJson ? render_json(doc, reports) : render_csv(reports);
}

void emit_report(const ReportDocument& doc, ReportFormat format,
                 const std::filesystem::path& path) {
  write_file(path, render_report(doc, format));
}

}  // namespace cseries
