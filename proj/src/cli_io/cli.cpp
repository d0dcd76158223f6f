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

#include "cseries/cli.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cseries/bounds.hpp"
#include "cseries/catalog.hpp"
#include "cseries/checks.hpp"
#include "cseries/error.hpp"
#include "cseries/io.hpp"
#include "cseries/series.hpp"
#include "cseries/sweeps.hpp"

namespace cseries {

namespace {

struct Options {
  std::size_t max_order = 64;
  std::string json_path, csv_path, timestamp;
  bool strict = false;
  unsigned threads = 0;

  std::string group, file, perm;
  bool catalog = false;

  std::string check = "all";
  std::string subgroup, chain, finite, action;
  std::optional<std::size_t> m;
  std::string export_path;

  std::size_t p = 3, n = 1;
  std::uint64_t t = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string now_utc() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

std::vector<Elem> parse_elements(const std::string& s, std::size_t order) {
  std::vector<Elem> out;
  for (const std::string& tok : split(s, ',')) {
    const auto b = tok.find_first_not_of(' '), e = tok.find_last_not_of(' ');
    if (b == std::string::npos) continue;
    const std::string t = tok.substr(b, e - b + 1);
    std::size_t pos = 0;
    long v = -1;
    try {
      v = std::stol(t, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != t.size() || v < 0 || static_cast<std::size_t>(v) >= order)
      throw UsageError("bad element index '" + t + "'");
    out.push_back(static_cast<Elem>(v));
  }
  return out;
}

Subgroup parse_subgroup(const Group& g, const std::string& s) {
  return Subgroup::checked(g, parse_elements(s, g.order()));
}

std::vector<Subgroup> parse_chain(const Group& g, const std::string& s) {
  std::vector<Subgroup> out;
  for (const std::string& term : split(s, '|')) out.push_back(parse_subgroup(g, term));
  if (out.empty()) throw UsageError("empty --chain");
  return out;
}

bool has_source(const Options& o) {
  return !o.group.empty() || !o.file.empty() || !o.perm.empty();
}

SweepInput load_single(const Options& o) {
  const int sources = !o.group.empty() + !o.file.empty() + !o.perm.empty();
  if (sources != 1) throw UsageError("give exactly one of --group, --file, --perm");
  if (!o.group.empty()) {
    const CatalogEntry* e = find_entry(o.group);
    if (!e) throw UsageError("unknown catalog group '" + o.group + "'");
    return e->build();
  }
  if (!o.file.empty()) return SweepInput{parse_cayley_file(o.file), {}, std::nullopt};
  return SweepInput{parse_permutation_file(o.perm), {}, std::nullopt};
}

AutSubgroup pick_action(const SweepInput& in, const std::string& which) {
  if (which.empty() || which == "inn") return inner_automorphisms(in.group).inn.renamed("Inn");
  if (which == "aut") return automorphism_group(in.group).renamed("Aut");
  if (which == "stored") {
    if (in.actions.empty()) throw UsageError("group has no stored action");
    return in.actions.front();
  }
  throw UsageError("--action must be inn, aut or stored");
}

std::string quantity_text(const Quantity& q) {
  if (std::holds_alternative<std::int64_t>(q)) return std::to_string(std::get<std::int64_t>(q));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(q));
  return buf;
}

void print_report_line(std::ostream& out, const CheckReport& r) {
  out << r.check_name << " " << r.group_name << " " << to_string(r.verdict);
  for (const auto& [k, v] : r.quantities) out << " " << k << "=" << quantity_text(v);
  if (r.verdict == Verdict::kPremisesUnmet && r.witness && r.witness->contains("unmet"))
    out << " (" << (*r.witness)["unmet"].get<std::string>() << ")";
  out << "\n";
}

int finish(const Options& o, std::vector<CheckReport> reports, std::ostream& out) {
  sort_reports(reports);
  constexpr std::size_t kPrintAll = 40;
  std::size_t shown = 0;
  for (const auto& r : reports) {
    if (reports.size() > kPrintAll && r.verdict == Verdict::kHolds) continue;
    if (shown++ == kPrintAll) {
      out << "...\n";
      break;
    }
    print_report_line(out, r);
  }
  const VerdictCounts c = tally(reports);
  out << "summary: holds=" << c.holds << " fails=" << c.fails
      << " premises_unmet=" << c.premises_unmet << "\n";
  ReportDocument doc{kToolVersion, o.timestamp.empty() ? now_utc() : o.timestamp,
                     std::move(reports)};
  if (!o.json_path.empty()) emit_report(doc, ReportFormat::kJson, o.json_path);
  if (!o.csv_path.empty()) emit_report(doc, ReportFormat::kCsv, o.csv_path);
  if (c.fails > 0) return kExitFails;
  if (o.strict && c.premises_unmet > 0) return kExitPremisesUnmet;
  return kExitHolds;
}

std::vector<std::string> checks_to_run(const std::string& check) {
  if (check == "all") return check_names();
  if (!is_check_name(check)) throw UsageError("unknown check '" + check + "'");
  return {check};
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.catalog) {
    if (has_source(o)) throw UsageError("--catalog excludes --group, --file, --perm");
    if (!o.subgroup.empty() || !o.chain.empty())
      throw UsageError("--subgroup and --chain need a single group");
    const std::vector<std::string> checks = checks_to_run(o.check);
    std::vector<std::shared_ptr<const SweepInput>> inputs;
    for (const CatalogEntry& e : standard_catalog()) {
      if (e.order > o.max_order) continue;
      inputs.push_back(std::make_shared<const SweepInput>(e.build()));
    }
    std::vector<SweepTask> tasks;
    for (const auto& check : checks)
      for (const auto& in : inputs)
        tasks.push_back([check, in] { return sweep_group(check, *in); });
    return finish(o, run_tasks(std::move(tasks), o.threads), out);
  }

  const SweepInput in = load_single(o);
  const Group& g = in.group;
  std::vector<CheckReport> reports;
  if (o.check == "stabilizes") {
    if (o.chain.empty()) throw UsageError("stabilizes needs --chain");
    reports.push_back(verify_stabilized(g, pick_action(in, o.action), parse_chain(g, o.chain)));
  } else if (!o.chain.empty()) {
    const auto chain = parse_chain(g, o.chain);
    if (o.check == "corollary3") {
      reports.push_back(verify_corollary3(g, chain));
    } else if (o.check == "corollary4") {
      std::vector<std::size_t> marked;
      for (Elem i : parse_elements(o.finite, chain.size()))
        marked.push_back(static_cast<std::size_t>(i));
      reports.push_back(verify_corollary4(g, pick_action(in, o.action), chain, marked));
    } else {
      throw UsageError("--chain applies to stabilizes, corollary3, corollary4");
    }
  } else if (!o.subgroup.empty()) {
    const Subgroup l = parse_subgroup(g, o.subgroup);
    if (o.check == "theorem1") {
      reports.push_back(verify_theorem1(g, l));
    } else if (o.check == "corollary2") {
      std::size_t m = 1;
      if (o.m) {
        m = *o.m;
      } else if (is_normal(g, l)) {
        m = nilpotency_class(quotient(g, l).group).value_or(1);
      }
      reports.push_back(verify_corollary2(g, l, m));
    } else if (o.check == "theorem2_H") {
      reports.push_back(verify_theorem2_H(g, pick_action(in, o.action), l));
    } else {
      throw UsageError("--subgroup applies to theorem1, corollary2, theorem2_H");
    }
  } else {
    for (const auto& check : checks_to_run(o.check)) {
      auto r = sweep_group(check, in);
      reports.insert(reports.end(), r.begin(), r.end());
    }
  }
  return finish(o, std::move(reports), out);
}

std::string series_text(const AscendingSeries& s) {
  std::string out;
  for (std::size_t i = 0; i < s.terms.size(); ++i)
    out += (i ? " < " : "") + std::to_string(s.terms[i].size());
  return out;
}

int cmd_info(const Options& o, std::ostream& out) {
  const SweepInput in = load_single(o);
  const Group& g = in.group;
  const auto cls = nilpotency_class(g);
  out << "name: " << g.name() << "\n"
      << "order: " << g.order() << "\n"
      << "identity: " << g.identity() << "\n"
      << "abelian: " << (g.is_abelian() ? "yes" : "no") << "\n"
      << "center order: " << center(g).size() << "\n"
      << "hypercenter order: " << hypercenter(g).size() << "\n"
      << "nilpotency class: " << (cls ? std::to_string(*cls) : "none") << "\n"
      << "conjugacy classes: " << conjugacy_classes(g).size() << "\n";
  try {
    out << "aut order: " << automorphism_group_order(g) << "\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCapExceeded) throw;
    out << "aut order: above cap\n";
  }
  if (!o.export_path.empty()) write_cayley_file(g, o.export_path);
  return kExitHolds;
}

int cmd_series(const Options& o, std::ostream& out) {
  const SweepInput in = load_single(o);
  const AscendingSeries ucs = upper_central_series(in.group);
  out << "upper central series: " << series_text(ucs)
      << (ucs.reaches_group ? " (reaches G)" : "") << "\n";
  if (!o.action.empty()) {
    const AutSubgroup a = pick_action(in, o.action);
    const AscendingSeries s = a_center_series(in.group, a);
    out << a.name() << "-center series: " << series_text(s)
        << (s.reaches_group ? " (reaches G)" : "") << "\n";
  }
  return kExitHolds;
}

int cmd_aut(const Options& o, std::ostream& out) {
  const SweepInput in = load_single(o);
  const Group& g = in.group;
  const std::uint64_t aut = automorphism_group_order(g);
  const std::size_t inn = g.order() / center(g).size();
  out << "aut order: " << aut << "\n"
      << "inn order: " << inn << "\n"
      << "out order: " << aut / inn << "\n";
  const auto gens = greedy_generating_set(g);
  out << "generating set:";
  for (Elem x : gens) out << " " << x;
  out << "\n";
  return kExitHolds;
}

int cmd_example(const Options& o, std::ostream& out) {
  return finish(o, {verify_example(o.p, o.n)}, out);
}

std::string bound_text(const BoundValue& b) {
  std::ostringstream s;
  if (b.ceil) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12Lg", b.raw);
    s << buf << " (ceil " << *b.ceil << ")";
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", b.log2_raw);
    s << "2^" << buf;
  }
  return s.str();
}

int cmd_bounds(const Options& o, std::ostream& out) {
  if (o.t == 0) throw UsageError("--t must be positive");
  out << "g(" << o.t << ") = " << bound_text(bound_g(o.t)) << "\n"
      << "kos(" << o.t << ") = " << bound_text(bound_kos(o.t)) << "\n";
  if (o.t <= kBoundFCap) {
    out << "f(" << o.t << ") = " << bound_text(bound_f(o.t)) << "\n";
  } else {
    out << "f(" << o.t << ") = above evaluation cap " << kBoundFCap << "\n";
  }
  return kExitHolds;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  std::size_t count = 0;
  for (const CatalogEntry& e : standard_catalog()) {
    if (e.order > o.max_order) continue;
    out << e.name << "\t" << e.order << "\t" << e.constructor << "\n";
    ++count;
  }
  out << count << " groups\n";
  return kExitHolds;
}

void add_source(CLI::App* sub, Options& o) {
  sub->add_option("--group", o.group, "catalog group name");
  sub->add_option("--file", o.file, "Cayley table file");
  sub->add_option("--perm", o.perm, "permutation generator file");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Finite group hypercenter verification harness", "cseries"};
  app.require_subcommand(1);
  app.add_option("--max-order", o.max_order, "largest catalog order swept")->capture_default_str();
  app.add_option("--json", o.json_path, "write the report document as JSON");
  app.add_option("--csv", o.csv_path, "write the reports as CSV");
  app.add_flag("--strict-premises", o.strict, "exit 3 when only premises fail");
  app.add_option("--timestamp", o.timestamp, "timestamp recorded in the report");
  app.add_option("--threads", o.threads, "worker threads (0: all cores)");

  CLI::App* info = app.add_subcommand("info", "group summary");
  add_source(info, o);
  info->add_option("--export", o.export_path, "write the Cayley table to a file");
  CLI::App* series = app.add_subcommand("series", "upper central and A-center series");
  add_source(series, o);
  series->add_option("--action", o.action, "inn, aut or stored");
  CLI::App* aut = app.add_subcommand("aut", "automorphism group orders");
  add_source(aut, o);
  CLI::App* verify = app.add_subcommand("verify", "run a check or all checks");
  verify->add_option("check", o.check, "check name, stabilizes, or all")->capture_default_str();
  add_source(verify, o);
  verify->add_flag("--catalog", o.catalog, "sweep the standard catalog");
  verify->add_option("--subgroup", o.subgroup, "comma-separated element indices");
  verify->add_option("--chain", o.chain, "subgroups separated by '|'");
  verify->add_option("--finite", o.finite, "chain factor indices marked finite");
  verify->add_option("--action", o.action, "inn, aut or stored");
  verify->add_option("--m", o.m, "class bound for corollary2");
  CLI::App* example = app.add_subcommand("example", "the elementary abelian example");
  example->add_option("--p", o.p, "odd prime")->capture_default_str();
  example->add_option("--n", o.n, "rank of Z")->capture_default_str();
  CLI::App* bounds = app.add_subcommand("bounds", "bound functions g, kos, f");
  bounds->add_option("--t", o.t, "argument")->required();
  CLI::App* catalog = app.add_subcommand("catalog", "list catalog groups");
  for (CLI::App* sub : {info, series, aut, verify, example, bounds, catalog}) sub->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitHolds : kExitUsage;
  }

  try {
    if (*info) return cmd_info(o, out);
    if (*series) return cmd_series(o, out);
    if (*aut) return cmd_aut(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*example) return cmd_example(o, out);
    if (*bounds) return cmd_bounds(o, out);
    if (*catalog) return cmd_catalog(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cseries
