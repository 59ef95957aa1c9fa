// Copyright 2026 The qbounds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
#include "qbounds_cli/commands.h"

#include <algorithm>
#include <set>

#include "CLI11.hpp"
#include "qbounds/arith.h"
#include "qbounds/error.h"
#include "qbounds/group_spec.h"

namespace qbounds::cli {
namespace {

void collect_citations(Report& r) {
  std::set<std::string> seen;
  for (const QBoundReport& b : r.bounds) {
    for (const std::string& c : b.citations) {
      if (seen.insert(c).second) r.citations.push_back(c);
    }
  }
}

std::vector<std::uint64_t> primes_for(const GroupSpec& spec, std::optional<std::uint64_t> p) {
  if (p) {
    if (!is_prime(*p)) throw InvalidArgument(std::to_string(*p) + " is not prime");
    return {*p};
  }
  return prime_factors(spec.order());
}

void require_degree(int n, int min, const char* what) {
  if (n < min) {
    throw InvalidArgument(std::string(what) + " must be at least " + std::to_string(min));
  }
}

}  // namespace

Report cmd_series(const std::string& text, std::optional<std::uint64_t> p, int n_max) {
  require_degree(n_max, 0, "--nmax");
  const GroupSpec spec = parse_spec(text);
  Report r;
  r.command = "series " + text;
  r.group = spec.to_string();
  for (int i = 0; i <= n_max; ++i) r.degrees.push_back(i);
  if (p) {
    r.series.push_back(series_for_spec(spec, Field::mod(*p), n_max));
  } else {
    r.series = series_list(spec, n_max);
  }
  return r;
}

Report cmd_swan(const std::string& text, int n_max, const OracleOptions& options) {
  require_degree(n_max, 1, "--nmax");
  const GroupSpec spec = parse_spec(text);
  Report r;
  r.command = "swan " + text;
  r.group = spec.to_string();
  for (int i = 1; i <= n_max; ++i) r.degrees.push_back(i);
  r.swan = compute_swan_report(spec, n_max, options);
  return r;
}

Report cmd_bounds(const std::string& text, int n, const OracleOptions& options) {
  require_degree(n, 2, "--n");
  const GroupSpec spec = parse_spec(text);
  Report r;
  r.command = "bounds " + text + " --n " + std::to_string(n);
  r.group = spec.to_string();
  r.degrees = {n};
  r.swan = compute_swan_report(spec, n, options);
  r.bounds.push_back(q_bounds(spec, *r.swan, n));
  collect_citations(r);
  return r;
}

Report cmd_qs4(const std::string& text, const OracleOptions& options) {
  Report r = cmd_bounds(text, 2, options);
  r.command = "qs4 " + text;
  return r;
}

Report cmd_oracle_check(const std::string& text, std::optional<std::uint64_t> p, int n_max,
                        const OracleOptions& options) {
  require_degree(n_max, 0, "--nmax");
  const GroupSpec spec = parse_spec(text);
  Report r;
  r.command = "oracle-check " + text;
  r.group = spec.to_string();
  for (int i = 0; i <= n_max; ++i) r.degrees.push_back(i);
  for (std::uint64_t prime : primes_for(spec, p)) {
    for (const SeriesCheck& c : verify_series(spec, prime, n_max, options)) {
      r.oracle.push_back(OracleRow{prime, c.n, c.closed_form, c.oracle, c.match});
    }
  }
  return r;
}

int report_status(const Report& r) {
  const bool oracle_ok =
      std::all_of(r.oracle.begin(), r.oracle.end(), [](const OracleRow& o) { return o.match; });
  const bool repro_ok = std::all_of(r.reproduce.begin(), r.reproduce.end(),
                                    [](const ReproRow& row) { return row.pass; });
  return oracle_ok && repro_ok ? kExitOk : kExitReproduction;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bounds on the Euler characteristic invariant q_2n of finite groups", "qbounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  std::string format = "text";
  std::string budget_text;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--memory-budget", budget_text,
                 "Cochain oracle memory budget such as 512M or 2G (default from "
                 "QBOUNDS_MEMORY_BUDGET, else 2G)");

  std::string spec;
  int n = 2;
  int n_max = -1;
  std::optional<std::uint64_t> p;

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", spec, "Group specification")->required();
  };

  CLI::App* series = app.add_subcommand("series", "Cohomology dimension series");
  add_spec(series);
  series->add_option("--p", p, "Prime field (default: Q and every prime dividing |G|)");
  series->add_option("--nmax", n_max, "Truncation degree (default 4)");

  CLI::App* swan = app.add_subcommand("swan", "e_n, mu_n and mu'_n for n = 1..nmax");
  add_spec(swan);
  swan->add_option("--nmax", n_max, "Largest degree (default 4)");

  CLI::App* bounds = app.add_subcommand("bounds", "Interval and verdict for q_2n");
  add_spec(bounds);
  bounds->add_option("--n", n, "Half-dimension n (default 2)");

  CLI::App* qs4 = app.add_subcommand("qs4", "Rational homology 4-sphere verdict");
  add_spec(qs4);

  CLI::App* oracle = app.add_subcommand("oracle-check", "Closed forms against bar cochains");
  add_spec(oracle);
  oracle->add_option("--p", p, "Prime (default: every prime dividing |G|)");
  oracle->add_option("--nmax", n_max, "Largest degree (default 3)");

  app.add_subcommand("reproduce", "Recompute the reference values");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    OracleOptions options = default_oracle_options();
    if (!budget_text.empty()) options.memory_budget = parse_memory_size(budget_text);

    Report report;
    if (*series) {
      report = cmd_series(spec, p, n_max < 0 ? 4 : n_max);
    } else if (*swan) {
      report = cmd_swan(spec, n_max < 0 ? 4 : n_max, options);
    } else if (*bounds) {
      report = cmd_bounds(spec, n, options);
    } else if (*qs4) {
      report = cmd_qs4(spec, options);
    } else if (*oracle) {
      report = cmd_oracle_check(spec, p, n_max < 0 ? 3 : n_max, options);
    } else {
      report = cmd_reproduce();
    }
    if (format == "json") {
      out << to_json(report).dump(2) << "\n";
    } else {
      render_text(report, out);
    }
    return report_status(report);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MissingMetadata& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace qbounds::cli
