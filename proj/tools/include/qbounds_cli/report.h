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
#ifndef QBOUNDS_CLI_REPORT_H_
#define QBOUNDS_CLI_REPORT_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qbounds/cochain_oracle.h"
#include "qbounds/cohomology_series.h"
#include "qbounds/q_bounds.h"
#include "qbounds/swan_invariants.h"

namespace qbounds::cli {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kVersion = "0.1.0";

struct ReproRow {
  std::string section;
  std::string label;
  std::string expected;
  std::string actual;
  bool pass = false;

  friend bool operator==(const ReproRow&, const ReproRow&) = default;
};

struct OracleRow {
  std::uint64_t p = 0;
  int n = 0;
  std::int64_t closed_form = 0;
  std::int64_t oracle = 0;
  bool match = false;

  friend bool operator==(const OracleRow&, const OracleRow&) = default;
};

struct Report {
  std::string command;
  std::optional<std::string> group;
  std::vector<int> degrees;
  std::vector<DimSeries> series;
  std::optional<SwanReport> swan;
  std::vector<QBoundReport> bounds;
  std::vector<OracleRow> oracle;
  std::vector<ReproRow> reproduce;
  std::vector<std::string> citations;
  std::string version = kVersion;

  friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);

void render_text(const Report& r, std::ostream& out);

}  // namespace qbounds::cli

#endif  // QBOUNDS_CLI_REPORT_H_
