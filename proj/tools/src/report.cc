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
#include "qbounds_cli/report.h"

#include <iomanip>

#include "qbounds/error.h"

namespace qbounds::cli {

using nlohmann::json;

namespace {

json opt(const std::optional<std::int64_t>& v) { return v ? json(*v) : json(nullptr); }

std::optional<std::int64_t> opt_int(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::int64_t>();
}

json mu_json(const MuValue& v) { return json{{"lower", opt(v.lower)}, {"upper", opt(v.upper)}}; }

MuValue mu_from(const json& j) { return MuValue{opt_int(j.at("lower")), opt_int(j.at("upper"))}; }

Exceptional exceptional_from(const std::string& s) {
  if (s == "no") return Exceptional::kNo;
  if (s == "declared") return Exceptional::kDeclared;
  if (s == "unknown") return Exceptional::kUnknown;
  throw InvalidArgument("unknown exceptional flag '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  if (s == "impossible") return Verdict::kImpossible;
  if (s == "realizable") return Verdict::kRealizable;
  if (s == "open") return Verdict::kOpen;
  throw InvalidArgument("unknown verdict '" + s + "'");
}

json series_json(const DimSeries& s) {
  return json{{"field", s.field.to_string()}, {"p", s.field.p}, {"dims", s.dims}};
}

DimSeries series_from(const json& j) {
  return DimSeries{Field{j.at("p").get<std::uint64_t>()},
                   j.at("dims").get<std::vector<std::int64_t>>()};
}

json swan_json(const SwanReport& s) {
  json degrees = json::array();
  for (const SwanDegree& d : s.degrees) {
    degrees.push_back(json{{"n", d.n},
                           {"e_n", d.e_n},
                           {"mu_n", mu_json(d.mu)},
                           {"mu_prime_n", mu_json(d.mu_prime)},
                           {"exceptional", to_string(d.exceptional)},
                           {"notes", d.notes}});
  }
  return json{{"group", s.group}, {"degrees", degrees}};
}

SwanReport swan_from(const json& j) {
  SwanReport s;
  s.group = j.at("group").get<std::string>();
  for (const json& d : j.at("degrees")) {
    SwanDegree deg;
    deg.n = d.at("n").get<int>();
    deg.e_n = d.at("e_n").get<std::int64_t>();
    deg.mu = mu_from(d.at("mu_n"));
    deg.mu_prime = mu_from(d.at("mu_prime_n"));
    deg.exceptional = exceptional_from(d.at("exceptional").get<std::string>());
    deg.notes = d.at("notes").get<std::vector<std::string>>();
    s.degrees.push_back(std::move(deg));
  }
  return s;
}

json bound_json(const QBoundReport& b) {
  json j{{"group", b.group},
         {"n", b.n},
         {"e_n", b.e_n},
         {"mu_prime_n", mu_json(b.mu_prime_n)},
         {"mu_prime_nm1", mu_json(b.mu_prime_nm1)},
         {"lower", b.lower},
         {"upper", opt(b.upper)},
         {"exact", opt(b.exact)},
         {"verdict", to_string(b.verdict)},
         {"reason", b.reason},
         {"citations", b.citations},
         {"annotation", nullptr}};
  if (b.annotation) {
    j["annotation"] = json{{"group", b.annotation->group},
                           {"q_value", opt(b.annotation->q_value)},
                           {"mu2", opt(b.annotation->mu2)},
                           {"note", b.annotation->note}};
  }
  return j;
}

QBoundReport bound_from(const json& j) {
  QBoundReport b;
  b.group = j.at("group").get<std::string>();
  b.n = j.at("n").get<int>();
  b.e_n = j.at("e_n").get<std::int64_t>();
  b.mu_prime_n = mu_from(j.at("mu_prime_n"));
  b.mu_prime_nm1 = mu_from(j.at("mu_prime_nm1"));
  b.lower = j.at("lower").get<std::int64_t>();
  b.upper = opt_int(j.at("upper"));
  b.exact = opt_int(j.at("exact"));
  b.verdict = verdict_from(j.at("verdict").get<std::string>());
  b.reason = j.at("reason").get<std::string>();
  b.citations = j.at("citations").get<std::vector<std::string>>();
  const json& a = j.at("annotation");
  if (!a.is_null()) {
    b.annotation = Annotation{a.at("group").get<std::string>(), opt_int(a.at("q_value")),
                              opt_int(a.at("mu2")), a.at("note").get<std::string>()};
  }
  return b;
}

std::string interval_text(const QBoundReport& b) {
  return "[" + std::to_string(b.lower) + "," + (b.upper ? std::to_string(*b.upper) : "?") + "]";
}

}  // namespace

json to_json(const Report& r) {
  json j;
  j["schema"] = kSchemaVersion;
  j["version"] = r.version;
  j["command"] = r.command;
  j["group"] = r.group ? json(*r.group) : json(nullptr);
  j["degrees"] = r.degrees;
  j["series"] = json::array();
  for (const DimSeries& s : r.series) j["series"].push_back(series_json(s));
  j["swan"] = r.swan ? swan_json(*r.swan) : json(nullptr);
  j["bounds"] = json::array();
  for (const QBoundReport& b : r.bounds) j["bounds"].push_back(bound_json(b));
  j["oracle"] = json::array();
  for (const OracleRow& o : r.oracle) {
    j["oracle"].push_back(json{{"p", o.p},
                               {"n", o.n},
                               {"closed_form", o.closed_form},
                               {"oracle", o.oracle},
                               {"match", o.match}});
  }
  j["reproduce"] = json::array();
  for (const ReproRow& row : r.reproduce) {
    j["reproduce"].push_back(json{{"section", row.section},
                                  {"label", row.label},
                                  {"expected", row.expected},
                                  {"actual", row.actual},
                                  {"pass", row.pass}});
  }
  j["citations"] = r.citations;
  return j;
}

Report report_from_json(const json& j) {
  if (j.at("schema").get<int>() != kSchemaVersion) {
    throw InvalidArgument("unsupported report schema " + j.at("schema").dump());
  }
  Report r;
  r.version = j.at("version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  if (!j.at("group").is_null()) r.group = j.at("group").get<std::string>();
  r.degrees = j.at("degrees").get<std::vector<int>>();
  for (const json& s : j.at("series")) r.series.push_back(series_from(s));
  if (!j.at("swan").is_null()) r.swan = swan_from(j.at("swan"));
  for (const json& b : j.at("bounds")) r.bounds.push_back(bound_from(b));
  for (const json& o : j.at("oracle")) {
    r.oracle.push_back(OracleRow{o.at("p").get<std::uint64_t>(), o.at("n").get<int>(),
                                 o.at("closed_form").get<std::int64_t>(),
                                 o.at("oracle").get<std::int64_t>(), o.at("match").get<bool>()});
  }
  for (const json& row : j.at("reproduce")) {
    r.reproduce.push_back(ReproRow{row.at("section").get<std::string>(),
                                   row.at("label").get<std::string>(),
                                   row.at("expected").get<std::string>(),
                                   row.at("actual").get<std::string>(), row.at("pass").get<bool>()});
  }
  r.citations = j.at("citations").get<std::vector<std::string>>();
  return r;
}

void render_text(const Report& r, std::ostream& out) {
  out << "qbounds " << r.version << ": " << r.command << "\n";
  if (r.group) out << "group: " << *r.group << "\n";

  for (const DimSeries& s : r.series) {
    out << std::left << std::setw(6) << (s.field.to_string() + ":");
    for (std::size_t i = 0; i < s.dims.size(); ++i) out << (i ? " " : "") << s.dims[i];
    out << "\n";
  }

  if (r.swan) {
    out << std::left << std::setw(4) << "n" << std::setw(8) << "e_n" << std::setw(10) << "mu_n"
        << std::setw(10) << "mu'_n" << "exceptional\n";
    for (const SwanDegree& d : r.swan->degrees) {
      out << std::left << std::setw(4) << d.n << std::setw(8) << d.e_n << std::setw(10)
          << d.mu.to_string() << std::setw(10) << d.mu_prime.to_string()
          << to_string(d.exceptional) << "\n";
      for (const std::string& note : d.notes) out << "      note: " << note << "\n";
    }
  }

  for (const QBoundReport& b : r.bounds) {
    out << "q_" << 2 * b.n << " in " << interval_text(b);
    if (b.exact) out << ", exact " << *b.exact;
    out << "\n  e_n = " << b.e_n << ", mu'_n = " << b.mu_prime_n.to_string()
        << ", mu'_n-1 = " << b.mu_prime_nm1.to_string() << "\n";
    out << "  verdict: " << to_string(b.verdict) << " (" << b.reason << ")\n";
    out << "  rules:";
    for (const std::string& c : b.citations) out << " " << c;
    out << "\n";
    if (b.annotation) {
      out << "  annotation for " << b.annotation->group << ":";
      if (b.annotation->q_value) out << " q_" << 2 * b.n << " = " << *b.annotation->q_value;
      if (b.annotation->mu2) out << " mu_2 = " << *b.annotation->mu2;
      out << " (" << b.annotation->note << ")\n";
    }
  }

  if (!r.oracle.empty()) {
    out << std::left << std::setw(6) << "p" << std::setw(4) << "n" << std::setw(13)
        << "closed-form" << std::setw(8) << "oracle" << "match\n";
    for (const OracleRow& o : r.oracle) {
      out << std::left << std::setw(6) << o.p << std::setw(4) << o.n << std::setw(13)
          << o.closed_form << std::setw(8) << o.oracle << (o.match ? "yes" : "NO") << "\n";
    }
  }

  if (!r.reproduce.empty()) {
    std::size_t passed = 0;
    for (const ReproRow& row : r.reproduce) {
      out << (row.pass ? "PASS" : "FAIL") << "  [" << row.section << "] " << row.label
          << ": expected " << row.expected << ", got " << row.actual << "\n";
      passed += row.pass ? 1 : 0;
    }
    out << passed << "/" << r.reproduce.size() << " rows pass\n";
  }
}

}  // namespace qbounds::cli
