// Copyright 2026 The dysonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dysonlab/record.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "dysonlab/errors.hpp"

#ifndef DYSONLAB_VERSION
#define DYSONLAB_VERSION "0.0.0"
#endif

namespace dysonlab {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_number(long long x) { return std::to_string(x); }

std::string escape_value(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case ' ':
        out += "%20";
        break;
      case '%':
        out += "%25";
        break;
      case '\n':
        out += "%0A";
        break;
      case '\t':
        out += "%09";
        break;
      case ',':
        out += "%2C";
        break;
      default:
        out += c;
    }
  }
  return out;
}

void Table::add_row(std::vector<std::string> row) {
  if (row.size() != columns.size()) throw ConsistencyError("table " + name + ": row width does not match columns");
  rows.push_back(std::move(row));
}

std::string Table::to_csv() const {
  std::ostringstream out;
  out << "# " << kTableSchema << ' ' << name << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << escape_value(row[i]);
    out << '\n';
  }
  return out.str();
}

ReportRecord::ReportRecord(std::string subcommand, std::uint64_t seed)
    : subcommand_(std::move(subcommand)), seed_(seed) {}

void ReportRecord::add_config(std::string key, std::string value) {
  config_.push_back({std::move(key), std::move(value)});
}

void ReportRecord::add_result(std::string key, std::string value) {
  results_.push_back({std::move(key), std::move(value)});
}

CheckRow& ReportRecord::add_check(std::string name, bool holds, std::vector<Field> fields) {
  checks_.push_back({std::move(name), holds, std::move(fields)});
  return checks_.back();
}

CheckRow& ReportRecord::add_check(std::string name, const InequalityReport& report, std::vector<Field> fields) {
  std::vector<Field> all{{"lhs", format_number(report.lhs)},
                         {"rhs", format_number(report.rhs)},
                         {"slack", format_number(report.slack)}};
  all.insert(all.end(), fields.begin(), fields.end());
  return add_check(std::move(name), report.holds, std::move(all));
}

CheckRow& ReportRecord::add_tolerance_check(std::string name, double value, double target, double tolerance) {
  const double deviation = std::abs(value - target);
  return add_check(std::move(name), deviation <= tolerance,
                   {{"value", format_number(value)},
                    {"target", format_number(target)},
                    {"deviation", format_number(deviation)},
                    {"tolerance", format_number(tolerance)}});
}

Table& ReportRecord::add_table(std::string name, std::vector<std::string> columns) {
  tables_.push_back({std::move(name), std::move(columns), {}});
  return tables_.back();
}

void ReportRecord::merge(const ReportRecord& other, const std::string& prefix) {
  for (const Field& f : other.results_) results_.push_back({prefix + "." + f.key, f.value});
  for (const CheckRow& c : other.checks_) checks_.push_back({prefix + "." + c.name, c.holds, c.fields});
  for (const Table& t : other.tables_) {
    tables_.push_back(t);
    tables_.back().name = prefix + "." + t.name;
  }
}

int ReportRecord::passed() const {
  int n = 0;
  for (const CheckRow& c : checks_) n += c.holds ? 1 : 0;
  return n;
}

int ReportRecord::failed() const { return static_cast<int>(checks_.size()) - passed(); }

std::vector<std::string> ReportRecord::failed_checks() const {
  std::vector<std::string> names;
  for (const CheckRow& c : checks_) {
    if (!c.holds) names.push_back(c.name);
  }
  return names;
}

std::string ReportRecord::to_text() const {
  std::ostringstream out;
  out << kRecordSchema << '\n';
  out << "subcommand " << subcommand_ << '\n';
  out << "version " << DYSONLAB_VERSION << '\n';
  out << "seed " << seed_ << '\n';
  for (const Field& f : config_) out << "config " << f.key << '=' << escape_value(f.value) << '\n';
  for (const Field& f : results_) out << "result " << f.key << '=' << escape_value(f.value) << '\n';
  double min_slack = std::numeric_limits<double>::infinity();
  for (const CheckRow& c : checks_) {
    out << "check " << c.name << " status=" << (c.holds ? "pass" : "fail");
    for (const Field& f : c.fields) {
      out << ' ' << f.key << '=' << escape_value(f.value);
      if (f.key == "slack" || f.key == "min_slack") {
        const double s = std::strtod(f.value.c_str(), nullptr);
        if (s < min_slack) min_slack = s;
      }
    }
    out << '\n';
  }
  for (const Table& t : tables_) {
    out << "table " << t.name << " file=" << escape_value(subcommand_ + "." + t.name + ".csv")
        << " rows=" << t.rows.size() << '\n';
  }
  out << "summary checks=" << checks_.size() << " passed=" << passed() << " failed=" << failed();
  if (std::isfinite(min_slack)) out << " min_slack=" << format_number(min_slack);
  const auto failing = failed_checks();
  if (!failing.empty()) {
    out << " failed_checks=";
    for (std::size_t i = 0; i < failing.size(); ++i) out << (i ? ";" : "") << failing[i];
  }
  out << "\nend\n";
  return out.str();
}

std::filesystem::path ReportRecord::write(const std::filesystem::path& dir) const {
  const std::string& stem = subcommand_;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ResourceError("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto put = [](const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) throw ResourceError("cannot write " + path.string());
  };
  for (const Table& t : tables_) put(dir / (stem + "." + t.name + ".csv"), t.to_csv());
  const auto path = dir / (stem + ".record");
  put(path, to_text());
  return path;
}

}  // namespace dysonlab
