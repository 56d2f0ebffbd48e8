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

#pragma once

#include <cstdint>
#include <deque>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "dysonlab/inequality.hpp"

namespace dysonlab {

inline constexpr std::string_view kRecordSchema = "dysonlab-record/1";
inline constexpr std::string_view kTableSchema = "dysonlab-table/1";

/// %.17g, enough to round-trip a double.
std::string format_number(double x);
std::string format_number(long long x);
inline std::string format_number(int x) { return format_number(static_cast<long long>(x)); }
inline std::string format_number(std::uint64_t x) { return std::to_string(x); }

struct Field {
  std::string key;
  std::string value;
};

struct CheckRow {
  std::string name;
  bool holds = true;
  std::vector<Field> fields;
};

/// CSV table with a documented column contract, written next to the record.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add_row(std::vector<std::string> row);
  std::string to_csv() const;
};

/// Line-oriented, self-describing run record:
///
///   dysonlab-record/1
///   subcommand <name>
///   version <artifact version>
///   seed <master seed>
///   config <key>=<value>            one per parameter
///   result <key>=<value>            one per scalar output
///   check <name> status=pass|fail <key>=<value> ...
///   table <name> file=<csv file> rows=<count>
///   summary checks=<n> passed=<n> failed=<n> [min_slack=<x>] [failed_checks=<a,b>]
///   end
///
/// Values never contain whitespace; spaces, '%' and newlines are %-escaped.
/// Wall-clock time is kept out of the record (it goes in a .timing sidecar)
/// so identical configurations produce identical files.
class ReportRecord {
 public:
  ReportRecord() = default;
  ReportRecord(std::string subcommand, std::uint64_t seed);

  const std::string& subcommand() const noexcept { return subcommand_; }
  std::uint64_t seed() const noexcept { return seed_; }
  const std::vector<Field>& config() const noexcept { return config_; }
  const std::vector<Field>& results() const noexcept { return results_; }
  const std::deque<CheckRow>& checks() const noexcept { return checks_; }
  const std::deque<Table>& tables() const noexcept { return tables_; }

  void add_config(std::string key, std::string value);
  void add_result(std::string key, std::string value);
  void add_result(std::string key, double value) { add_result(std::move(key), format_number(value)); }
  void add_result(std::string key, long long value) { add_result(std::move(key), format_number(value)); }
  void add_result(std::string key, int value) { add_result(std::move(key), format_number(value)); }

  CheckRow& add_check(std::string name, bool holds, std::vector<Field> fields = {});
  /// Check derived from an inequality report (lhs, rhs, slack).
  CheckRow& add_check(std::string name, const InequalityReport& report, std::vector<Field> fields = {});
  /// |value - target| <= tolerance (absolute).
  CheckRow& add_tolerance_check(std::string name, double value, double target, double tolerance);
  Table& add_table(std::string name, std::vector<std::string> columns);

  /// Appends another record's checks, results and tables under a prefix.
  void merge(const ReportRecord& other, const std::string& prefix);

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
  std::vector<std::string> failed_checks() const;

  std::string to_text() const;
  /// Writes <dir>/<subcommand>.record plus one <dir>/<subcommand>.<table>.csv
  /// per table. Returns the record path.
  std::filesystem::path write(const std::filesystem::path& dir) const;

 private:
  std::string subcommand_;
  std::uint64_t seed_ = 0;
  std::vector<Field> config_;
  std::vector<Field> results_;
  // Deques keep references returned by add_check and add_table valid.
  std::deque<CheckRow> checks_;
  std::deque<Table> tables_;
};

std::string escape_value(std::string_view raw);

}  // namespace dysonlab
