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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dysonlab/record.hpp"

namespace dysonlab::suite {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;

inline constexpr std::uint64_t kDefaultSeed = 20260101;

enum class ParamKind { Int, Real, Bool, String, Path, IntList, RealList };

struct ParamSpec {
  std::string name;
  ParamKind kind;
  std::string default_value;  // empty for optional paths
  std::string help;
};

struct SubcommandSchema {
  std::string name;
  std::string help;
  std::vector<ParamSpec> params;

  const ParamSpec* find(std::string_view key) const;
};

const std::vector<SubcommandSchema>& schemas();
/// UsageError for an unknown subcommand.
const SubcommandSchema& schema(std::string_view subcommand);

struct RunConfig {
  std::string subcommand;
  std::map<std::string, std::string> params;  // raw values; missing keys take schema defaults
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::filesystem::path> output_dir;
};

/// Typed view of a validated configuration.
class Params {
 public:
  /// Checks every key against the schema and parses every value;
  /// UsageError names the offending key.
  Params(const SubcommandSchema& schema, const std::map<std::string, std::string>& raw);

  long long integer(std::string_view key) const;
  double real(std::string_view key) const;
  bool flag(std::string_view key) const;
  const std::string& string(std::string_view key) const;
  std::vector<long long> integers(std::string_view key) const;
  std::vector<double> reals(std::string_view key) const;

  /// Every parameter with its effective value, in schema order.
  const std::vector<std::pair<std::string, std::string>>& effective() const noexcept { return effective_; }

 private:
  const std::string& raw(std::string_view key, ParamKind kind) const;

  const SubcommandSchema* schema_;
  std::vector<std::pair<std::string, std::string>> effective_;
};

struct RunOutcome {
  ReportRecord record;
  int exit_code = kExitPass;
  std::string message;  // error text when exit_code is 2 or 3, failing checks when 1
  double wall_seconds = 0.0;
  std::optional<std::filesystem::path> record_path;
};

/// Validates, dispatches and (when output_dir is set) persists the record,
/// its CSV tables and a .timing sidecar. Never throws for module errors:
/// they are mapped onto the exit-code contract.
RunOutcome run(const RunConfig& config);

struct SuiteOptions {
  bool quick = false;
  int workers = 1;
  std::uint64_t seed = kDefaultSeed;
  double j_offset = 0.0;  // perturbs J in the pair-energy identity (sensitivity canary)
};

/// The canonical battery of checks, merged in a fixed order regardless of
/// the worker count. Each check draws from derive_seed(seed, check name).
ReportRecord full_verification_suite(const SuiteOptions& options = {});

/// "key = value" lines, '#' comments, keys mirror the long flag names.
std::vector<std::pair<std::string, std::string>> read_config_file(const std::filesystem::path& path);

}  // namespace dysonlab::suite
