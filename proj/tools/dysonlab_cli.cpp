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

// Command-line front end. Every subcommand's flags come from its schema;
// --config reads the same keys from a "key = value" file, and explicit flags
// win over the file. Records go to --output, else $DYSONLAB_OUTPUT_DIR, and
// are always echoed on stdout.

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "dysonlab/errors.hpp"
#include "dysonlab/suite.hpp"

namespace {

using dysonlab::suite::ParamKind;

std::string kind_label(ParamKind kind) {
  switch (kind) {
    case ParamKind::Int:
      return "INT";
    case ParamKind::Real:
      return "REAL";
    case ParamKind::Bool:
      return "BOOL";
    case ParamKind::String:
      return "TEXT";
    case ParamKind::Path:
      return "FILE";
    case ParamKind::IntList:
      return "INT,...";
    case ParamKind::RealList:
      return "REAL,...";
  }
  return "TEXT";
}

}  // namespace

int main(int argc, char** argv) {
  namespace suite = dysonlab::suite;
  CLI::App app{"dysonlab: numerical checks for the charged Bose gas energy asymptotics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", DYSONLAB_VERSION);

  std::uint64_t seed = suite::kDefaultSeed;
  std::string output;
  std::string config_file;
  app.add_option("--seed", seed, "master seed")->capture_default_str();
  app.add_option("--output", output, "output directory (default $DYSONLAB_OUTPUT_DIR)");
  app.add_option("--config", config_file, "key = value file mirroring the flags");

  struct Bound {
    CLI::App* app;
    const suite::SubcommandSchema* schema;
    std::map<std::string, std::string> values;
    std::map<std::string, CLI::Option*> options;
  };
  std::vector<Bound> bound;
  bound.reserve(suite::schemas().size());
  for (const auto& schema : suite::schemas()) {
    bound.push_back({app.add_subcommand(schema.name, schema.help), &schema, {}, {}});
    Bound& b = bound.back();
    for (const auto& param : schema.params) {
      std::string help = param.help;
      if (!param.default_value.empty()) help += " [" + param.default_value + "]";
      if (param.kind == ParamKind::Bool) {
        // --flag sets true, --flag=false turns it off.
        auto* opt = b.app->add_option("--" + param.name, b.values[param.name], help)
                        ->type_name("BOOL")
                        ->expected(0, 1)
                        ->default_str("true");
        opt->default_val("");
        b.options[param.name] = opt;
      } else {
        b.options[param.name] = b.app->add_option("--" + param.name, b.values[param.name], help)->type_name(kind_label(param.kind));
      }
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return suite::kExitUsage;
  }

  suite::RunConfig config;
  config.seed = seed;
  const Bound* chosen = nullptr;
  for (const Bound& b : bound) {
    if (b.app->parsed()) chosen = &b;
  }
  config.subcommand = chosen->schema->name;

  try {
    if (!config_file.empty()) {
      for (const auto& [key, value] : suite::read_config_file(config_file)) {
        if (key == "seed") {
          config.seed = std::stoull(value);
        } else if (key == "output") {
          if (output.empty()) output = value;
        } else {
          config.params[key] = value;
        }
      }
      if (app.count("--seed")) config.seed = seed;
    }
  } catch (const std::exception& e) {
    std::cerr << "dysonlab: " << e.what() << '\n';
    return suite::kExitUsage;
  }
  for (const auto& [name, opt] : chosen->options) {
    if (opt->count() == 0) continue;
    const std::string& value = chosen->values.at(name);
    const auto* spec = chosen->schema->find(name);
    config.params[name] = (spec->kind == ParamKind::Bool && value.empty()) ? "true" : value;
  }
  if (output.empty()) {
    if (const char* env = std::getenv("DYSONLAB_OUTPUT_DIR"); env && *env) output = env;
  }
  if (!output.empty()) config.output_dir = output;

  const suite::RunOutcome outcome = suite::run(config);
  if (!outcome.record.subcommand().empty()) std::cout << outcome.record.to_text();
  if (!outcome.message.empty()) std::cerr << "dysonlab " << config.subcommand << ": " << outcome.message << '\n';
  if (outcome.record_path) std::cerr << "record written to " << outcome.record_path->string() << '\n';
  std::cerr << "wall time " << outcome.wall_seconds << " s\n";
  return outcome.exit_code;
}
