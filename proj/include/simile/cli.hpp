// Copyright 2026 The Simile Authors.
//
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

#ifndef SIMILE_CLI_HPP_
#define SIMILE_CLI_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "simile/language.hpp"
#include "simile/stats.hpp"

namespace simile::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInput = 2,
  kExitInternal = 3,
};

enum class Command { kExtract, kReport, kLexicon };
enum class OutputFormat { kJsonl, kCsv, kJson };

struct RunConfig {
  Command command = Command::kExtract;
  std::optional<Language> language;
  std::string manifest;
  std::vector<std::string> inputs;  // report: candidate files; lexicon validate: file
  bool tagged_input = false;
  std::optional<std::string> lexicon_path;
  std::optional<std::string> colour_lexicon_path;
  bool include_excluded = false;
  OutputFormat format = OutputFormat::kJsonl;
  std::string out;  // empty: stdout (report, lexicon)
  GroupBy group_by = GroupBy::kMarker;
  std::size_t parallelism = 1;
  std::string data_dir;      // empty: $SIMILE_DATA_DIR, then the bundled data
  std::string lexicon_action;  // "show" | "validate"
};

// Sidecar written next to a candidate file: `<candidates>.docs.json`.
std::string sidecar_path(const std::string& candidates_path);

// Resolves the data directory: explicit value, $SIMILE_DATA_DIR, then the
// directory bundled with the build.
std::string resolve_data_dir(const std::string& explicit_dir);

int run_extract(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_report(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_lexicon(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses `args` (without the program name) and dispatches.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace simile::cli

#endif  // SIMILE_CLI_HPP_
