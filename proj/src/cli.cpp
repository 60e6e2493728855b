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

#include "simile/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "simile/corpus.hpp"
#include "simile/error.hpp"
#include "simile/extractor.hpp"
#include "simile/io.hpp"
#include "simile/lexicon.hpp"
#include "simile/matcher.hpp"
#include "simile/stats.hpp"
#include "simile/tagger.hpp"

#ifndef SIMILE_DEFAULT_DATA_DIR
#define SIMILE_DEFAULT_DATA_DIR "data"
#endif

namespace simile::cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

struct DocOutcome {
  ExtractionResult result;
  std::string error;  // empty on success
};

int report_error(std::ostream& err, const std::exception& e) {
  if (dynamic_cast<const UsageError*>(&e)) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (dynamic_cast<const InputError*>(&e)) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  err << "internal error: " << e.what() << "\n";
  return kExitInternal;
}

std::vector<MarkerPattern> patterns_for(const RunConfig& config, Language language) {
  std::vector<MarkerPattern> patterns = builtin_lexicon(language);
  if (config.lexicon_path) {
    for (MarkerPattern& p : load_lexicon(*config.lexicon_path)) {
      const bool clash = std::any_of(patterns.begin(), patterns.end(),
                                     [&](const MarkerPattern& b) { return b.id == p.id; });
      if (clash) {
        throw InputError(*config.lexicon_path + ": id '" + p.id +
                         "' duplicates a built-in marker");
      }
      patterns.push_back(std::move(p));
    }
  }
  return patterns;
}

ColourLexicon colours_for(const RunConfig& config, const std::string& data_dir) {
  const fs::path path = config.colour_lexicon_path
                            ? fs::path(*config.colour_lexicon_path)
                            : fs::path(data_dir) / "colours.txt";
  return ColourLexicon::load(path);
}

std::string serialize_candidates(const std::vector<SimileCandidate>& candidates,
                                 OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::kCsv) {
    write_candidates_csv(out, candidates);
  } else {
    write_candidates_jsonl(out, candidates);
  }
  return out.str();
}

// Runs `work(i)` for i in [0, n) on up to `workers` threads.
template <typename Work>
void parallel_for(std::size_t n, std::size_t workers, Work work) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) work(i);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

std::string sidecar_path(const std::string& candidates_path) {
  return candidates_path + ".docs.json";
}

std::string resolve_data_dir(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("SIMILE_DATA_DIR"); env != nullptr && *env) {
    return env;
  }
  return SIMILE_DEFAULT_DATA_DIR;
}

int run_extract(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (!config.language) throw UsageError("extract requires --lang");
    if (config.manifest.empty()) throw UsageError("extract requires --manifest");
    if (config.out.empty()) throw UsageError("extract requires --out");
    if (config.format == OutputFormat::kJson) {
      throw UsageError("extract --format must be jsonl or csv");
    }
    if (config.parallelism == 0) throw UsageError("--parallelism must be positive");
    const Language language = *config.language;
    const std::string data_dir = resolve_data_dir(config.data_dir);

    const CorpusManifest manifest = read_manifest(config.manifest);
    for (const ManifestEntry& e : manifest.entries) {
      if (e.language != language) {
        throw InputError(config.manifest + ": document '" + e.id + "' is " +
                         std::string(language_code(e.language)) + " but --lang is " +
                         std::string(language_code(language)));
      }
    }

    const std::vector<MarkerPattern> patterns = patterns_for(config, language);
    const std::vector<Matcher> matchers =
        compile_lexicon(patterns, colours_for(config, data_dir));
    TaggerLexicon tagger(language);
    if (!config.tagged_input) {
      tagger = TaggerLexicon::load(
          fs::path(data_dir) / "lexicon" / (std::string(language_code(language)) + ".tsv"),
          language);
    }

    const std::size_t n = manifest.entries.size();
    const std::size_t doc_workers = std::max<std::size_t>(1, std::min(config.parallelism, n));
    ExtractOptions options;
    options.include_excluded = config.include_excluded;
    options.parallelism = std::max<std::size_t>(1, config.parallelism / doc_workers);

    std::vector<DocOutcome> outcomes(n);
    parallel_for(n, doc_workers, [&](std::size_t i) {
      const ManifestEntry& entry = manifest.entries[i];
      try {
        if (config.tagged_input) {
          const std::string text =
              normalize_text(decode_text(read_file(entry.path), entry.path));
          outcomes[i].result = extract_tagged(entry.id, language, text, matchers, options);
        } else {
          const Document doc = load_document(entry.path, entry);
          outcomes[i].result = extract_document(doc, tagger, matchers, options);
        }
      } catch (const std::exception& e) {
        outcomes[i].error = e.what();
      }
    });

    std::size_t failures = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (outcomes[i].error.empty()) continue;
      ++failures;
      err << "error: " << manifest.entries[i].id << " (" << manifest.entries[i].path
          << "): " << outcomes[i].error << "\n";
    }
    if (failures > 0) {
      err << failures << " of " << n << " documents failed; no output written\n";
      return kExitInput;
    }

    std::vector<SimileCandidate> all;
    Json docs = Json::array();
    for (std::size_t i = 0; i < n; ++i) {
      const ManifestEntry& entry = manifest.entries[i];
      const ExtractionResult& r = outcomes[i].result;
      all.insert(all.end(), r.candidates.begin(), r.candidates.end());
      Json d;
      d["doc_id"] = entry.id;
      d["language"] = std::string(language_code(entry.language));
      d["author"] = entry.author;
      d["title"] = entry.title;
      d["sentence_count"] = r.sentence_count;
      d["candidate_count"] = r.candidates.size();
      docs.push_back(std::move(d));
    }
    Json sidecar;
    sidecar["documents"] = docs;
    sidecar["include_excluded"] = config.include_excluded;

    write_file_atomic(config.out, serialize_candidates(all, config.format));
    write_file_atomic(sidecar_path(config.out), sidecar.dump(2) + "\n");
    out << "wrote " << all.size() << " candidates from " << n << " documents to "
        << config.out << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

namespace {

FrequencyReport report_for_file(const std::string& path) {
  const std::string side = sidecar_path(path);
  if (!fs::exists(side)) {
    throw InputError(path + ": missing sidecar " + side + " (sentence counts unknown)");
  }
  std::vector<SimileCandidate> candidates;
  try {
    candidates = parse_candidates(read_file(path));
  } catch (const InputError& e) {
    const std::string message = e.what();
    if (message.rfind(path, 0) == 0) throw;
    throw InputError(path + ": " + message);
  }

  Json sidecar;
  try {
    sidecar = Json::parse(read_file(side));
  } catch (const Json::exception& e) {
    throw InputError(side + ": " + e.what());
  }
  const auto docs = sidecar.find("documents");
  if (docs == sidecar.end() || !docs->is_array()) {
    throw InputError(side + ": expected a \"documents\" array");
  }

  std::map<std::string, std::vector<SimileCandidate>> by_doc;
  for (SimileCandidate& c : candidates) by_doc[c.doc_id].push_back(std::move(c));

  FrequencyReport report;
  for (std::size_t i = 0; i < docs->size(); ++i) {
    const Json& d = (*docs)[i];
    const std::string where = side + ": documents[" + std::to_string(i) + "]";
    try {
      DocInfo info;
      info.id = d.at("doc_id").get<std::string>();
      info.meta.author = d.at("author").get<std::string>();
      const auto language = parse_language(d.at("language").get<std::string>());
      if (!language) throw InputError("bad language");
      info.meta.language = *language;
      const auto sentences = d.at("sentence_count").get<std::uint64_t>();
      const auto it = by_doc.find(info.id);
      const std::vector<SimileCandidate> none;
      const auto& own = it == by_doc.end() ? none : it->second;
      report = merge(report, build_report(own, sentences, info));
      if (it != by_doc.end()) by_doc.erase(it);
    } catch (const Json::exception& e) {
      throw InputError(where + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  if (!by_doc.empty()) {
    throw InputError(path + ": candidates for document '" + by_doc.begin()->first +
                     "' not listed in " + side);
  }
  return report;
}

}  // namespace

int run_report(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.inputs.empty()) throw UsageError("report needs at least one candidate file");
    if (config.format == OutputFormat::kJsonl) {
      throw UsageError("report --format must be csv or json");
    }
    FrequencyReport report;
    for (const std::string& path : config.inputs) {
      report = merge(report, report_for_file(path));
    }

    std::vector<MarkerPattern> patterns = builtin_lexicon(Language::kEnglish);
    const auto fr = builtin_lexicon(Language::kFrench);
    patterns.insert(patterns.end(), fr.begin(), fr.end());
    if (config.lexicon_path) {
      const auto custom = load_lexicon(*config.lexicon_path);
      patterns.insert(patterns.end(), custom.begin(), custom.end());
    }

    std::vector<AggregateRow> rows =
        aggregate(report, config.group_by, category_map(patterns));
    if (config.group_by == GroupBy::kMarker) rows = rank_markers(std::move(rows));
    const std::string body = config.format == OutputFormat::kJson
                                 ? report_to_json(rows)
                                 : report_to_csv(rows);
    if (config.out.empty()) {
      out << body;
    } else {
      write_file_atomic(config.out, body);
    }
    return kExitOk;
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int run_lexicon(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.lexicon_action == "show") {
      if (!config.language) throw UsageError("lexicon show requires --lang");
      const std::string body = lexicon_to_json(builtin_lexicon(*config.language));
      if (config.out.empty()) {
        out << body;
      } else {
        write_file_atomic(config.out, body);
      }
      return kExitOk;
    }
    if (config.lexicon_action == "validate") {
      if (config.inputs.size() != 1) throw UsageError("lexicon validate takes one file");
      const auto patterns = load_lexicon(config.inputs.front());
      compile_lexicon(patterns);
      out << config.inputs.front() << ": ok, " << patterns.size() << " patterns\n";
      return kExitOk;
    }
    throw UsageError("lexicon needs a subcommand: show or validate");
  } catch (const std::exception& e) {
    return report_error(err, e);
  }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simile candidate extraction and marker frequency reports", "simile"};
  app.require_subcommand(1);
  RunConfig config;
  std::string lang;
  std::string format;
  std::string group_by = "marker";
  std::string lexicon_path;
  std::string colour_path;

  auto* extract = app.add_subcommand("extract", "Extract simile candidates from a corpus");
  extract->add_option("--manifest", config.manifest, "Corpus manifest CSV")->required();
  extract->add_option("--lang", lang, "Corpus language: en or fr")->required();
  extract->add_flag("--tagged-input", config.tagged_input,
                    "Manifest paths are tagged TSV files");
  extract->add_option("--lexicon", lexicon_path, "Extra marker patterns (JSON)");
  extract->add_option("--colour-lexicon", colour_path, "Colour word list");
  extract->add_flag("--include-excluded", config.include_excluded,
                    "Also use markers excluded by default (remind, rappeler)");
  extract->add_option("--format", format, "jsonl or csv")->default_str("jsonl");
  extract->add_option("--out", config.out, "Candidate output file")->required();
  extract->add_option("--parallelism", config.parallelism, "Worker threads");
  extract->add_option("--data-dir", config.data_dir, "Bundled data directory");

  auto* report = app.add_subcommand("report", "Aggregate candidate files");
  report->add_option("inputs", config.inputs, "Candidate files")->required();
  report->add_option("--group-by", group_by, "marker, author, language or category");
  report->add_option("--format", format, "csv or json");
  report->add_option("--out", config.out, "Output file (default stdout)");
  report->add_option("--lexicon", lexicon_path, "Extra marker patterns (JSON)");

  auto* lexicon = app.add_subcommand("lexicon", "Inspect or validate marker lexicons");
  lexicon->require_subcommand(1);
  auto* show = lexicon->add_subcommand("show", "Print a built-in lexicon as JSON");
  show->add_option("--lang", lang, "en or fr")->required();
  show->add_option("--out", config.out, "Output file (default stdout)");
  auto* validate = lexicon->add_subcommand("validate", "Check a custom lexicon file");
  validate->add_option("file", config.inputs, "Lexicon JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!lang.empty()) {
    config.language = parse_language(lang);
    if (!config.language) {
      err << "usage error: --lang must be en or fr, got '" << lang << "'\n";
      return kExitUsage;
    }
  }
  if (!lexicon_path.empty()) config.lexicon_path = lexicon_path;
  if (!colour_path.empty()) config.colour_lexicon_path = colour_path;

  if (*extract) {
    config.command = Command::kExtract;
    if (format.empty() || format == "jsonl") {
      config.format = OutputFormat::kJsonl;
    } else if (format == "csv") {
      config.format = OutputFormat::kCsv;
    } else {
      err << "usage error: --format must be jsonl or csv, got '" << format << "'\n";
      return kExitUsage;
    }
    return run_extract(config, out, err);
  }
  if (*report) {
    config.command = Command::kReport;
    if (format.empty() || format == "csv") {
      config.format = OutputFormat::kCsv;
    } else if (format == "json") {
      config.format = OutputFormat::kJson;
    } else {
      err << "usage error: --format must be csv or json, got '" << format << "'\n";
      return kExitUsage;
    }
    const auto g = parse_group_by(group_by);
    if (!g) {
      err << "usage error: unknown --group-by '" << group_by
          << "' (expected marker, author, language or category)\n";
      return kExitUsage;
    }
    config.group_by = *g;
    return run_report(config, out, err);
  }
  config.command = Command::kLexicon;
  config.lexicon_action = *show ? "show" : "validate";
  return run_lexicon(config, out, err);
}

}  // namespace simile::cli
