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

#ifndef SIMILE_CORPUS_HPP_
#define SIMILE_CORPUS_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "simile/language.hpp"

namespace simile {

// One novel. Immutable after load; `text` is NFC with LF line endings.
struct Document {
  std::string id;
  Language language = Language::kEnglish;
  std::string author;
  std::string title;
  std::string text;
  std::string source_path;
};

struct ManifestEntry {
  std::string id;
  std::string path;
  Language language = Language::kEnglish;
  std::string author;
  std::string title;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
};

// CRLF and lone CR become LF, then NFC.
std::string normalize_text(std::string_view text);

// Removes everything up to and including the last `*** START OF ... ***`
// line and everything from the first following `*** END OF ... ***` line.
// Lines are matched whole and case-insensitively. Output is normalized.
std::string strip_boilerplate(std::string_view text);

// UTF-8 (an initial BOM is dropped) with a Latin-1 fallback. Control
// characters other than tab, LF, CR and FF reject a decoding; if both
// decoders reject the bytes an InputError naming `origin` is thrown.
std::string decode_text(std::string_view bytes, std::string_view origin);

Document load_document(const std::filesystem::path& path,
                       const ManifestEntry& meta);

// Parses `id,path,language,author,title`. Relative paths are resolved
// against `base_dir`. Errors carry the CSV line number.
CorpusManifest parse_manifest(std::string_view text,
                              const std::filesystem::path& base_dir);

CorpusManifest read_manifest(const std::filesystem::path& manifest_path);

std::vector<Document> load_corpus(const std::filesystem::path& manifest_path);

}  // namespace simile

#endif  // SIMILE_CORPUS_HPP_
