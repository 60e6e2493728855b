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

#include "simile/corpus.hpp"

#include <unordered_set>

#include "simile/csv.hpp"
#include "simile/error.hpp"
#include "simile/io.hpp"
#include "simile/unicode.hpp"

namespace simile {

namespace fs = std::filesystem;

std::optional<Language> parse_language(std::string_view code) {
  const std::string lower = unicode::to_lower(code);
  if (lower == "en") return Language::kEnglish;
  if (lower == "fr") return Language::kFrench;
  return std::nullopt;
}

std::string_view language_code(Language language) {
  return language == Language::kEnglish ? "en" : "fr";
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

// `*** START OF ... ***` / `*** END OF ... ***`.
bool is_sentinel(std::string_view line, std::string_view keyword) {
  line = trim(line);
  if (line.size() < 6 || line.substr(0, 3) != "***" ||
      line.substr(line.size() - 3) != "***") {
    return false;
  }
  std::string_view inner = line.substr(3, line.size() - 6);
  while (!inner.empty() && (inner.front() == '*' || inner.front() == ' ')) {
    inner.remove_prefix(1);
  }
  const std::string upper = [&] {
    std::string s(inner.substr(0, keyword.size() + 3));
    for (char& c : s) {
      if (c >= 'a' && c <= 'z') c = static_cast<char>(c - 'a' + 'A');
    }
    return s;
  }();
  const std::string expected = std::string(keyword) + " OF";
  return upper.size() >= expected.size() &&
         upper.compare(0, expected.size(), expected) == 0;
}

struct Line {
  std::size_t begin;
  std::size_t end;       // excluding '\n'
  std::size_t next;      // start of following line
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back({pos, text.size(), text.size()});
      break;
    }
    lines.push_back({pos, nl, nl + 1});
    pos = nl + 1;
  }
  return lines;
}

bool has_rejected_control(std::string_view utf8) {
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    const char32_t c = unicode::next_code_point(utf8, pos);
    if (c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f') continue;
    if (c < 0x20 || c == 0x7F || (c >= 0x80 && c <= 0x9F)) return true;
  }
  return false;
}

}  // namespace

std::string normalize_text(std::string_view text) {
  std::string lf;
  lf.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      lf.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      lf.push_back(text[i]);
    }
  }
  return unicode::to_nfc(lf);
}

std::string strip_boilerplate(std::string_view raw) {
  const std::string text = normalize_text(raw);
  const std::vector<Line> lines = split_lines(text);
  const std::string_view view(text);

  std::size_t body_begin = 0;
  std::size_t first_line = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = view.substr(lines[i].begin, lines[i].end - lines[i].begin);
    if (is_sentinel(line, "START")) {
      body_begin = lines[i].next;
      first_line = i + 1;
    }
  }
  std::size_t body_end = text.size();
  for (std::size_t i = first_line; i < lines.size(); ++i) {
    const auto line = view.substr(lines[i].begin, lines[i].end - lines[i].begin);
    if (is_sentinel(line, "END")) {
      body_end = lines[i].begin;
      break;
    }
  }
  return text.substr(body_begin, body_end - body_begin);
}

std::string decode_text(std::string_view bytes, std::string_view origin) {
  if (bytes.substr(0, 3) == "\xEF\xBB\xBF") bytes.remove_prefix(3);
  if (unicode::is_valid_utf8(bytes) && !has_rejected_control(bytes)) {
    return std::string(bytes);
  }
  std::string latin1 = unicode::latin1_to_utf8(bytes);
  if (!has_rejected_control(latin1)) return latin1;
  throw InputError(std::string(origin) +
                   ": undecodable bytes (neither UTF-8 nor Latin-1 text)");
}

Document load_document(const fs::path& path, const ManifestEntry& meta) {
  const std::string bytes = read_file(path);
  Document doc;
  doc.id = meta.id;
  doc.language = meta.language;
  doc.author = meta.author;
  doc.title = meta.title;
  doc.source_path = path.string();
  doc.text = strip_boilerplate(decode_text(bytes, doc.source_path));
  return doc;
}

CorpusManifest parse_manifest(std::string_view text, const fs::path& base_dir) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  const std::vector<CsvRecord> records = parse_csv(text);
  CorpusManifest manifest;
  if (records.empty()) return manifest;

  const std::vector<std::string> expected = {"id", "path", "language", "author",
                                             "title"};
  if (records.front().fields != expected) {
    throw InputError("line " + std::to_string(records.front().line) +
                     ": manifest header must be id,path,language,author,title");
  }
  std::unordered_set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const CsvRecord& rec = records[r];
    const std::string where = "line " + std::to_string(rec.line);
    if (rec.fields.size() != expected.size()) {
      throw InputError(where + ": expected 5 fields, found " +
                       std::to_string(rec.fields.size()));
    }
    ManifestEntry entry;
    entry.id = rec.fields[0];
    if (entry.id.empty()) throw InputError(where + ": empty id");
    if (rec.fields[1].empty()) throw InputError(where + ": empty path");
    const fs::path p(rec.fields[1]);
    entry.path = (p.is_absolute() ? p : base_dir / p).lexically_normal().string();
    const auto language = parse_language(rec.fields[2]);
    if (!language) {
      throw InputError(where + ": language must be en or fr, got '" +
                       rec.fields[2] + "'");
    }
    entry.language = *language;
    entry.author = rec.fields[3];
    entry.title = rec.fields[4];
    if (!seen.insert(entry.id).second) {
      throw InputError(where + ": duplicate id '" + entry.id + "'");
    }
    manifest.entries.push_back(std::move(entry));
  }
  return manifest;
}

CorpusManifest read_manifest(const fs::path& manifest_path) {
  const std::string text = read_file(manifest_path);
  try {
    return parse_manifest(text, manifest_path.parent_path());
  } catch (const InputError& e) {
    throw InputError(manifest_path.string() + ": " + e.what());
  }
}

std::vector<Document> load_corpus(const fs::path& manifest_path) {
  const CorpusManifest manifest = read_manifest(manifest_path);
  std::vector<Document> docs;
  docs.reserve(manifest.entries.size());
  for (const ManifestEntry& entry : manifest.entries) {
    docs.push_back(load_document(entry.path, entry));
  }
  return docs;
}

}  // namespace simile
