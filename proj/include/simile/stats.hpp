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

#ifndef SIMILE_STATS_HPP_
#define SIMILE_STATS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "simile/extractor.hpp"
#include "simile/language.hpp"
#include "simile/lexicon.hpp"

namespace simile {

// Exact non-negative fraction, always reduced.
class Rational {
 public:
  Rational() = default;
  Rational(std::uint64_t numerator, std::uint64_t denominator);

  std::uint64_t numerator() const { return num_; }
  std::uint64_t denominator() const { return den_; }

  // Rounded half up to `digits` fractional digits, e.g. "0.050000".
  std::string to_decimal(int digits = 6) const;

  friend bool operator==(const Rational&, const Rational&) = default;

 private:
  std::uint64_t num_ = 0;
  std::uint64_t den_ = 1;
};

struct DocMeta {
  std::string author;
  Language language = Language::kEnglish;
  friend bool operator==(const DocMeta&, const DocMeta&) = default;
};

struct DocInfo {
  std::string id;
  DocMeta meta;
};

// Per-(document, marker) raw counts with the sentence totals needed for
// per-sentence rates. A value; combine with merge().
struct FrequencyReport {
  std::map<std::pair<std::string, std::string>, std::uint64_t> cells;
  std::map<std::string, std::uint64_t> doc_sentences;
  std::map<std::string, DocMeta> doc_meta;

  std::uint64_t count(const std::string& doc_id, const std::string& marker_id) const;
  std::uint64_t total() const;
  friend bool operator==(const FrequencyReport&, const FrequencyReport&) = default;
};

// Throws InputError if a candidate belongs to another document.
FrequencyReport build_report(std::span<const SimileCandidate> candidates,
                             std::uint64_t sentence_count, const DocInfo& doc);

// count / sentence_count. Throws InputError for an unknown document or a
// document with no sentences.
Rational per_sentence_rate(const FrequencyReport& report, const std::string& doc_id,
                           const std::string& marker_id);

// Cell-wise sum. Throws InputError when a shared document disagrees on its
// sentence count or metadata.
FrequencyReport merge(const FrequencyReport& a, const FrequencyReport& b);

enum class GroupBy { kMarker, kAuthor, kLanguage, kCategory };

std::optional<GroupBy> parse_group_by(std::string_view name);
std::string_view group_by_name(GroupBy group_by);

struct AggregateRow {
  std::string group_key;
  std::uint64_t total_count = 0;
  std::uint64_t docs_with_nonzero = 0;
  std::uint64_t total_docs = 0;
  std::uint64_t total_sentences = 0;
  std::optional<Rational> rate;  // absent when total_sentences is 0

  friend bool operator==(const AggregateRow&, const AggregateRow&) = default;
};

// Maps marker ids to their VERB/ADJ category for GroupBy::kCategory.
using CategoryMap = std::map<std::string, MarkerCategory>;

CategoryMap category_map(std::span<const MarkerPattern> patterns);

// Rows are ordered by group key. Marker and category rows exist for keys that
// occur in the cells and span every document; author and language rows
// exist for every document group. kCategory throws InputError on a marker
// missing from `categories`.
std::vector<AggregateRow> aggregate(const FrequencyReport& report, GroupBy group_by,
                                    const CategoryMap& categories = {});

// Descending total_count, ties by ascending key.
std::vector<AggregateRow> rank_markers(std::vector<AggregateRow> table);

inline constexpr std::string_view kReportCsvHeader =
    "group_key,total_count,docs_with_nonzero,total_docs,total_sentences,rate";

std::string report_to_csv(std::span<const AggregateRow> rows);
std::string report_to_json(std::span<const AggregateRow> rows);

}  // namespace simile

#endif  // SIMILE_STATS_HPP_
