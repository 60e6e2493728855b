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

#include "simile/stats.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "simile/csv.hpp"
#include "simile/error.hpp"

namespace simile {

Rational::Rational(std::uint64_t numerator, std::uint64_t denominator) {
  if (denominator == 0) throw InvariantError("rational with zero denominator");
  const std::uint64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_decimal(int digits) const {
  unsigned __int128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const unsigned __int128 scaled =
      (static_cast<unsigned __int128>(num_) * scale * 2 + den_) / (2 * static_cast<unsigned __int128>(den_));
  const auto integer = static_cast<std::uint64_t>(scaled / scale);
  auto fraction = static_cast<std::uint64_t>(scaled % scale);
  std::string frac(static_cast<std::size_t>(digits), '0');
  for (int i = digits - 1; i >= 0; --i) {
    frac[static_cast<std::size_t>(i)] = static_cast<char>('0' + fraction % 10);
    fraction /= 10;
  }
  return digits > 0 ? std::to_string(integer) + "." + frac : std::to_string(integer);
}

std::uint64_t FrequencyReport::count(const std::string& doc_id,
                                     const std::string& marker_id) const {
  const auto it = cells.find({doc_id, marker_id});
  return it == cells.end() ? 0 : it->second;
}

std::uint64_t FrequencyReport::total() const {
  std::uint64_t sum = 0;
  for (const auto& [key, n] : cells) sum += n;
  return sum;
}

FrequencyReport build_report(std::span<const SimileCandidate> candidates,
                             std::uint64_t sentence_count, const DocInfo& doc) {
  FrequencyReport report;
  for (const SimileCandidate& c : candidates) {
    if (c.doc_id != doc.id) {
      throw InputError("candidate for document '" + c.doc_id +
                       "' in report for '" + doc.id + "'");
    }
    ++report.cells[{c.doc_id, c.marker_id}];
  }
  if (sentence_count == 0 && !report.cells.empty()) {
    throw InputError(doc.id + ": candidates in a document with no sentences");
  }
  report.doc_sentences[doc.id] = sentence_count;
  report.doc_meta[doc.id] = doc.meta;
  return report;
}

Rational per_sentence_rate(const FrequencyReport& report, const std::string& doc_id,
                           const std::string& marker_id) {
  const auto it = report.doc_sentences.find(doc_id);
  if (it == report.doc_sentences.end()) {
    throw InputError("unknown document '" + doc_id + "'");
  }
  if (it->second == 0) {
    throw InputError(doc_id + ": rate undefined for a document with no sentences");
  }
  return Rational(report.count(doc_id, marker_id), it->second);
}

FrequencyReport merge(const FrequencyReport& a, const FrequencyReport& b) {
  FrequencyReport out = a;
  for (const auto& [doc, sentences] : b.doc_sentences) {
    const auto [it, inserted] = out.doc_sentences.emplace(doc, sentences);
    if (!inserted && it->second != sentences) {
      throw InputError("document '" + doc + "' has conflicting sentence counts");
    }
  }
  for (const auto& [doc, meta] : b.doc_meta) {
    const auto [it, inserted] = out.doc_meta.emplace(doc, meta);
    if (!inserted && !(it->second == meta)) {
      throw InputError("document '" + doc + "' has conflicting metadata");
    }
  }
  for (const auto& [key, n] : b.cells) out.cells[key] += n;
  return out;
}

std::optional<GroupBy> parse_group_by(std::string_view name) {
  if (name == "marker") return GroupBy::kMarker;
  if (name == "author") return GroupBy::kAuthor;
  if (name == "language") return GroupBy::kLanguage;
  if (name == "category") return GroupBy::kCategory;
  return std::nullopt;
}

std::string_view group_by_name(GroupBy group_by) {
  switch (group_by) {
    case GroupBy::kMarker: return "marker";
    case GroupBy::kAuthor: return "author";
    case GroupBy::kLanguage: return "language";
    case GroupBy::kCategory: return "category";
  }
  return "";
}

CategoryMap category_map(std::span<const MarkerPattern> patterns) {
  CategoryMap map;
  for (const MarkerPattern& p : patterns) map[p.id] = p.category;
  return map;
}

std::vector<AggregateRow> aggregate(const FrequencyReport& report, GroupBy group_by,
                                    const CategoryMap& categories) {
  // group key -> per-document summed count; which documents are in scope.
  std::map<std::string, std::map<std::string, std::uint64_t>> per_doc;
  std::map<std::string, std::set<std::string>> scope;

  auto doc_key = [&](const std::string& doc) -> std::string {
    const DocMeta& meta = report.doc_meta.at(doc);
    return group_by == GroupBy::kAuthor ? meta.author
                                        : std::string(language_code(meta.language));
  };

  std::set<std::string> all_docs;
  for (const auto& [doc, n] : report.doc_sentences) all_docs.insert(doc);

  if (group_by == GroupBy::kMarker || group_by == GroupBy::kCategory) {
    for (const auto& [key, n] : report.cells) {
      const auto& [doc, marker] = key;
      std::string group = marker;
      if (group_by == GroupBy::kCategory) {
        const auto it = categories.find(marker);
        if (it == categories.end()) {
          throw InputError("marker '" + marker + "' has no known category");
        }
        group = std::string(category_name(it->second));
      }
      per_doc[group][doc] += n;
      scope[group] = all_docs;
    }
  } else {
    for (const auto& doc : all_docs) {
      if (!report.doc_meta.count(doc)) {
        throw InputError("document '" + doc + "' has no metadata");
      }
      const std::string group = doc_key(doc);
      scope[group].insert(doc);
      per_doc[group];
    }
    for (const auto& [key, n] : report.cells) {
      per_doc[doc_key(key.first)][key.first] += n;
    }
  }

  std::vector<AggregateRow> rows;
  for (const auto& [group, docs] : scope) {
    AggregateRow row;
    row.group_key = group;
    row.total_docs = docs.size();
    for (const auto& doc : docs) row.total_sentences += report.doc_sentences.at(doc);
    for (const auto& [doc, n] : per_doc[group]) {
      row.total_count += n;
      if (n > 0) ++row.docs_with_nonzero;
    }
    if (row.total_sentences > 0) row.rate = Rational(row.total_count, row.total_sentences);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<AggregateRow> rank_markers(std::vector<AggregateRow> table) {
  std::stable_sort(table.begin(), table.end(),
                   [](const AggregateRow& a, const AggregateRow& b) {
                     if (a.total_count != b.total_count) return a.total_count > b.total_count;
                     return a.group_key < b.group_key;
                   });
  return table;
}

std::string report_to_csv(std::span<const AggregateRow> rows) {
  std::ostringstream out;
  out << kReportCsvHeader << '\n';
  for (const AggregateRow& r : rows) {
    const std::vector<std::string> fields = {
        r.group_key,
        std::to_string(r.total_count),
        std::to_string(r.docs_with_nonzero),
        std::to_string(r.total_docs),
        std::to_string(r.total_sentences),
        r.rate ? r.rate->to_decimal(6) : ""};
    write_csv_row(out, fields);
  }
  return out.str();
}

std::string report_to_json(std::span<const AggregateRow> rows) {
  nlohmann::ordered_json root = nlohmann::ordered_json::array();
  for (const AggregateRow& r : rows) {
    nlohmann::ordered_json j;
    j["group_key"] = r.group_key;
    j["total_count"] = r.total_count;
    j["docs_with_nonzero"] = r.docs_with_nonzero;
    j["total_docs"] = r.total_docs;
    j["total_sentences"] = r.total_sentences;
    if (r.rate) {
      j["rate"] = r.rate->to_decimal(6);
    } else {
      j["rate"] = nullptr;
    }
    root.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

}  // namespace simile
