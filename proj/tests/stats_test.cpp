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

#include <doctest.h>

#include <random>

#include "oracle/oracle.hpp"
#include "simile/error.hpp"
#include "simile/extractor.hpp"
#include "simile/io.hpp"
#include "simile/stats.hpp"
#include "support.hpp"

using simile::AggregateRow;
using simile::FrequencyReport;
using simile::GroupBy;
using simile::Language;
using simile::Rational;

namespace {

simile::SimileCandidate candidate(std::string doc, std::string marker) {
  simile::SimileCandidate c;
  c.doc_id = std::move(doc);
  c.marker_id = std::move(marker);
  return c;
}

FrequencyReport report(const std::string& doc, std::uint64_t sentences, const std::string& author,
                       Language language, std::initializer_list<std::pair<const char*, int>> counts) {
  std::vector<simile::SimileCandidate> candidates;
  for (const auto& [marker, n] : counts) {
    for (int i = 0; i < n; ++i) candidates.push_back(candidate(doc, marker));
  }
  return simile::build_report(candidates, sentences, {doc, {author, language}});
}

simile::CategoryMap builtin_categories() {
  auto map = simile::category_map(simile::builtin_lexicon(Language::kEnglish));
  map.merge(simile::category_map(simile::builtin_lexicon(Language::kFrench)));
  return map;
}

}  // namespace

TEST_CASE("rational arithmetic and decimal rendering") {
  CHECK(Rational(1, 20).to_decimal() == "0.050000");
  CHECK(Rational(7, 96).to_decimal() == "0.072917");
  CHECK(Rational(2, 3).to_decimal() == "0.666667");
  CHECK(Rational(1, 3).to_decimal() == "0.333333");
  CHECK(Rational(0, 5).to_decimal() == "0.000000");
  CHECK(Rational(5, 2).to_decimal() == "2.500000");
  CHECK(Rational(1, 8).to_decimal(2) == "0.13");
  CHECK(Rational(1, 2000000).to_decimal() == "0.000001");
  CHECK(Rational(1, 2000001).to_decimal() == "0.000000");
  CHECK(Rational(3, 1).to_decimal(0) == "3");
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).numerator() == 3);
  CHECK(Rational(0, 7) == Rational(0, 1));
  CHECK_THROWS_AS(Rational(1, 0), simile::InvariantError);
  const std::uint64_t big = ~std::uint64_t{0};
  CHECK(Rational(big, big).to_decimal() == "1.000000");
  CHECK(Rational(big - 1, big).to_decimal() == "1.000000");
}

TEST_CASE("decimal rendering matches long division") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> num(0, 1000000), den(1, 100000);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::uint64_t n = num(rng), d = den(rng);
    // Round half up at six digits using integer arithmetic only.
    const std::uint64_t scaled = (n * 1000000 * 2 + d) / (2 * d);
    std::string frac = std::to_string(scaled % 1000000);
    frac.insert(0, 6 - frac.size(), '0');
    CHECK(Rational(n, d).to_decimal() == std::to_string(scaled / 1000000) + "." + frac);
  }
}

TEST_CASE("building reports") {
  const auto r = report("a", 20, "Ann", Language::kEnglish, {{"en.verb.seem", 1}, {"en.adj.akin_to", 2}});
  CHECK(r.count("a", "en.verb.seem") == 1);
  CHECK(r.count("a", "en.adj.akin_to") == 2);
  CHECK(r.count("a", "en.verb.resemble") == 0);
  CHECK(r.total() == 3);
  CHECK(simile::per_sentence_rate(r, "a", "en.verb.seem").to_decimal() == "0.050000");
  CHECK(simile::per_sentence_rate(r, "a", "en.verb.resemble") == Rational(0, 1));
  CHECK_THROWS_AS(simile::per_sentence_rate(r, "b", "en.verb.seem"), simile::InputError);

  const auto empty = simile::build_report({}, 0, {"z", {"Zed", Language::kFrench}});
  CHECK(empty.cells.empty());
  CHECK(empty.doc_sentences.at("z") == 0);
  CHECK_THROWS_AS(simile::per_sentence_rate(empty, "z", "x"), simile::InputError);

  const std::vector<simile::SimileCandidate> stray = {candidate("other", "m")};
  CHECK_THROWS_AS(simile::build_report(stray, 5, {"a", {}}), simile::InputError);
  const std::vector<simile::SimileCandidate> orphan = {candidate("a", "m")};
  CHECK_THROWS_AS(simile::build_report(orphan, 0, {"a", {}}), simile::InputError);
}

TEST_CASE("merge conflicts are errors") {
  const auto a = report("a", 20, "Ann", Language::kEnglish, {{"m", 1}});
  CHECK_THROWS_AS(simile::merge(a, report("a", 21, "Ann", Language::kEnglish, {})), simile::InputError);
  CHECK_THROWS_AS(simile::merge(a, report("a", 20, "Bob", Language::kEnglish, {})), simile::InputError);
  CHECK_THROWS_AS(simile::merge(a, report("a", 20, "Ann", Language::kFrench, {})), simile::InputError);
  CHECK(simile::merge(a, a).count("a", "m") == 2);
}

TEST_CASE("aggregation by marker, author, language and category") {
  const auto r = simile::merge(
      simile::merge(report("a", 20, "Ann", Language::kEnglish, {{"en.verb.seem", 1}}),
                    report("b", 30, "Ann", Language::kEnglish, {{"en.verb.seem", 2}, {"en.adj.akin_to", 1}})),
      report("c", 50, "Bob", Language::kFrench, {}));
  const auto categories = builtin_categories();

  const auto markers = simile::aggregate(r, GroupBy::kMarker);
  REQUIRE(markers.size() == 2);
  CHECK(markers[0] == AggregateRow{"en.adj.akin_to", 1, 1, 3, 100, Rational(1, 100)});
  CHECK(markers[1] == AggregateRow{"en.verb.seem", 3, 2, 3, 100, Rational(3, 100)});

  const auto authors = simile::aggregate(r, GroupBy::kAuthor);
  REQUIRE(authors.size() == 2);
  CHECK(authors[0] == AggregateRow{"Ann", 4, 2, 2, 50, Rational(4, 50)});
  CHECK(authors[1] == AggregateRow{"Bob", 0, 0, 1, 50, Rational(0, 1)});
  CHECK(authors[0].rate->to_decimal() == "0.080000");

  const auto languages = simile::aggregate(r, GroupBy::kLanguage);
  REQUIRE(languages.size() == 2);
  CHECK(languages[0].group_key == "en");
  CHECK(languages[1] == AggregateRow{"fr", 0, 0, 1, 50, Rational(0, 1)});

  const auto cats = simile::aggregate(r, GroupBy::kCategory, categories);
  REQUIRE(cats.size() == 2);
  CHECK(cats[0] == AggregateRow{"adj", 1, 1, 3, 100, Rational(1, 100)});
  CHECK(cats[1] == AggregateRow{"verb", 3, 2, 3, 100, Rational(3, 100)});
  CHECK_THROWS_AS(simile::aggregate(r, GroupBy::kCategory, {}), simile::InputError);

  CHECK(simile::aggregate(FrequencyReport{}, GroupBy::kMarker).empty());
  CHECK(simile::aggregate(FrequencyReport{}, GroupBy::kAuthor).empty());

  // A group with no sentences has no rate.
  const auto silent = simile::aggregate(report("z", 0, "Zed", Language::kEnglish, {}), GroupBy::kAuthor);
  REQUIRE(silent.size() == 1);
  CHECK_FALSE(silent[0].rate);
}

TEST_CASE("ranking") {
  const std::vector<AggregateRow> rows = {
      {"b", 3, 1, 1, 10, {}}, {"a", 3, 1, 1, 10, {}}, {"c", 7, 1, 1, 10, {}}, {"d", 0, 0, 1, 10, {}}};
  const auto ranked = simile::rank_markers(rows);
  std::vector<std::string> keys;
  for (const auto& r : ranked) keys.push_back(r.group_key);
  CHECK(keys == std::vector<std::string>{"c", "a", "b", "d"});
  CHECK(simile::rank_markers(ranked) == ranked);
}

TEST_CASE("group key names") {
  for (GroupBy g : {GroupBy::kMarker, GroupBy::kAuthor, GroupBy::kLanguage, GroupBy::kCategory}) {
    CHECK(simile::parse_group_by(simile::group_by_name(g)) == g);
  }
  CHECK_FALSE(simile::parse_group_by("decade"));
  CHECK_FALSE(simile::parse_group_by("Marker"));
}

TEST_CASE("report output formats") {
  const std::vector<AggregateRow> rows = {{"Smith, J.", 1, 1, 1, 20, Rational(1, 20)},
                                          {"x", 0, 0, 1, 0, std::nullopt}};
  CHECK(simile::report_to_csv(rows) ==
        "group_key,total_count,docs_with_nonzero,total_docs,total_sentences,rate\n"
        "\"Smith, J.\",1,1,1,20,0.050000\n"
        "x,0,0,1,0,\n");
  CHECK(simile::report_to_json(rows) ==
        "[\n"
        "  {\n"
        "    \"group_key\": \"Smith, J.\",\n"
        "    \"total_count\": 1,\n"
        "    \"docs_with_nonzero\": 1,\n"
        "    \"total_docs\": 1,\n"
        "    \"total_sentences\": 20,\n"
        "    \"rate\": \"0.050000\"\n"
        "  },\n"
        "  {\n"
        "    \"group_key\": \"x\",\n"
        "    \"total_count\": 0,\n"
        "    \"docs_with_nonzero\": 0,\n"
        "    \"total_docs\": 1,\n"
        "    \"total_sentences\": 0,\n"
        "    \"rate\": null\n"
        "  }\n"
        "]\n");
  CHECK(simile::report_to_csv({}) == std::string(simile::kReportCsvHeader) + "\n");
  CHECK(simile::report_to_json({}) == "[]\n");
}

TEST_CASE("merge and aggregation laws on random reports") {
  std::mt19937_64 rng(77);
  const auto categories = builtin_categories();
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = oracle::random_report(rng);
    const auto b = oracle::random_report(rng);
    const auto c = oracle::random_report(rng);
    const auto failure = oracle::check_stats_laws(a, b, c, categories);
    CHECK(failure == std::nullopt);
  }
}

TEST_CASE("reports built from candidates merge like concatenation") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> n(0, 30);
  const char* markers[] = {"en.verb.seem", "en.adj.akin_to", "en.adj.like_suffix"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<simile::SimileCandidate> first, second;
    for (int i = n(rng); i > 0; --i) first.push_back(candidate("doc", markers[i % 3]));
    for (int i = n(rng); i > 0; --i) second.push_back(candidate("doc", markers[(i * 7) % 3]));
    std::vector<simile::SimileCandidate> both = first;
    both.insert(both.end(), second.begin(), second.end());
    const simile::DocInfo info{"doc", {"Ann", Language::kEnglish}};
    const auto merged = simile::merge(simile::build_report(first, 40, info),
                                      simile::build_report(second, 40, info));
    const auto whole = simile::build_report(both, 40, info);
    CHECK(merged.total() == whole.total());
    CHECK(merged.cells == whole.cells);
  }
}

TEST_CASE("gold tables") {
  FrequencyReport r;
  for (const auto& [doc, author, language, sentences] :
       std::vector<std::tuple<std::string, std::string, Language, std::uint64_t>>{
           {"en_a", "Ann Ashdown", Language::kEnglish, 25},
           {"en_b", "Ben Brook", Language::kEnglish, 25},
           {"fr_a", "Claire Corbin", Language::kFrench, 23},
           {"fr_b", "Claire Corbin", Language::kFrench, 23}}) {
    const auto candidates =
        simile::parse_candidates(simile::read_file(test::data_path("gold/" + doc + ".gold.jsonl")));
    r = simile::merge(r, simile::build_report(candidates, sentences, {doc, {author, language}}));
  }
  const auto categories = builtin_categories();
  CHECK(simile::report_to_csv(simile::rank_markers(simile::aggregate(r, GroupBy::kMarker))) ==
        simile::read_file(test::data_path("gold/report_marker.csv")));
  CHECK(simile::report_to_csv(simile::aggregate(r, GroupBy::kAuthor)) ==
        simile::read_file(test::data_path("gold/report_author.csv")));
  CHECK(simile::report_to_csv(simile::aggregate(r, GroupBy::kLanguage)) ==
        simile::read_file(test::data_path("gold/report_language.csv")));
  CHECK(simile::report_to_csv(simile::aggregate(r, GroupBy::kCategory, categories)) ==
        simile::read_file(test::data_path("gold/report_category.csv")));
}
