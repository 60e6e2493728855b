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

#ifndef SIMILE_EXTRACTOR_HPP_
#define SIMILE_EXTRACTOR_HPP_

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simile/corpus.hpp"
#include "simile/matcher.hpp"
#include "simile/tagger.hpp"
#include "simile/types.hpp"

namespace simile {

struct SimileCandidate {
  std::string doc_id;
  std::size_t sentence_index = 0;
  std::string marker_id;
  Span marker_span;
  std::optional<Span> np_span;
  std::optional<std::string> head_lemma;
  std::optional<std::string> head_surface;
  bool predicative = false;

  friend bool operator==(const SimileCandidate&, const SimileCandidate&) = default;
};

struct MarkerMatch {
  const Matcher* matcher = nullptr;
  Span span;

  const std::string& pattern_id() const { return matcher->pattern().id; }
};

// Every match of every matcher, sorted by (start, -length, pattern id).
std::vector<MarkerMatch> find_marker_matches(const Sentence& sentence,
                                             std::span<const Matcher> matchers);

// Keeps the longer of two overlapping matches, the smaller pattern id on
// ties. Output is overlap-free and keeps the input order.
std::vector<MarkerMatch> resolve_overlaps(std::span<const MarkerMatch> matches);

// Phrase markers need a NOUN_COMMON-headed chunk starting right after the
// match. Morphological markers are attributive (inside a chunk, before its
// common-noun head) or predicative (chunk-free, a copula at most three
// tokens before).
std::optional<SimileCandidate> candidate_from_match(const Sentence& sentence,
                                                    const MarkerMatch& match,
                                                    std::string_view doc_id);

struct ExtractOptions {
  bool include_excluded = false;
  std::size_t parallelism = 1;  // sentence-level worker threads
};

struct ExtractionResult {
  std::vector<SimileCandidate> candidates;
  std::size_t sentence_count = 0;
};

// Matchers whose language is `language`, minus excluded_by_default ones
// unless `include_excluded`.
std::vector<const Matcher*> active_matchers(std::span<const Matcher> matchers,
                                            Language language,
                                            bool include_excluded);

// Chunk, match, resolve and build candidates for already tagged sentences.
// Sentences get their `chunks` filled in.
ExtractionResult extract_sentences(std::string_view doc_id, Language language,
                                   std::vector<Sentence>& sentences,
                                   std::span<const Matcher> matchers,
                                   const ExtractOptions& options);

// Raw-text route: segment, tokenize, fallback-tag, then extract_sentences.
ExtractionResult extract_document(const Document& doc,
                                  const TaggerLexicon& tagger_lexicon,
                                  std::span<const Matcher> matchers,
                                  const ExtractOptions& options);

// Pre-tagged route. Throws InputError (prefixed with the doc id) when the
// stream is malformed.
ExtractionResult extract_tagged(std::string_view doc_id, Language language,
                                std::string_view tagged_tsv,
                                std::span<const Matcher> matchers,
                                const ExtractOptions& options);

// Empty when the candidate is sound for `sentence` (spans, chunk and marker
// agreement); otherwise a description of the violation.
std::optional<std::string> check_candidate(const SimileCandidate& candidate,
                                           const Sentence& sentence,
                                           const Matcher& matcher);

// JSON Lines: one object per candidate, spans as [start, end], absent
// fields as null.
std::string candidate_to_json_line(const SimileCandidate& candidate);
SimileCandidate candidate_from_json_line(std::string_view line);

inline constexpr std::string_view kCandidateCsvHeader =
    "doc_id,sentence_index,marker_id,marker_start,marker_end,np_start,np_end,"
    "head_lemma,head_surface,predicative";

void write_candidates_jsonl(std::ostream& out,
                            std::span<const SimileCandidate> candidates);
void write_candidates_csv(std::ostream& out,
                          std::span<const SimileCandidate> candidates,
                          bool with_header = true);

// Reads either format; CSV is recognised by its header line.
std::vector<SimileCandidate> parse_candidates(std::string_view text);

}  // namespace simile

#endif  // SIMILE_EXTRACTOR_HPP_
