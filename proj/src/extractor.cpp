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

#include "simile/extractor.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "simile/chunker.hpp"
#include "simile/csv.hpp"
#include "simile/error.hpp"
#include "simile/text.hpp"

namespace simile {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kCopulaWindow = 3;

bool is_morphological(PatternKind kind) {
  return kind == PatternKind::kSuffixLike || kind == PatternKind::kColourCompound;
}

bool is_copula(const Token& token, Language language) {
  static constexpr std::string_view kEnglish[] = {"be", "seem", "look"};
  static constexpr std::string_view kFrench[] = {"être", "sembler", "paraître"};
  const auto& list = language == Language::kEnglish ? kEnglish : kFrench;
  return std::find(std::begin(list), std::end(list), token.lemma) != std::end(list);
}

bool copula_before(const Sentence& sentence, std::size_t index, Language language) {
  for (std::size_t d = 1; d <= kCopulaWindow && d <= index; ++d) {
    if (is_copula(sentence.tokens[index - d], language)) return true;
  }
  return false;
}

bool match_order(const MarkerMatch& a, const MarkerMatch& b) {
  if (a.span.start != b.span.start) return a.span.start < b.span.start;
  if (a.span.length() != b.span.length()) return a.span.length() > b.span.length();
  return a.pattern_id() < b.pattern_id();
}

std::vector<MarkerMatch> find_matches(const Sentence& sentence,
                                      std::span<const Matcher* const> matchers) {
  std::vector<MarkerMatch> matches;
  for (const Matcher* m : matchers) {
    for (const Span& span : m->find_all(sentence)) matches.push_back({m, span});
  }
  std::sort(matches.begin(), matches.end(), match_order);
  return matches;
}

std::vector<SimileCandidate> process_sentence(Sentence& sentence,
                                              std::string_view doc_id,
                                              Language language,
                                              std::span<const Matcher* const> matchers) {
  sentence.chunks = chunk_nps(sentence, language);
  std::vector<SimileCandidate> out;
  const auto matches = resolve_overlaps(find_matches(sentence, matchers));
  for (const MarkerMatch& match : matches) {
    if (auto c = candidate_from_match(sentence, match, doc_id)) out.push_back(std::move(*c));
  }
  return out;
}

// Runs `work(begin, end, out)` over `count` items split into contiguous
// blocks, then concatenates the per-block outputs in block order.
template <typename Work>
std::vector<SimileCandidate> run_blocks(std::size_t count, std::size_t parallelism,
                                        Work work) {
  const std::size_t workers = std::max<std::size_t>(1, std::min(parallelism, count));
  std::vector<std::vector<SimileCandidate>> outputs(workers);
  if (workers == 1) {
    work(0, count, outputs[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = count * w / workers;
      const std::size_t end = count * (w + 1) / workers;
      threads.emplace_back([&, w, begin, end] {
        try {
          work(begin, end, outputs[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<SimileCandidate> all;
  for (auto& block : outputs) {
    all.insert(all.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  }
  return all;
}

Json span_json(const std::optional<Span>& span) {
  if (!span) return nullptr;
  return Json::array({span->start, span->end});
}

Json optional_string(const std::optional<std::string>& s) {
  if (!s) return nullptr;
  return *s;
}

Span parse_span(const Json& j, const char* field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() ||
      !j[1].is_number_unsigned()) {
    throw InputError(std::string(field) + ": expected [start, end]");
  }
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

std::size_t parse_index(const std::string& s, const char* field, std::size_t line) {
  std::size_t value = 0;
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InputError("line " + std::to_string(line) + ": " + field +
                     " is not a non-negative integer");
  }
  value = std::stoull(s);
  return value;
}

}  // namespace

std::vector<MarkerMatch> find_marker_matches(const Sentence& sentence,
                                             std::span<const Matcher> matchers) {
  std::vector<const Matcher*> pointers;
  pointers.reserve(matchers.size());
  for (const Matcher& m : matchers) pointers.push_back(&m);
  return find_matches(sentence, pointers);
}

std::vector<MarkerMatch> resolve_overlaps(std::span<const MarkerMatch> matches) {
  std::vector<std::size_t> order(matches.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = matches[a];
    const auto& y = matches[b];
    if (x.span.length() != y.span.length()) return x.span.length() > y.span.length();
    if (x.pattern_id() != y.pattern_id()) return x.pattern_id() < y.pattern_id();
    return x.span.start < y.span.start;
  });
  std::vector<bool> kept(matches.size(), false);
  std::vector<Span> accepted;
  for (std::size_t i : order) {
    const Span& s = matches[i].span;
    const bool clash = std::any_of(accepted.begin(), accepted.end(),
                                   [&](const Span& a) { return a.overlaps(s); });
    if (clash) continue;
    accepted.push_back(s);
    kept[i] = true;
  }
  std::vector<MarkerMatch> out;
  for (std::size_t i = 0; i < matches.size(); ++i) {
    if (kept[i]) out.push_back(matches[i]);
  }
  return out;
}

std::optional<SimileCandidate> candidate_from_match(const Sentence& sentence,
                                                    const MarkerMatch& match,
                                                    std::string_view doc_id) {
  const MarkerPattern& pattern = match.matcher->pattern();
  SimileCandidate c;
  c.doc_id = std::string(doc_id);
  c.sentence_index = sentence.index;
  c.marker_id = pattern.id;
  c.marker_span = match.span;

  auto attach = [&](const Chunk& chunk) {
    const Token& head = np_head(chunk, sentence);
    c.np_span = chunk.span;
    c.head_lemma = head.lemma;
    c.head_surface = head.surface;
  };

  if (!is_morphological(pattern.kind)) {
    const Chunk* chunk = chunk_starting_at(sentence, match.span.end);
    if (chunk == nullptr || np_head(*chunk, sentence).pos != Tag::kNounCommon) {
      return std::nullopt;
    }
    attach(*chunk);
    return c;
  }

  const std::size_t marker = match.span.start;
  if (const Chunk* chunk = chunk_containing(sentence, marker)) {
    if (chunk->head_index > marker &&
        np_head(*chunk, sentence).pos == Tag::kNounCommon) {
      attach(*chunk);
      return c;
    }
    return std::nullopt;
  }
  if (copula_before(sentence, marker, pattern.language)) {
    c.predicative = true;
    return c;
  }
  return std::nullopt;
}

std::vector<const Matcher*> active_matchers(std::span<const Matcher> matchers,
                                            Language language,
                                            bool include_excluded) {
  std::vector<const Matcher*> active;
  for (const Matcher& m : matchers) {
    if (m.pattern().language != language) continue;
    if (m.pattern().excluded_by_default && !include_excluded) continue;
    active.push_back(&m);
  }
  return active;
}

ExtractionResult extract_sentences(std::string_view doc_id, Language language,
                                   std::vector<Sentence>& sentences,
                                   std::span<const Matcher> matchers,
                                   const ExtractOptions& options) {
  const auto active = active_matchers(matchers, language, options.include_excluded);
  ExtractionResult result;
  result.sentence_count = sentences.size();
  result.candidates = run_blocks(
      sentences.size(), options.parallelism,
      [&](std::size_t begin, std::size_t end, std::vector<SimileCandidate>& out) {
        for (std::size_t i = begin; i < end; ++i) {
          auto found = process_sentence(sentences[i], doc_id, language, active);
          out.insert(out.end(), std::make_move_iterator(found.begin()),
                     std::make_move_iterator(found.end()));
        }
      });
  return result;
}

ExtractionResult extract_document(const Document& doc,
                                  const TaggerLexicon& tagger_lexicon,
                                  std::span<const Matcher> matchers,
                                  const ExtractOptions& options) {
  if (tagger_lexicon.language() != doc.language) {
    throw InputError(doc.id + ": tagger lexicon language does not match document");
  }
  const auto active = active_matchers(matchers, doc.language, options.include_excluded);
  const std::vector<TextSpan> spans = segment_sentences(doc.text, doc.language);
  ExtractionResult result;
  result.sentence_count = spans.size();
  result.candidates = run_blocks(
      spans.size(), options.parallelism,
      [&](std::size_t begin, std::size_t end, std::vector<SimileCandidate>& out) {
        for (std::size_t i = begin; i < end; ++i) {
          Sentence sentence = analyze_sentence(doc, spans[i], i, tagger_lexicon);
          auto found = process_sentence(sentence, doc.id, doc.language, active);
          out.insert(out.end(), std::make_move_iterator(found.begin()),
                     std::make_move_iterator(found.end()));
        }
      });
  return result;
}

ExtractionResult extract_tagged(std::string_view doc_id, Language language,
                                std::string_view tagged_tsv,
                                std::span<const Matcher> matchers,
                                const ExtractOptions& options) {
  std::vector<Sentence> sentences;
  try {
    sentences = read_tagged(tagged_tsv, tagset_for(language));
  } catch (const InputError& e) {
    throw InputError(std::string(doc_id) + ": " + e.what());
  }
  return extract_sentences(doc_id, language, sentences, matchers, options);
}

std::optional<std::string> check_candidate(const SimileCandidate& c,
                                           const Sentence& sentence,
                                           const Matcher& matcher) {
  const MarkerPattern& pattern = matcher.pattern();
  if (c.marker_id != pattern.id) return "marker id does not name the matcher";
  if (c.sentence_index != sentence.index) return "sentence index mismatch";
  if (!matcher.matches(sentence, c.marker_span)) return "marker span does not re-match";
  if (c.np_span.has_value() == c.predicative) return "np_span must be absent iff predicative";

  if (c.predicative) {
    if (!is_morphological(pattern.kind)) return "predicative phrase marker";
    if (c.head_lemma || c.head_surface) return "predicative candidate with a head";
    if (chunk_containing(sentence, c.marker_span.start)) return "predicative marker inside a chunk";
    if (!copula_before(sentence, c.marker_span.start, pattern.language)) {
      return "predicative marker without a copula";
    }
    return std::nullopt;
  }

  const auto it = std::find_if(sentence.chunks.begin(), sentence.chunks.end(),
                               [&](const Chunk& ch) { return ch.span == *c.np_span; });
  if (it == sentence.chunks.end()) return "np_span is not a chunk";
  const Token& head = np_head(*it, sentence);
  if (head.pos != Tag::kNounCommon) return "head is not a common noun";
  if (c.head_lemma != head.lemma || c.head_surface != head.surface) {
    return "head fields disagree with the chunk head";
  }
  if (is_morphological(pattern.kind)) {
    if (!it->span.contains(c.marker_span.start) || it->head_index <= c.marker_span.start) {
      return "attributive marker is not before the head inside its chunk";
    }
  } else if (c.np_span->start != c.marker_span.end) {
    return "np does not immediately follow the marker";
  }
  return std::nullopt;
}

std::string candidate_to_json_line(const SimileCandidate& c) {
  Json j;
  j["doc_id"] = c.doc_id;
  j["sentence_index"] = c.sentence_index;
  j["marker_id"] = c.marker_id;
  j["marker_span"] = span_json(c.marker_span);
  j["np_span"] = span_json(c.np_span);
  j["head_lemma"] = optional_string(c.head_lemma);
  j["head_surface"] = optional_string(c.head_surface);
  j["predicative"] = c.predicative;
  return j.dump();
}

SimileCandidate candidate_from_json_line(std::string_view line) {
  Json j;
  try {
    j = Json::parse(line);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("expected JSON object");
  auto field = [&](const char* key) -> const Json& {
    const auto it = j.find(key);
    if (it == j.end()) throw InputError(std::string(key) + ": missing field");
    return *it;
  };
  auto opt_string = [&](const char* key) -> std::optional<std::string> {
    const Json& v = field(key);
    if (v.is_null()) return std::nullopt;
    if (!v.is_string()) throw InputError(std::string(key) + ": expected string");
    return v.get<std::string>();
  };
  SimileCandidate c;
  if (!field("doc_id").is_string()) throw InputError("doc_id: expected string");
  c.doc_id = field("doc_id").get<std::string>();
  if (!field("sentence_index").is_number_unsigned()) {
    throw InputError("sentence_index: expected non-negative integer");
  }
  c.sentence_index = field("sentence_index").get<std::size_t>();
  if (!field("marker_id").is_string()) throw InputError("marker_id: expected string");
  c.marker_id = field("marker_id").get<std::string>();
  c.marker_span = parse_span(field("marker_span"), "marker_span");
  if (!field("np_span").is_null()) c.np_span = parse_span(field("np_span"), "np_span");
  c.head_lemma = opt_string("head_lemma");
  c.head_surface = opt_string("head_surface");
  if (!field("predicative").is_boolean()) throw InputError("predicative: expected bool");
  c.predicative = field("predicative").get<bool>();
  return c;
}

void write_candidates_jsonl(std::ostream& out,
                            std::span<const SimileCandidate> candidates) {
  for (const SimileCandidate& c : candidates) out << candidate_to_json_line(c) << '\n';
}

void write_candidates_csv(std::ostream& out,
                          std::span<const SimileCandidate> candidates,
                          bool with_header) {
  if (with_header) out << kCandidateCsvHeader << '\n';
  for (const SimileCandidate& c : candidates) {
    const std::vector<std::string> row = {
        c.doc_id,
        std::to_string(c.sentence_index),
        c.marker_id,
        std::to_string(c.marker_span.start),
        std::to_string(c.marker_span.end),
        c.np_span ? std::to_string(c.np_span->start) : "",
        c.np_span ? std::to_string(c.np_span->end) : "",
        c.head_lemma.value_or(""),
        c.head_surface.value_or(""),
        c.predicative ? "true" : "false"};
    write_csv_row(out, row);
  }
}

std::vector<SimileCandidate> parse_candidates(std::string_view text) {
  std::vector<SimileCandidate> out;
  const auto first_nl = text.find('\n');
  std::string_view first_line = text.substr(0, first_nl);
  if (!first_line.empty() && first_line.back() == '\r') first_line.remove_suffix(1);

  if (first_line == kCandidateCsvHeader) {
    const auto records = parse_csv(text);
    for (std::size_t r = 1; r < records.size(); ++r) {
      const CsvRecord& rec = records[r];
      const auto& f = rec.fields;
      if (f.size() != 10) {
        throw InputError("line " + std::to_string(rec.line) + ": expected 10 fields");
      }
      SimileCandidate c;
      c.doc_id = f[0];
      c.sentence_index = parse_index(f[1], "sentence_index", rec.line);
      c.marker_id = f[2];
      c.marker_span = {parse_index(f[3], "marker_start", rec.line),
                       parse_index(f[4], "marker_end", rec.line)};
      if (!f[5].empty() || !f[6].empty()) {
        c.np_span = Span{parse_index(f[5], "np_start", rec.line),
                         parse_index(f[6], "np_end", rec.line)};
        c.head_lemma = f[7];
        c.head_surface = f[8];
      }
      if (f[9] != "true" && f[9] != "false") {
        throw InputError("line " + std::to_string(rec.line) +
                         ": predicative must be true or false");
      }
      c.predicative = f[9] == "true";
      out.push_back(std::move(c));
    }
    return out;
  }

  std::size_t pos = 0;
  std::size_t line_number = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    try {
      out.push_back(candidate_from_json_line(line));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_number) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace simile
