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

#include "simile/matcher.hpp"

#include <algorithm>

#include "simile/error.hpp"

namespace simile {

namespace {

bool is_punctuation(Tag t) { return t == Tag::kPunct || t == Tag::kSentEnd; }

}  // namespace

bool Matcher::sequence_at(const Sentence& sentence, std::size_t start,
                          std::span<const ElementSpec> elements) const {
  const auto& tokens = sentence.tokens;
  if (start + elements.size() > tokens.size()) return false;
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (!elements[k].accepts(tokens[start + k])) return false;
  }
  return true;
}

std::vector<Span> Matcher::find_all(const Sentence& sentence) const {
  std::vector<Span> spans;
  const auto& tokens = sentence.tokens;
  const std::size_t n = tokens.size();
  const std::span<const ElementSpec> elements(pattern_.elements);

  switch (pattern_.kind) {
    case PatternKind::kFixedSeq:
      for (std::size_t i = 0; i + elements.size() <= n; ++i) {
        if (sequence_at(sentence, i, elements)) spans.push_back({i, i + elements.size()});
      }
      break;

    case PatternKind::kGappedSeq: {
      const auto tail = elements.subspan(1);
      const std::size_t max_gap = pattern_.max_gap.value_or(kDefaultMaxGap);
      for (std::size_t i = 0; i < n; ++i) {
        if (!elements[0].accepts(tokens[i])) continue;
        for (std::size_t gap = 0; gap <= max_gap; ++gap) {
          const std::size_t t = i + 1 + gap;
          if (t + tail.size() > n) break;
          if (gap > 0 && is_punctuation(tokens[t - 1].pos)) break;
          if (sequence_at(sentence, t, tail)) {
            spans.push_back({i, t + tail.size()});
            break;
          }
        }
      }
      break;
    }

    case PatternKind::kVerbComparative:
      for (std::size_t i = 0; i < n; ++i) {
        if (tokens[i].pos != Tag::kVerb) continue;
        for (std::size_t gap = 0; gap <= kComparativeWindow; ++gap) {
          const std::size_t c = i + 1 + gap;
          if (c + 2 > n) break;
          if (gap > 0 && is_punctuation(tokens[c - 1].pos)) break;
          if (sequence_at(sentence, c, elements)) {
            spans.push_back({i, c + 2});
            break;
          }
        }
      }
      break;

    case PatternKind::kSuffixLike:
    case PatternKind::kColourCompound:
      for (std::size_t i = 0; i < n; ++i) {
        const Token& token = tokens[i];
        if (token.pos != Tag::kAdj && token.pos != Tag::kNounCommon) continue;
        const bool hit = pattern_.kind == PatternKind::kSuffixLike
                             ? detect_like_suffix(token)
                             : detect_colour_compound(token, *colours_);
        if (hit) spans.push_back({i, i + 1});
      }
      break;
  }
  return spans;
}

bool Matcher::matches(const Sentence& sentence, const Span& span) const {
  const std::vector<Span> all = find_all(sentence);
  return std::find(all.begin(), all.end(), span) != all.end();
}

Matcher compile_pattern(const MarkerPattern& pattern, const ColourLexicon& colours) {
  try {
    validate_pattern(pattern);
  } catch (const InputError& e) {
    throw InputError(std::string("cannot compile: ") + e.what());
  }
  return Matcher(pattern, std::make_shared<const ColourLexicon>(colours));
}

std::vector<Matcher> compile_lexicon(std::span<const MarkerPattern> patterns,
                                     const ColourLexicon& colours) {
  std::vector<Matcher> matchers;
  matchers.reserve(patterns.size());
  for (const MarkerPattern& p : patterns) matchers.push_back(compile_pattern(p, colours));
  return matchers;
}

}  // namespace simile
