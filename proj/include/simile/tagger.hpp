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

#ifndef SIMILE_TAGGER_HPP_
#define SIMILE_TAGGER_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "simile/corpus.hpp"
#include "simile/language.hpp"
#include "simile/text.hpp"
#include "simile/types.hpp"

namespace simile {

// Full-form lexicon: surface -> (raw tag, lemma). The first entry listed for
// a surface wins. Read-only after construction.
class TaggerLexicon {
 public:
  struct Entry {
    std::string raw_tag;
    std::string lemma;
  };

  TaggerLexicon() = default;
  explicit TaggerLexicon(Language language) : language_(language) {}

  // Lines are `surface<TAB>tag<TAB>lemma`; `#` starts a comment line.
  static TaggerLexicon parse(std::string_view text, Language language);
  static TaggerLexicon load(const std::filesystem::path& path, Language language);

  void add(std::string surface, std::string raw_tag, std::string lemma);
  const Entry* find(std::string_view surface) const;

  Language language() const { return language_; }
  std::size_t size() const { return entries_.size(); }

 private:
  Language language_ = Language::kEnglish;
  std::unordered_map<std::string, Entry> entries_;
};

// Lexicon lookup, then NOUN_PROPER for capitalised words that do not open
// the sentence, then suffix rules, then NOUN_COMMON.
// Sentence-final terminators become SENT tokens.
std::vector<Token> tag_fallback(std::span<const RawToken> tokens,
                                const TaggerLexicon& lexicon);

// tokenize + tag_fallback over one segmented span of `doc.text`. Token
// offsets are relative to `doc.text`.
Sentence analyze_sentence(const Document& doc, const TextSpan& span,
                          std::size_t index, const TaggerLexicon& lexicon);

// segment_sentences + analyze_sentence over a whole document.
std::vector<Sentence> analyze_text(const Document& doc,
                                   const TaggerLexicon& lexicon);

}  // namespace simile

#endif  // SIMILE_TAGGER_HPP_
