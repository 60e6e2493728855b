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

#ifndef SIMILE_TEXT_HPP_
#define SIMILE_TEXT_HPP_

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simile/language.hpp"
#include "simile/types.hpp"

namespace simile {

// Byte range of one sentence in the source text, whitespace-trimmed.
struct TextSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const TextSpan&, const TextSpan&) = default;
};

// Splits raw text at `. ! ? …` followed by whitespace and an uppercase
// letter or opening quote, and at blank lines. Abbreviations and single
// capital initials do not end a sentence.
std::vector<TextSpan> segment_sentences(std::string_view text,
                                        Language language);

// True if `word` (including its final period, any case) is an abbreviation
// for `language`.
bool is_abbreviation(std::string_view word, Language language);

struct RawToken {
  std::string surface;
  std::size_t begin = 0;  // byte offsets into the tokenized string
  std::size_t end = 0;
};

// Whitespace split with punctuation peeled off. Hyphenated words stay whole;
// French elided articles and English clitics are split.
std::vector<RawToken> tokenize(std::string_view sentence_text,
                               Language language);

enum class Tagset { kEnglishPenn, kFrench };

inline Tagset tagset_for(Language language) {
  return language == Language::kEnglish ? Tagset::kEnglishPenn
                                        : Tagset::kFrench;
}

// Total: unknown tags map to Tag::kOther.
Tag normalize_tag(std::string_view raw_tag, Tagset tagset);

// Reads `surface<TAB>tag<TAB>lemma` lines. A `SENT` tag closes a sentence
// (the token is kept); a blank line closes one too. Throws InputError with
// the line number on malformed lines.
std::vector<Sentence> read_tagged(std::istream& in, Tagset tagset);
std::vector<Sentence> read_tagged(std::string_view text, Tagset tagset);

// Inverse of read_tagged on canonical input: a blank line follows every
// sentence that does not end with a SENT token.
void write_tagged(std::ostream& out, std::span<const Sentence> sentences);

}  // namespace simile

#endif  // SIMILE_TEXT_HPP_
