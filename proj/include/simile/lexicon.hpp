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

#ifndef SIMILE_LEXICON_HPP_
#define SIMILE_LEXICON_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "simile/language.hpp"
#include "simile/types.hpp"

namespace simile {

enum class MarkerCategory { kVerb, kAdj };

enum class PatternKind {
  kFixedSeq,         // consecutive lemma elements
  kGappedSeq,        // anchor, up to max_gap free tokens, then tail elements
  kVerbComparative,  // VERB, at most one token, comparative, "than"/"que"
  kSuffixLike,       // "-like" adjectives
  kColourCompound,   // noun + colour adjectives ("snow-white")
};

inline constexpr std::size_t kDefaultMaxGap = 4;

// Tokens allowed between the verb and the comparative word.
inline constexpr std::size_t kComparativeWindow = 1;

struct ElementSpec {
  std::vector<std::string> lemmas;  // sorted, unique, lowercase NFC
  std::vector<Tag> pos;             // empty: any tag

  bool accepts(const Token& token) const;
  friend bool operator==(const ElementSpec&, const ElementSpec&) = default;
};

struct MarkerPattern {
  std::string id;
  Language language = Language::kEnglish;
  MarkerCategory category = MarkerCategory::kVerb;
  PatternKind kind = PatternKind::kFixedSeq;
  // kGappedSeq: elements[0] is the anchor and the rest is the tail.
  // kVerbComparative: {comparative word, "than"}.
  std::vector<ElementSpec> elements;
  std::optional<std::size_t> max_gap;  // kGappedSeq only
  bool excluded_by_default = false;

  friend bool operator==(const MarkerPattern&, const MarkerPattern&) = default;
};

std::string_view category_name(MarkerCategory category);  // "verb" | "adj"
std::string_view kind_name(PatternKind kind);             // "fixed_seq" | ...

// Throws InputError naming the pattern id when a structural invariant fails.
void validate_pattern(const MarkerPattern& pattern);

// The adjective and verb simile markers: 16 English, 19 French.
std::vector<MarkerPattern> builtin_lexicon(Language language);

// Custom lexicon JSON (top-level array). Errors carry the JSON field path,
// e.g. `[2].elements[0].lemmas`.
std::vector<MarkerPattern> parse_lexicon(std::string_view json_text);
std::vector<MarkerPattern> load_lexicon(const std::filesystem::path& path);

// Serializes to the same JSON schema accepted by parse_lexicon.
std::string lexicon_to_json(const std::vector<MarkerPattern>& patterns);

class ColourLexicon {
 public:
  ColourLexicon() = default;
  explicit ColourLexicon(std::set<std::string> colours)
      : colours_(std::move(colours)) {}

  static const ColourLexicon& builtin();
  // One colour per line; blank lines and `#` comments are ignored.
  static ColourLexicon parse(std::string_view text);
  static ColourLexicon load(const std::filesystem::path& path);

  bool contains(std::string_view lowercase_word) const;
  const std::set<std::string>& colours() const { return colours_; }

 private:
  std::set<std::string> colours_;
};

// "god-like", "ghostlike"; not "like", "unlike", "alike", ...
bool detect_like_suffix(const Token& token);

// "snow-white", "blood-red"; not "red-hot" or "blue-green".
bool detect_colour_compound(const Token& token,
                            const ColourLexicon& colours = ColourLexicon::builtin());

}  // namespace simile

#endif  // SIMILE_LEXICON_HPP_
