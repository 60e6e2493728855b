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

#include "simile/tagger.hpp"

#include <sstream>

#include "simile/error.hpp"
#include "simile/io.hpp"
#include "simile/unicode.hpp"

namespace simile {

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() > suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool is_terminator_run(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    const char32_t c = unicode::next_code_point(s, pos);
    if (c != U'.' && c != U'!' && c != U'?' && c != U'…') return false;
  }
  return !s.empty();
}

bool is_number(std::string_view s) {
  bool digit = false;
  for (char c : s) {
    if (c >= '0' && c <= '9') {
      digit = true;
    } else if (c != '.' && c != ',') {
      return false;
    }
  }
  return digit;
}

std::string english_noun_lemma(const std::string& lower) {
  if (ends_with(lower, "ies") && lower.size() > 4) {
    return lower.substr(0, lower.size() - 3) + "y";
  }
  for (std::string_view suffix : {"sses", "ches", "shes", "xes"}) {
    if (ends_with(lower, suffix)) return lower.substr(0, lower.size() - 2);
  }
  if (ends_with(lower, "s") && lower.size() > 3 && !ends_with(lower, "ss") &&
      !ends_with(lower, "us") && !ends_with(lower, "is")) {
    return lower.substr(0, lower.size() - 1);
  }
  return lower;
}

std::string french_nominal_lemma(const std::string& lower) {
  if (ends_with(lower, "aux") && lower.size() > 4) {
    return lower.substr(0, lower.size() - 3) + "al";
  }
  if ((ends_with(lower, "s") || ends_with(lower, "x")) && lower.size() > 3) {
    return lower.substr(0, lower.size() - 1);
  }
  return lower;
}

bool after_determiner(const std::vector<Token>& tokens, Tagset tagset) {
  return !tokens.empty() && normalize_tag(tokens.back().raw_tag, tagset) == Tag::kDet;
}

bool is_bare_verb(std::string_view raw_tag, bool english) {
  if (english) return raw_tag == "VV" || raw_tag == "VVP" || raw_tag == "VVZ";
  return raw_tag == "VER:infi" || raw_tag == "VER:pres";
}

// "il le voit": an article form after a subject pronoun is an object clitic.
bool is_clitic_object(const std::vector<Token>& tokens, Tagset tagset) {
  if (tagset != Tagset::kFrench || tokens.size() < 2) return false;
  const std::string& det = tokens.back().lemma;
  return det == "le" && tokens[tokens.size() - 2].raw_tag == "PRO:PER";
}

// For an unknown hyphenated word, the lexicon entry of its last segment when
// that segment is an adjective or common noun ("blood-red"). Words ending in
// "like" are left to the suffix rules.
const TaggerLexicon::Entry* compound_head(const std::string& lower,
                                          const TaggerLexicon& lexicon, Tagset tagset) {
  const auto dash = lower.rfind('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 >= lower.size() ||
      ends_with(lower, "like")) {
    return nullptr;
  }
  const auto* entry = lexicon.find(lower.substr(dash + 1));
  if (entry == nullptr) return nullptr;
  const Tag tag = normalize_tag(entry->raw_tag, tagset);
  return tag == Tag::kAdj || tag == Tag::kNounCommon ? entry : nullptr;
}

struct Guess {
  std::string raw_tag;
  std::string lemma;
};

Guess guess_english(const std::string& lower) {
  if (ends_with(lower, "like")) return {"JJ", lower};
  if (ends_with(lower, "ly")) return {"RB", lower};
  if (ends_with(lower, "ing") && lower.size() > 5) return {"VVG", lower};
  if (ends_with(lower, "ed")) return {"VVD", lower};
  for (std::string_view suffix : {"ous", "ful", "ive", "able", "ible", "less", "ical"}) {
    if (ends_with(lower, suffix) && lower.size() > suffix.size() + 2) return {"JJ", lower};
  }
  return {"", ""};
}

Guess guess_french(const std::string& lower, bool after_determiner) {
  if (ends_with(lower, "ment")) return {"ADV", lower};
  if (!after_determiner &&
      (ends_with(lower, "er") || ends_with(lower, "ir") || ends_with(lower, "re"))) {
    return {"VER:infi", lower};
  }
  if (ends_with(lower, "eux") || ends_with(lower, "ique") ||
      ends_with(lower, "ible")) {
    return {"ADJ", french_nominal_lemma(lower)};
  }
  return {"", ""};
}

}  // namespace

TaggerLexicon TaggerLexicon::parse(std::string_view text, Language language) {
  TaggerLexicon lexicon(language);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = t1 == std::string::npos ? t1 : line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos ||
        line.find('\t', t2 + 1) != std::string::npos || t1 == 0 ||
        t2 == t1 + 1 || t2 + 1 == line.size()) {
      throw InputError("line " + std::to_string(line_number) +
                       ": expected surface<TAB>tag<TAB>lemma");
    }
    lexicon.add(unicode::to_nfc(line.substr(0, t1)),
                line.substr(t1 + 1, t2 - t1 - 1),
                unicode::to_lower(unicode::to_nfc(line.substr(t2 + 1))));
  }
  return lexicon;
}

TaggerLexicon TaggerLexicon::load(const std::filesystem::path& path,
                                  Language language) {
  try {
    return parse(read_file(path), language);
  } catch (const InputError& e) {
    const std::string message = e.what();
    if (message.rfind(path.string(), 0) == 0) throw;
    throw InputError(path.string() + ": " + message);
  }
}

void TaggerLexicon::add(std::string surface, std::string raw_tag,
                        std::string lemma) {
  entries_.try_emplace(std::move(surface), Entry{std::move(raw_tag), std::move(lemma)});
}

const TaggerLexicon::Entry* TaggerLexicon::find(std::string_view surface) const {
  const auto it = entries_.find(std::string(surface));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<Token> tag_fallback(std::span<const RawToken> raw,
                                const TaggerLexicon& lexicon) {
  const bool english = lexicon.language() == Language::kEnglish;
  const Tagset tagset = tagset_for(lexicon.language());
  std::vector<Token> tokens;
  tokens.reserve(raw.size());

  // A capitalized word inside the sentence only takes a lowercase entry from
  // a closed class ("Brown" is a name, "The" is still a determiner).
  auto lookup = [&](const std::string& surface, const std::string& lower,
                    bool mid_sentence_capital) -> const TaggerLexicon::Entry* {
    if (const auto* entry = lexicon.find(surface)) return entry;
    const auto* entry = lexicon.find(lower);
    if (entry == nullptr || !mid_sentence_capital) return entry;
    const Tag tag = normalize_tag(entry->raw_tag, tagset);
    const bool open = tag == Tag::kNounCommon || tag == Tag::kVerb ||
                      tag == Tag::kAdj || tag == Tag::kAdv;
    return open ? nullptr : entry;
  };

  std::size_t first_word = raw.size();
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (unicode::is_alnum(unicode::code_point_at(raw[i].surface, 0))) {
      first_word = i;
      break;
    }
  }

  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::string& surface = raw[i].surface;
    Token token;
    token.index = i;
    token.surface = surface;
    token.char_start = raw[i].begin;
    token.char_end = raw[i].end;
    const std::string lower = unicode::to_lower(surface);

    if (!unicode::is_alnum(unicode::code_point_at(surface, 0))) {
      if (i + 1 == raw.size() && is_terminator_run(surface)) {
        token.raw_tag = "SENT";
      } else if (const auto* entry = lexicon.find(surface)) {
        token.raw_tag = entry->raw_tag;
      } else {
        token.raw_tag = english ? ":" : "PUN";
      }
      token.lemma = surface;
    } else if (const auto* entry =
                   lookup(surface, lower, i != first_word && unicode::starts_upper(surface))) {
      token.raw_tag = entry->raw_tag;
      token.lemma = entry->lemma;
      // Noun/verb homographs: a bare verb form right after a determiner is
      // read as a noun ("her laugh", "le rire").
      if (after_determiner(tokens, tagset) && is_bare_verb(entry->raw_tag, english) &&
          !is_clitic_object(tokens, tagset)) {
        token.raw_tag = english ? "NN" : "NOM";
        token.lemma = english ? english_noun_lemma(lower) : lower;
      }
    } else if (is_number(surface)) {
      token.raw_tag = english ? "CD" : "NUM";
      token.lemma = lower;
    } else if (i != first_word && unicode::starts_upper(surface)) {
      token.raw_tag = english ? "NP" : "NAM";
      token.lemma = lower;
    } else if (const auto* head = compound_head(lower, lexicon, tagset)) {
      token.raw_tag = head->raw_tag;
      token.lemma = lower;
    } else {
      const bool after_det = after_determiner(tokens, tagset);
      Guess guess = english ? guess_english(lower) : guess_french(lower, after_det);
      if (guess.raw_tag.empty()) {
        guess.raw_tag = english ? "NN" : "NOM";
        guess.lemma = english ? english_noun_lemma(lower) : french_nominal_lemma(lower);
      }
      token.raw_tag = std::move(guess.raw_tag);
      token.lemma = std::move(guess.lemma);
    }
    token.pos = normalize_tag(token.raw_tag, tagset);
    // Only the final token may close the sentence.
    if (token.pos == Tag::kSentEnd && i + 1 != raw.size()) {
      token.raw_tag = english ? ":" : "PUN";
      token.pos = Tag::kPunct;
    }
    if (token.lemma.empty()) token.lemma = lower;
    tokens.push_back(std::move(token));
  }
  return tokens;
}

Sentence analyze_sentence(const Document& doc, const TextSpan& span,
                          std::size_t index, const TaggerLexicon& lexicon) {
  const std::string_view text(doc.text);
  std::vector<RawToken> raw =
      tokenize(text.substr(span.begin, span.end - span.begin), doc.language);
  for (RawToken& t : raw) {
    t.begin += span.begin;
    t.end += span.begin;
  }
  Sentence sentence;
  sentence.index = index;
  sentence.tokens = tag_fallback(raw, lexicon);
  return sentence;
}

std::vector<Sentence> analyze_text(const Document& doc,
                                   const TaggerLexicon& lexicon) {
  const std::vector<TextSpan> spans = segment_sentences(doc.text, doc.language);
  std::vector<Sentence> sentences;
  sentences.reserve(spans.size());
  for (const TextSpan& span : spans) {
    Sentence s = analyze_sentence(doc, span, sentences.size(), lexicon);
    if (!s.tokens.empty()) sentences.push_back(std::move(s));
  }
  return sentences;
}

}  // namespace simile
