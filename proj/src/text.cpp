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

#include "simile/text.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "simile/error.hpp"
#include "simile/unicode.hpp"

namespace simile {

namespace {

constexpr std::array<std::string_view, 13> kTagNames = {
    "NOUN_COMMON", "NOUN_PROPER", "VERB", "ADJ",   "ADV",
    "DET",         "ADP",         "PRON", "NUM",   "CONJ",
    "PUNCT",       "SENT_END",    "OTHER"};

constexpr std::array<std::string_view, 16> kEnglishAbbreviations = {
    "mr.",   "mrs.", "dr.",  "st.",  "etc.", "vs.",  "e.g.", "i.e.",
    "ms.",   "messrs.", "capt.", "col.", "gen.", "rev.", "prof.", "jr."};

constexpr std::array<std::string_view, 10> kFrenchAbbreviations = {
    "m.", "mm.", "mme.", "mlle.", "st.", "etc.", "mmes.", "mlles.", "mgr.",
    "ste."};

bool is_terminator(char32_t c) {
  return c == U'.' || c == U'!' || c == U'?' || c == U'…';
}

bool is_closer(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U'”': case U'’': case U')': case U']':
    case U'»':
      return true;
    default:
      return false;
  }
}

bool is_opener(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U'“': case U'‘': case U'(': case U'[':
    case U'«': case U'\u2014': case U'\u2013':
      return true;
    default:
      return false;
  }
}

bool is_apostrophe(char32_t c) { return c == U'\'' || c == U'’'; }
bool is_hyphen(char32_t c) { return c == U'-' || c == U'‐'; }

bool is_word_char(char32_t c) {
  return unicode::is_alnum(c) || unicode::is_mark(c);
}

// The whitespace-delimited word that ends at `dot_end` (exclusive), with
// leading opening punctuation removed.
std::string_view word_before(std::string_view text, std::size_t span_start,
                             std::size_t dot_end) {
  std::size_t b = dot_end;
  while (b > span_start) {
    const std::size_t p = unicode::previous_boundary(text, b);
    if (unicode::is_space(unicode::code_point_at(text, p))) break;
    b = p;
  }
  while (b < dot_end) {
    std::size_t q = b;
    const char32_t c = unicode::next_code_point(text, q);
    if (!is_opener(c)) break;
    b = q;
  }
  return text.substr(b, dot_end - b);
}

bool is_initial(std::string_view word_with_dot) {
  if (word_with_dot.size() < 2 || word_with_dot.back() != '.') return false;
  const std::string_view stem = word_with_dot.substr(0, word_with_dot.size() - 1);
  return unicode::length(stem) == 1 && unicode::starts_upper(stem);
}

}  // namespace

std::string_view tag_name(Tag tag) {
  return kTagNames[static_cast<std::size_t>(tag)];
}

std::optional<Tag> parse_tag_name(std::string_view name) {
  for (std::size_t i = 0; i < kTagNames.size(); ++i) {
    if (kTagNames[i] == name) return static_cast<Tag>(i);
  }
  return std::nullopt;
}

bool is_abbreviation(std::string_view word, Language language) {
  const std::string lower = unicode::to_lower(word);
  if (language == Language::kEnglish) {
    return std::find(kEnglishAbbreviations.begin(), kEnglishAbbreviations.end(),
                     lower) != kEnglishAbbreviations.end();
  }
  return std::find(kFrenchAbbreviations.begin(), kFrenchAbbreviations.end(),
                   lower) != kFrenchAbbreviations.end();
}

std::vector<TextSpan> segment_sentences(std::string_view text,
                                        Language language) {
  std::vector<TextSpan> spans;
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::size_t start = kNone;
  std::size_t last_end = 0;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto close = [&](std::size_t end) {
    if (start != kNone && end > start) spans.push_back({start, end});
    start = kNone;
  };

  while (i < n) {
    std::size_t j = i;
    const char32_t c = unicode::next_code_point(text, j);

    if (unicode::is_space(c)) {
      int newlines = 0;
      std::size_t k = i;
      while (k < n) {
        std::size_t m = k;
        const char32_t w = unicode::next_code_point(text, m);
        if (!unicode::is_space(w)) break;
        if (w == U'\n') ++newlines;
        k = m;
      }
      if (newlines >= 2) close(last_end);
      i = k;
      continue;
    }

    if (start == kNone) start = i;

    if (!is_terminator(c)) {
      i = j;
      last_end = j;
      continue;
    }

    // Terminator run, then closing quotes and brackets.
    std::size_t term_end = j;
    while (term_end < n) {
      std::size_t m = term_end;
      if (!is_terminator(unicode::next_code_point(text, m))) break;
      term_end = m;
    }
    std::size_t p = term_end;
    while (p < n) {
      std::size_t m = p;
      if (!is_closer(unicode::next_code_point(text, m))) break;
      p = m;
    }
    last_end = p;
    i = p;
    if (p >= n) continue;

    std::size_t q = p;
    if (!unicode::is_space(unicode::next_code_point(text, q))) continue;
    q = p;
    while (q < n) {
      std::size_t m = q;
      if (!unicode::is_space(unicode::next_code_point(text, m))) break;
      q = m;
    }
    if (q >= n) continue;
    const char32_t next = unicode::code_point_at(text, q);
    if (!unicode::is_upper(next) && !is_opener(next)) continue;

    const bool single_period = term_end == j && c == U'.' && p == term_end;
    if (single_period) {
      const std::string_view word = word_before(text, start, term_end);
      if (is_abbreviation(word, language) || is_initial(word)) continue;
    }
    close(p);
  }
  close(last_end);
  return spans;
}

namespace {

std::string_view lower_ascii_view_prefix(std::string_view s, std::size_t n,
                                         std::string& buffer) {
  buffer.assign(s.substr(0, n));
  for (char& ch : buffer) {
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  }
  return buffer;
}

// Length of an abbreviation with internal periods ("e.g.") at the start of
// `rest`, or 0.
std::size_t dotted_abbreviation_length(std::string_view rest,
                                       Language language) {
  std::string buffer;
  auto try_list = [&](auto const& list) -> std::size_t {
    for (std::string_view abbr : list) {
      if (std::count(abbr.begin(), abbr.end(), '.') < 2) continue;
      if (rest.size() < abbr.size()) continue;
      if (lower_ascii_view_prefix(rest, abbr.size(), buffer) != abbr) continue;
      if (rest.size() > abbr.size()) {
        std::size_t m = abbr.size();
        if (is_word_char(unicode::next_code_point(rest, m))) continue;
      }
      return abbr.size();
    }
    return 0;
  };
  return language == Language::kEnglish ? try_list(kEnglishAbbreviations)
                                        : try_list(kFrenchAbbreviations);
}

bool is_french_elision_prefix(std::string_view lower) {
  static constexpr std::array<std::string_view, 13> kPrefixes = {
      "l", "d", "j", "m", "n", "s", "t", "c", "qu", "jusqu", "lorsqu",
      "puisqu", "quoiqu"};
  return std::find(kPrefixes.begin(), kPrefixes.end(), lower) != kPrefixes.end();
}

// Byte position of the n't / clitic split inside an English word, or npos.
std::size_t english_clitic_split(std::string_view word) {
  const std::string lower = unicode::to_lower(word);
  for (std::string_view suffix : {std::string_view("n't"), std::string_view("n’t")}) {
    if (lower.size() > suffix.size() &&
        std::string_view(lower).substr(lower.size() - suffix.size()) == suffix) {
      return word.size() - suffix.size();
    }
  }
  static constexpr std::array<std::string_view, 6> kClitics = {"s",  "re", "ve",
                                                               "ll", "d",  "m"};
  for (std::string_view apostrophe : {std::string_view("'"), std::string_view("’")}) {
    const auto pos = lower.rfind(apostrophe);
    if (pos == std::string::npos || pos == 0) continue;
    const std::string_view tail =
        std::string_view(lower).substr(pos + apostrophe.size());
    if (std::find(kClitics.begin(), kClitics.end(), tail) != kClitics.end()) {
      return pos;
    }
  }
  return std::string_view::npos;
}

void emit(std::vector<RawToken>& out, std::string_view text, std::size_t begin,
          std::size_t end) {
  if (end > begin) out.push_back({std::string(text.substr(begin, end - begin)), begin, end});
}

void emit_word(std::vector<RawToken>& out, std::string_view text,
               std::size_t begin, std::size_t end, Language language) {
  const std::string_view word = text.substr(begin, end - begin);
  if (language == Language::kEnglish) {
    const std::size_t split = english_clitic_split(word);
    if (split != std::string_view::npos) {
      emit(out, text, begin, begin + split);
      emit(out, text, begin + split, end);
    } else {
      emit(out, text, begin, end);
    }
    return;
  }
  std::size_t pos = begin;
  while (pos < end) {
    std::size_t k = pos;
    std::size_t apostrophe_end = std::string_view::npos;
    std::size_t apostrophe_begin = 0;
    while (k < end) {
      std::size_t m = k;
      if (is_apostrophe(unicode::next_code_point(text, m))) {
        apostrophe_begin = k;
        apostrophe_end = m;
        break;
      }
      k = m;
    }
    if (apostrophe_end == std::string_view::npos || apostrophe_end >= end) break;
    const std::string prefix = unicode::to_lower(
        text.substr(pos, apostrophe_begin - pos));
    if (!is_french_elision_prefix(prefix)) break;
    emit(out, text, pos, apostrophe_end);
    pos = apostrophe_end;
  }
  emit(out, text, pos, end);
}

}  // namespace

std::vector<RawToken> tokenize(std::string_view text, Language language) {
  std::vector<RawToken> out;
  const std::size_t n = text.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    const char32_t c = unicode::next_code_point(text, j);
    if (unicode::is_space(c)) {
      i = j;
      continue;
    }
    // Piece boundaries: [i, piece_end).
    std::size_t piece_end = j;
    while (piece_end < n) {
      std::size_t m = piece_end;
      if (unicode::is_space(unicode::next_code_point(text, m))) break;
      piece_end = m;
    }
    const std::string_view piece = text.substr(0, piece_end);

    std::size_t pos = i;
    while (pos < piece_end) {
      std::size_t next = pos;
      const char32_t ch = unicode::next_code_point(piece, next);

      if (unicode::is_alnum(ch)) {
        const std::size_t dotted =
            dotted_abbreviation_length(piece.substr(pos), language);
        if (dotted > 0) {
          emit(out, text, pos, pos + dotted);
          pos += dotted;
          continue;
        }
        bool numeric = unicode::is_alnum(ch) && ch >= U'0' && ch <= U'9';
        std::size_t k = next;
        for (;;) {
          while (k < piece_end) {
            std::size_t m = k;
            const char32_t w = unicode::next_code_point(piece, m);
            if (!is_word_char(w)) break;
            if (!(w >= U'0' && w <= U'9')) numeric = false;
            k = m;
          }
          if (k >= piece_end) break;
          std::size_t m = k;
          const char32_t sep = unicode::next_code_point(piece, m);
          if (m >= piece_end) break;
          const char32_t after = unicode::code_point_at(piece, m);
          if (is_hyphen(sep) && unicode::is_alnum(after)) {
            k = m;
            numeric = false;
            continue;
          }
          if (is_apostrophe(sep) && unicode::is_alpha(after)) {
            k = m;
            numeric = false;
            continue;
          }
          if (numeric && (sep == U'.' || sep == U',') && after >= U'0' &&
              after <= U'9') {
            k = m;
            continue;
          }
          break;
        }
        // A trailing period belongs to abbreviations and initials.
        if (k < piece_end && piece[k] == '.') {
          const std::string_view with_dot = piece.substr(pos, k + 1 - pos);
          if (is_abbreviation(with_dot, language) || is_initial(with_dot)) {
            // A period that ends the whole text is a sentence terminator.
            if (k + 1 < n) ++k;
          }
        }
        emit_word(out, text, pos, k, language);
        pos = k;
        continue;
      }

      // Punctuation and symbols: runs of periods or hyphens stay together.
      std::size_t k = next;
      if (ch == U'.' || ch == U'-') {
        while (k < piece_end && piece[k] == static_cast<char>(ch)) ++k;
      }
      while (k < piece_end) {
        std::size_t m = k;
        if (!unicode::is_mark(unicode::next_code_point(piece, m))) break;
        k = m;
      }
      emit(out, text, pos, k);
      pos = k;
    }
    i = piece_end;
  }
  return out;
}

Tag normalize_tag(std::string_view raw, Tagset tagset) {
  auto starts = [&](std::string_view prefix) {
    return raw.substr(0, prefix.size()) == prefix;
  };
  if (raw == "SENT") return Tag::kSentEnd;

  if (tagset == Tagset::kEnglishPenn) {
    if (raw == "NP" || raw == "NPS" || raw == "NNP" || raw == "NNPS") {
      return Tag::kNounProper;
    }
    if (raw == "NN" || raw == "NNS") return Tag::kNounCommon;
    if (starts("VB") || starts("VV") || starts("VH") || raw == "MD") {
      return Tag::kVerb;
    }
    if (starts("JJ")) return Tag::kAdj;
    if (starts("RB") || raw == "WRB") return Tag::kAdv;
    // Possessives act as determiners inside noun phrases.
    if (raw == "DT" || raw == "PDT" || raw == "WDT" || raw == "PP$" || raw == "PRP$") {
      return Tag::kDet;
    }
    if (raw == "IN" || raw == "TO" || starts("IN/")) return Tag::kAdp;
    if (raw == "PP" || raw == "PRP" || raw == "WP" || raw == "WP$") {
      return Tag::kPron;
    }
    if (raw == "CD") return Tag::kNum;
    if (raw == "CC") return Tag::kConj;
    if (raw == "," || raw == ":" || raw == "." || raw == "``" || raw == "''" ||
        raw == "(" || raw == ")" || raw == "\"" || raw == "-LRB-" ||
        raw == "-RRB-" || raw == "#" || raw == "$") {
      return Tag::kPunct;
    }
    return Tag::kOther;
  }

  if (raw == "NOM") return Tag::kNounCommon;
  if (raw == "NAM") return Tag::kNounProper;
  if (raw == "VER" || starts("VER:")) return Tag::kVerb;
  if (raw == "ADJ" || starts("ADJ:")) return Tag::kAdj;
  if (raw == "ADV") return Tag::kAdv;
  if (raw == "PRP" || starts("PRP:")) return Tag::kAdp;
  if (raw == "DET" || starts("DET:")) return Tag::kDet;
  if (raw == "PRO" || starts("PRO:")) return Tag::kPron;
  if (raw == "NUM") return Tag::kNum;
  if (raw == "KON") return Tag::kConj;
  if (raw == "PUN" || starts("PUN:")) return Tag::kPunct;
  return Tag::kOther;
}

std::vector<Sentence> read_tagged(std::istream& in, Tagset tagset) {
  std::vector<Sentence> sentences;
  Sentence current;
  auto flush = [&] {
    if (current.tokens.empty()) return;
    current.index = sentences.size();
    sentences.push_back(std::move(current));
    current = Sentence{};
  };

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_number == 1 && line.substr(0, 3) == "\xEF\xBB\xBF") line.erase(0, 3);
    if (unicode::is_whitespace_only(line)) {
      flush();
      continue;
    }
    std::array<std::string_view, 3> fields;
    std::size_t count = 0;
    std::string_view rest(line);
    bool too_many = false;
    for (;;) {
      const auto tab = rest.find('\t');
      if (count == fields.size()) {
        too_many = true;
        break;
      }
      fields[count++] = rest.substr(0, tab);
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (too_many || count != 3 || fields[0].empty() || fields[1].empty() ||
        fields[2].empty()) {
      throw InputError("line " + std::to_string(line_number) +
                       ": expected surface<TAB>tag<TAB>lemma");
    }
    Token token;
    token.index = current.tokens.size();
    token.surface = unicode::to_nfc(fields[0]);
    token.raw_tag = std::string(fields[1]);
    token.pos = normalize_tag(token.raw_tag, tagset);
    token.lemma = fields[2] == "<unknown>"
                      ? unicode::to_lower(token.surface)
                      : unicode::to_lower(unicode::to_nfc(fields[2]));
    const bool ends = token.pos == Tag::kSentEnd;
    current.tokens.push_back(std::move(token));
    if (ends) flush();
  }
  if (in.bad()) throw InputError("read failed");
  flush();
  return sentences;
}

std::vector<Sentence> read_tagged(std::string_view text, Tagset tagset) {
  std::istringstream in{std::string(text)};
  return read_tagged(in, tagset);
}

void write_tagged(std::ostream& out, std::span<const Sentence> sentences) {
  for (const Sentence& sentence : sentences) {
    for (const Token& token : sentence.tokens) {
      out << token.surface << '\t'
          << (token.raw_tag.empty() ? tag_name(token.pos) : token.raw_tag)
          << '\t' << token.lemma << '\n';
    }
    if (sentence.tokens.empty() || sentence.tokens.back().pos != Tag::kSentEnd) {
      out << '\n';
    }
  }
}

}  // namespace simile
