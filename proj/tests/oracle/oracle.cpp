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

#include "oracle.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <optional>
#include <tuple>

namespace oracle {

using simile::PatternKind;
using simile::Tag;
using simile::Token;

namespace {

char letter(Tag tag) {
  switch (tag) {
    case Tag::kDet: return 'D';
    case Tag::kAdj: return 'J';
    case Tag::kNum: return 'M';
    case Tag::kAdv: return 'R';
    case Tag::kNounCommon: return 'N';
    case Tag::kNounProper: return 'P';
    default: return 'x';
  }
}

bool accepts(const simile::ElementSpec& e, const Token& t) {
  if (!e.pos.empty() && std::find(e.pos.begin(), e.pos.end(), t.pos) == e.pos.end()) {
    return false;
  }
  for (const auto& l : e.lemmas) {
    if (l == t.lemma) return true;
  }
  return false;
}

bool punct(const Token& t) { return t.pos == Tag::kPunct || t.pos == Tag::kSentEnd; }

bool seq_at(const std::vector<Token>& toks, std::size_t at,
            const std::vector<simile::ElementSpec>& els, std::size_t first) {
  if (at + (els.size() - first) > toks.size()) return false;
  for (std::size_t k = first; k < els.size(); ++k) {
    if (!accepts(els[k], toks[at + k - first])) return false;
  }
  return true;
}

std::string ascii_lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool ascii_alpha(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  });
}

}  // namespace

std::vector<Chunk> chunk(const Sentence& sentence, Language language) {
  static const std::regex en("D?[JMRNP]*[NP]");
  static const std::regex fr("D?[JM]*[NP]J*");
  const std::regex& re = language == Language::kEnglish ? en : fr;

  std::string letters;
  for (const Token& t : sentence.tokens) letters += letter(t.pos);

  std::vector<Chunk> out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t best = 0;
    for (std::size_t j = letters.size(); j > i; --j) {
      if (std::regex_match(letters.substr(i, j - i), re)) {
        best = j;
        break;
      }
    }
    if (best == 0) {
      ++i;
      continue;
    }
    Chunk c;
    c.span = {i, best};
    const std::string body = letters.substr(i, best - i);
    c.head_index = i + (language == Language::kEnglish ? body.find_last_of("NP")
                                                        : body.find_first_of("NP"));
    out.push_back(c);
    i = best;
  }
  return out;
}

bool like_suffix(const std::string& surface) {
  static const std::set<std::string> excluded = {"like",  "alike",   "unlike",
                                                 "dislike", "belike", "mislike"};
  const std::string lower = ascii_lower(surface);
  if (lower.size() < 4 || lower.compare(lower.size() - 4, 4, "like") != 0) return false;
  if (excluded.count(lower)) return false;
  std::string stem = lower.substr(0, lower.size() - 4);
  if (!stem.empty() && stem.back() == '-') stem.pop_back();
  return stem.size() >= 2 && ascii_alpha(stem);
}

bool colour_compound(const std::string& surface, const std::set<std::string>& colours) {
  if (std::count(surface.begin(), surface.end(), '-') != 1) return false;
  const auto dash = surface.find('-');
  const std::string x = surface.substr(0, dash);
  const std::string y = ascii_lower(surface.substr(dash + 1));
  return x.size() >= 2 && ascii_alpha(x) && colours.count(y) && !colours.count(ascii_lower(x));
}

std::vector<Span> match(const MarkerPattern& p, const Sentence& sentence,
                        const std::set<std::string>& colours) {
  const auto& toks = sentence.tokens;
  const std::size_t n = toks.size();
  std::vector<Span> out;
  for (std::size_t i = 0; i < n; ++i) {
    switch (p.kind) {
      case PatternKind::kFixedSeq:
        if (seq_at(toks, i, p.elements, 0)) out.push_back({i, i + p.elements.size()});
        break;
      case PatternKind::kGappedSeq: {
        if (!accepts(p.elements[0], toks[i])) break;
        const std::size_t tail = p.elements.size() - 1;
        for (std::size_t g = 0; g <= *p.max_gap; ++g) {
          bool clean = true;
          for (std::size_t k = i + 1; k < i + 1 + g && k < n; ++k) clean = clean && !punct(toks[k]);
          if (!clean || i + 1 + g + tail > n) break;
          if (seq_at(toks, i + 1 + g, p.elements, 1)) {
            out.push_back({i, i + 1 + g + tail});
            break;
          }
        }
        break;
      }
      case PatternKind::kVerbComparative:
        if (toks[i].pos != Tag::kVerb) break;
        for (std::size_t g = 0; g <= 1; ++g) {
          if (g == 1 && (i + 1 >= n || punct(toks[i + 1]))) break;
          if (seq_at(toks, i + 1 + g, p.elements, 0)) {
            out.push_back({i, i + 3 + g});
            break;
          }
        }
        break;
      case PatternKind::kSuffixLike:
      case PatternKind::kColourCompound: {
        const Token& t = toks[i];
        if (t.pos != Tag::kAdj && t.pos != Tag::kNounCommon) break;
        const bool hit = p.kind == PatternKind::kSuffixLike ? like_suffix(t.surface)
                                                            : colour_compound(t.surface, colours);
        if (hit) out.push_back({i, i + 1});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Match> resolve(std::vector<Match> matches) {
  std::vector<Match> kept;
  while (!matches.empty()) {
    auto best = std::min_element(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
      const auto ka = std::make_tuple(-static_cast<long>(a.span.length()), a.id, a.span.start);
      const auto kb = std::make_tuple(-static_cast<long>(b.span.length()), b.id, b.span.start);
      return ka < kb;
    });
    const Match chosen = *best;
    kept.push_back(chosen);
    std::erase_if(matches, [&](const Match& m) { return m.span.overlaps(chosen.span); });
  }
  std::sort(kept.begin(), kept.end(),
            [](const Match& a, const Match& b) { return a.span.start < b.span.start; });
  return kept;
}

std::vector<simile::SimileCandidate> extract(const Sentence& sentence, Language language,
                                             const std::vector<MarkerPattern>& patterns,
                                             const std::set<std::string>& colours,
                                             bool include_excluded, const std::string& doc_id) {
  const auto chunks = chunk(sentence, language);
  std::vector<Match> all;
  for (const auto& p : patterns) {
    if (p.language != language || (p.excluded_by_default && !include_excluded)) continue;
    for (const Span& s : match(p, sentence, colours)) all.push_back({p.id, s});
  }
  const auto& toks = sentence.tokens;
  const std::set<std::string> copulas = language == Language::kEnglish
                                            ? std::set<std::string>{"be", "seem", "look"}
                                            : std::set<std::string>{"être", "sembler", "paraître"};
  std::vector<simile::SimileCandidate> out;
  for (const Match& m : resolve(all)) {
    const auto& p = *std::find_if(patterns.begin(), patterns.end(),
                                  [&](const MarkerPattern& q) { return q.id == m.id; });
    const bool morph = p.kind == PatternKind::kSuffixLike || p.kind == PatternKind::kColourCompound;
    simile::SimileCandidate c;
    c.doc_id = doc_id;
    c.sentence_index = sentence.index;
    c.marker_id = m.id;
    c.marker_span = m.span;
    std::optional<Chunk> np;
    for (const Chunk& ch : chunks) {
      if (morph ? ch.span.contains(m.span.start) && ch.head_index > m.span.start
                : ch.span.start == m.span.end) {
        np = ch;
      }
    }
    const bool inside = std::any_of(chunks.begin(), chunks.end(),
                                    [&](const Chunk& ch) { return ch.span.contains(m.span.start); });
    if (np && toks[np->head_index].pos == Tag::kNounCommon) {
      c.np_span = np->span;
      c.head_lemma = toks[np->head_index].lemma;
      c.head_surface = toks[np->head_index].surface;
      out.push_back(c);
      continue;
    }
    if (!morph || inside) continue;
    for (std::size_t d = 1; d <= 3 && d <= m.span.start; ++d) {
      if (copulas.count(toks[m.span.start - d].lemma)) {
        c.predicative = true;
        out.push_back(c);
        break;
      }
    }
  }
  return out;
}

simile::FrequencyReport random_report(std::mt19937_64& rng) {
  static const char* const kAuthors[] = {"Ann Ashdown", "Ben Brook", "Claire Corbin"};
  static const std::vector<std::string> kMarkers = [] {
    std::vector<std::string> ids;
    for (Language l : {Language::kEnglish, Language::kFrench}) {
      for (const auto& p : simile::builtin_lexicon(l)) ids.push_back(p.id);
    }
    return ids;
  }();
  std::uniform_int_distribution<int> coin(0, 2);
  std::uniform_int_distribution<std::size_t> marker(0, kMarkers.size() - 1);
  std::uniform_int_distribution<std::uint64_t> count(1, 9);
  std::uniform_int_distribution<int> cells(0, 6);

  simile::FrequencyReport r;
  for (int d = 0; d < 10; ++d) {
    if (coin(rng) != 0) continue;
    const std::string id = "d" + std::to_string(d);
    const std::uint64_t sentences = d == 9 ? 0 : 10 + 17 * static_cast<std::uint64_t>(d);
    r.doc_sentences[id] = sentences;
    r.doc_meta[id] = {kAuthors[d % 3], d % 2 ? Language::kFrench : Language::kEnglish};
    if (sentences == 0) continue;
    for (int k = cells(rng); k > 0; --k) r.cells[{id, kMarkers[marker(rng)]}] += count(rng);
  }
  return r;
}

std::vector<simile::AggregateRow> aggregate(const simile::FrequencyReport& report,
                                            simile::GroupBy group_by,
                                            const simile::CategoryMap& categories) {
  using simile::GroupBy;
  // Group key of every (doc, marker) cell and of every document.
  auto cell_key = [&](const std::string& doc, const std::string& marker) -> std::string {
    switch (group_by) {
      case GroupBy::kMarker: return marker;
      case GroupBy::kCategory: return std::string(simile::category_name(categories.at(marker)));
      case GroupBy::kAuthor: return report.doc_meta.at(doc).author;
      case GroupBy::kLanguage: return std::string(simile::language_code(report.doc_meta.at(doc).language));
    }
    return "";
  };
  const bool per_doc = group_by == GroupBy::kAuthor || group_by == GroupBy::kLanguage;
  std::set<std::string> keys;
  for (const auto& [cell, n] : report.cells) keys.insert(cell_key(cell.first, cell.second));
  if (per_doc) {
    for (const auto& [doc, n] : report.doc_sentences) keys.insert(cell_key(doc, ""));
  }
  std::vector<simile::AggregateRow> rows;
  for (const auto& key : keys) {
    simile::AggregateRow row;
    row.group_key = key;
    for (const auto& [doc, sentences] : report.doc_sentences) {
      if (per_doc && cell_key(doc, "") != key) continue;
      ++row.total_docs;
      row.total_sentences += sentences;
      std::uint64_t n = 0;
      for (const auto& [cell, c] : report.cells) {
        if (cell.first == doc && cell_key(doc, cell.second) == key) n += c;
      }
      row.total_count += n;
      row.docs_with_nonzero += n > 0;
    }
    if (row.total_sentences > 0) row.rate = simile::Rational(row.total_count, row.total_sentences);
    rows.push_back(row);
  }
  return rows;
}

std::optional<std::string> check_stats_laws(const simile::FrequencyReport& a,
                                            const simile::FrequencyReport& b,
                                            const simile::FrequencyReport& c,
                                            const simile::CategoryMap& categories) {
  using simile::GroupBy;
  using simile::merge;
  const auto ab = merge(a, b);
  if (ab != merge(b, a)) return "merge is not commutative";
  const auto abc = merge(ab, c);
  if (abc != merge(a, merge(b, c))) return "merge is not associative";
  if (merge(a, simile::FrequencyReport{}) != a) return "empty report is not an identity";

  for (const auto& [cell, n] : ab.cells) {
    const auto [doc, marker] = cell;
    if (n != a.count(doc, marker) + b.count(doc, marker)) return "merged count is not the sum";
  }
  if (ab.total() != a.total() + b.total()) return "merged total is not the sum";

  std::uint64_t sentences = 0;
  for (const auto& [doc, n] : abc.doc_sentences) sentences += n;
  for (GroupBy g : {GroupBy::kMarker, GroupBy::kAuthor, GroupBy::kLanguage, GroupBy::kCategory}) {
    const auto rows = simile::aggregate(abc, g, categories);
    if (rows != oracle::aggregate(abc, g, categories)) {
      return "aggregate by " + std::string(simile::group_by_name(g)) + " differs from the reference";
    }
    std::uint64_t total = 0;
    std::uint64_t docs = 0;
    std::uint64_t grouped_sentences = 0;
    for (const auto& row : rows) {
      total += row.total_count;
      docs += row.total_docs;
      grouped_sentences += row.total_sentences;
      if (row.docs_with_nonzero > row.total_docs) return "more nonzero documents than documents";
      if (row.rate.has_value() != (row.total_sentences > 0)) return "rate presence is wrong";
      if (row.rate && !(*row.rate == simile::Rational(row.total_count, row.total_sentences))) {
        return "rate is not count over sentences";
      }
    }
    if (total != abc.total()) return "group counts do not partition the total";
    const bool per_doc = g == GroupBy::kAuthor || g == GroupBy::kLanguage;
    if (per_doc && (docs != abc.doc_sentences.size() || grouped_sentences != sentences)) {
      return "document groups do not partition the documents";
    }
  }

  // Ranking depends only on the rows, not on their order.
  auto rows = simile::aggregate(abc, GroupBy::kMarker, categories);
  const auto ranked = simile::rank_markers(rows);
  std::reverse(rows.begin(), rows.end());
  if (simile::rank_markers(rows) != ranked) return "ranking depends on input order";
  for (std::size_t i = 1; i < ranked.size(); ++i) {
    const auto& x = ranked[i - 1];
    const auto& y = ranked[i];
    if (x.total_count < y.total_count || (x.total_count == y.total_count && x.group_key >= y.group_key)) {
      return "ranking is not by count then key";
    }
  }

  // Splitting by document and merging back is the identity.
  std::map<std::string, simile::FrequencyReport> parts;
  for (const auto& [doc, n] : abc.doc_sentences) {
    parts[doc].doc_sentences[doc] = n;
    parts[doc].doc_meta[doc] = abc.doc_meta.at(doc);
  }
  for (const auto& [cell, n] : abc.cells) parts[cell.first].cells[cell] = n;
  simile::FrequencyReport rebuilt;
  for (const auto& [doc, part] : parts) rebuilt = merge(rebuilt, part);
  if (rebuilt != abc) return "partition merge differs from the whole";

  // Per-document rates are count over sentences.
  for (const auto& [cell, n] : abc.cells) {
    if (!(simile::per_sentence_rate(abc, cell.first, cell.second) ==
          simile::Rational(n, abc.doc_sentences.at(cell.first)))) {
      return "per-sentence rate is wrong";
    }
  }
  return std::nullopt;
}

namespace {

struct Word {
  const char* surface;
  const char* lemma;
  Tag tag;
};

const std::vector<Word>& vocabulary(Language language) {
  static const std::vector<Word> en = {
      {"the", "the", Tag::kDet},         {"a", "a", Tag::kDet},
      {"his", "his", Tag::kDet},         {"old", "old", Tag::kAdj},
      {"similar", "similar", Tag::kAdj}, {"akin", "akin", Tag::kAdj},
      {"identical", "identical", Tag::kAdj}, {"analogous", "analogous", Tag::kAdj},
      {"comparable", "comparable", Tag::kAdj}, {"reminiscent", "reminiscent", Tag::kAdj},
      {"childlike", "childlike", Tag::kAdj}, {"god-like", "god-like", Tag::kAdj},
      {"snow-white", "snow-white", Tag::kAdj}, {"blood-red", "blood-red", Tag::kAdj},
      {"red-hot", "red-hot", Tag::kAdj}, {"unlike", "unlike", Tag::kAdp},
      {"two", "two", Tag::kNum},         {"far", "far", Tag::kAdv},
      {"more", "more", Tag::kAdv},       {"less", "less", Tag::kAdv},
      {"ghost", "ghost", Tag::kNounCommon}, {"king", "king", Tag::kNounCommon},
      {"kind", "kind", Tag::kNounCommon}, {"sort", "sort", Tag::kNounCommon},
      {"type", "type", Tag::kNounCommon}, {"ghostlike", "ghostlike", Tag::kNounCommon},
      {"Napoleon", "napoleon", Tag::kNounProper}, {"seemed", "seem", Tag::kVerb},
      {"resembled", "resemble", Tag::kVerb}, {"reminded", "remind", Tag::kVerb},
      {"compared", "compare", Tag::kVerb}, {"compared", "compared", Tag::kAdj},
      {"was", "be", Tag::kVerb},          {"became", "become", Tag::kVerb},
      {"looked", "look", Tag::kVerb},     {"ate", "eat", Tag::kVerb},
      {"to", "to", Tag::kAdp},            {"of", "of", Tag::kAdp},
      {"than", "than", Tag::kAdp},        {"like", "like", Tag::kAdp},
      {"he", "he", Tag::kPron},           {"it", "it", Tag::kPron},
      {",", ",", Tag::kPunct},            {"and", "and", Tag::kConj},
  };
  static const std::vector<Word> fr = {
      {"le", "le", Tag::kDet},          {"la", "le", Tag::kDet},
      {"l'", "l'", Tag::kDet},          {"un", "un", Tag::kDet},
      {"de", "de", Tag::kAdp},          {"d'", "d'", Tag::kAdp},
      {"du", "du", Tag::kAdp},          {"des", "des", Tag::kDet},
      {"à", "à", Tag::kAdp},            {"au", "au", Tag::kAdp},
      {"que", "que", Tag::kConj},       {"qu'", "qu'", Tag::kConj},
      {"plus", "plus", Tag::kAdv},      {"moins", "moins", Tag::kAdv},
      {"était", "être", Tag::kVerb},    {"devint", "devenir", Tag::kVerb},
      {"semblait", "sembler", Tag::kVerb}, {"ressemblait", "ressembler", Tag::kVerb},
      {"rappelait", "rappeler", Tag::kVerb}, {"fit", "faire", Tag::kVerb},
      {"penser", "penser", Tag::kVerb}, {"songer", "songer", Tag::kVerb},
      {"donnait", "donner", Tag::kVerb}, {"avait", "avoir", Tag::kVerb},
      {"effet", "effet", Tag::kNounCommon}, {"impression", "impression", Tag::kNounCommon},
      {"air", "air", Tag::kNounCommon}, {"espèce", "espèce", Tag::kNounCommon},
      {"genre", "genre", Tag::kNounCommon}, {"sorte", "sorte", Tag::kNounCommon},
      {"tombeau", "tombeau", Tag::kNounCommon}, {"fauve", "fauve", Tag::kNounCommon},
      {"tel", "tel", Tag::kAdj},        {"telle", "tel", Tag::kDet},
      {"pareil", "pareil", Tag::kAdj},  {"identique", "identique", Tag::kAdj},
      {"semblable", "semblable", Tag::kAdj}, {"similaire", "similaire", Tag::kAdj},
      {"égal", "égal", Tag::kAdj},      {"immense", "immense", Tag::kAdj},
      {"analogue", "analogue", Tag::kAdj}, {"comparable", "comparable", Tag::kAdj},
      {"deux", "deux", Tag::kNum},      {"il", "il", Tag::kPron},
      {"Marie", "marie", Tag::kNounProper}, {",", ",", Tag::kPunct},
  };
  return language == Language::kEnglish ? en : fr;
}

}  // namespace

Sentence random_sentence(std::mt19937_64& rng, Language language, std::size_t max_tokens) {
  const auto& vocab = vocabulary(language);
  std::uniform_int_distribution<std::size_t> length(1, max_tokens);
  std::uniform_int_distribution<std::size_t> pick(0, vocab.size() - 1);
  std::uniform_int_distribution<std::size_t> any_tag(0, std::size(simile::kAllTags) - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Sentence s;
  const std::size_t n = length(rng);
  for (std::size_t i = 0; i < n; ++i) {
    const Word& w = vocab[pick(rng)];
    Token t;
    t.index = i;
    t.surface = w.surface;
    t.lemma = w.lemma;
    // Occasional tag noise exercises the part-of-speech constraints.
    t.pos = unit(rng) < 0.15 ? simile::kAllTags[any_tag(rng)] : w.tag;
    t.raw_tag = std::string(simile::tag_name(t.pos));
    s.tokens.push_back(std::move(t));
  }
  if (n < max_tokens && unit(rng) < 0.7) {
    Token end;
    end.index = n;
    end.surface = end.lemma = ".";
    end.pos = Tag::kSentEnd;
    end.raw_tag = "SENT";
    s.tokens.push_back(std::move(end));
  }
  return s;
}

}  // namespace oracle
