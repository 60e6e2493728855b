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

#include "simile/lexicon.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>
#include <unordered_set>

#include <json.hpp>

#include "simile/error.hpp"
#include "simile/io.hpp"
#include "simile/unicode.hpp"

namespace simile {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::array<std::string_view, 5> kKindNames = {
    "fixed_seq", "gapped_seq", "verb_comparative", "suffix_like",
    "colour_compound"};

ElementSpec el(std::initializer_list<std::string_view> lemmas,
               std::initializer_list<Tag> pos = {}) {
  ElementSpec spec;
  for (std::string_view l : lemmas) spec.lemmas.emplace_back(l);
  std::sort(spec.lemmas.begin(), spec.lemmas.end());
  spec.pos.assign(pos.begin(), pos.end());
  return spec;
}

MarkerPattern make(std::string id, Language language, MarkerCategory category,
                   PatternKind kind, std::vector<ElementSpec> elements = {},
                   bool excluded = false) {
  MarkerPattern p;
  p.id = std::move(id);
  p.language = language;
  p.category = category;
  p.kind = kind;
  p.elements = std::move(elements);
  if (kind == PatternKind::kGappedSeq) p.max_gap = kDefaultMaxGap;
  p.excluded_by_default = excluded;
  return p;
}

std::vector<MarkerPattern> english_markers() {
  constexpr auto en = Language::kEnglish;
  constexpr auto verb = MarkerCategory::kVerb;
  constexpr auto adj = MarkerCategory::kAdj;
  constexpr auto fixed = PatternKind::kFixedSeq;
  const auto to = el({"to"});
  return {
      make("en.verb.resemble", en, verb, fixed, {el({"resemble"}, {Tag::kVerb})}),
      make("en.verb.remind", en, verb, fixed, {el({"remind"}, {Tag::kVerb})},
           /*excluded=*/true),
      make("en.verb.compare", en, verb, fixed, {el({"compare"}, {Tag::kVerb})}),
      make("en.verb.seem", en, verb, fixed, {el({"seem"}, {Tag::kVerb})}),
      make("en.verb.less_than", en, verb, PatternKind::kVerbComparative,
           {el({"less"}), el({"than"})}),
      make("en.verb.more_than", en, verb, PatternKind::kVerbComparative,
           {el({"more"}), el({"than"})}),
      make("en.verb.be_kind_of", en, verb, PatternKind::kGappedSeq,
           {el({"be", "become"}, {Tag::kVerb}), el({"kind", "sort", "type"}),
            el({"of"})}),
      make("en.adj.similar_to", en, adj, fixed, {el({"similar"}), to}),
      make("en.adj.akin_to", en, adj, fixed, {el({"akin"}), to}),
      make("en.adj.identical_to", en, adj, fixed, {el({"identical"}), to}),
      make("en.adj.analogous_to", en, adj, fixed, {el({"analogous"}), to}),
      make("en.adj.comparable_to", en, adj, fixed, {el({"comparable"}), to}),
      make("en.adj.compared_to", en, adj, fixed, {el({"compare", "compared"}), to}),
      make("en.adj.reminiscent_of", en, adj, fixed,
           {el({"reminiscent"}), el({"of"})}),
      make("en.adj.like_suffix", en, adj, PatternKind::kSuffixLike),
      make("en.adj.colour_compound", en, adj, PatternKind::kColourCompound),
  };
}

std::vector<MarkerPattern> french_markers() {
  constexpr auto fr = Language::kFrench;
  constexpr auto verb = MarkerCategory::kVerb;
  constexpr auto adj = MarkerCategory::kAdj;
  constexpr auto fixed = PatternKind::kFixedSeq;
  const auto a = el({"à", "au", "aux"});
  const auto de = el({"d'", "de", "des", "du"});
  const auto article = el({"l'", "la", "le"});
  return {
      make("fr.verb.ressembler_a", fr, verb, fixed,
           {el({"ressembler"}, {Tag::kVerb}), a}),
      make("fr.verb.sembler", fr, verb, fixed, {el({"sembler"}, {Tag::kVerb})}),
      make("fr.verb.rappeler", fr, verb, fixed, {el({"rappeler"}, {Tag::kVerb})},
           /*excluded=*/true),
      make("fr.verb.faire_effet_de", fr, verb, fixed,
           {el({"faire"}, {Tag::kVerb}), article, el({"effet"}), de}),
      make("fr.verb.faire_penser_a", fr, verb, fixed,
           {el({"faire"}, {Tag::kVerb}), el({"penser"}), a}),
      make("fr.verb.faire_songer_a", fr, verb, fixed,
           {el({"faire"}, {Tag::kVerb}), el({"songer"}), a}),
      make("fr.verb.donner_impression_de", fr, verb, fixed,
           {el({"donner"}, {Tag::kVerb}), article, el({"impression"}), de}),
      make("fr.verb.avoir_air_de", fr, verb, fixed,
           {el({"avoir"}, {Tag::kVerb}), article, el({"air"}), de}),
      make("fr.verb.plus_que", fr, verb, PatternKind::kVerbComparative,
           {el({"plus"}), el({"que", "qu'"})}),
      make("fr.verb.moins_que", fr, verb, PatternKind::kVerbComparative,
           {el({"moins"}), el({"que", "qu'"})}),
      make("fr.verb.etre_espece_de", fr, verb, PatternKind::kGappedSeq,
           {el({"être", "devenir"}, {Tag::kVerb}),
            el({"espèce", "genre", "sorte", "type"}), de}),
      make("fr.adj.identique_a", fr, adj, fixed, {el({"identique"}), a}),
      make("fr.adj.tel", fr, adj, fixed, {el({"tel"}, {Tag::kAdj, Tag::kDet})}),
      make("fr.adj.semblable_a", fr, adj, fixed, {el({"semblable"}), a}),
      make("fr.adj.pareil_a", fr, adj, fixed, {el({"pareil"}), a}),
      make("fr.adj.similaire_a", fr, adj, fixed, {el({"similaire"}), a}),
      make("fr.adj.analogue_a", fr, adj, fixed, {el({"analogue"}), a}),
      make("fr.adj.egal_a", fr, adj, fixed, {el({"égal"}), a}),
      make("fr.adj.comparable_a", fr, adj, fixed, {el({"comparable"}), a}),
  };
}

// Field-path aware accessors for the custom lexicon schema.
[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

const Json& require(const Json& obj, const std::string& path, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) schema_error(path + "." + key, "missing field");
  return *it;
}

std::string require_string(const Json& obj, const std::string& path,
                           const char* key) {
  const Json& v = require(obj, path, key);
  if (!v.is_string()) schema_error(path + "." + key, "expected string");
  return v.get<std::string>();
}

ElementSpec parse_element(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected object");
  for (const auto& item : j.items()) {
    if (item.key() != "lemmas" && item.key() != "pos") {
      schema_error(path + "." + item.key(), "unknown field");
    }
  }
  ElementSpec spec;
  const Json& lemmas = require(j, path, "lemmas");
  if (!lemmas.is_array() || lemmas.empty()) {
    schema_error(path + ".lemmas", "expected non-empty array of strings");
  }
  for (std::size_t i = 0; i < lemmas.size(); ++i) {
    if (!lemmas[i].is_string()) {
      schema_error(path + ".lemmas[" + std::to_string(i) + "]", "expected string");
    }
    spec.lemmas.push_back(lemmas[i].get<std::string>());
  }
  std::sort(spec.lemmas.begin(), spec.lemmas.end());
  spec.lemmas.erase(std::unique(spec.lemmas.begin(), spec.lemmas.end()),
                    spec.lemmas.end());

  if (const auto it = j.find("pos"); it != j.end() && !it->is_null()) {
    auto parse_one = [&](const Json& v, const std::string& where) {
      if (!v.is_string()) schema_error(where, "expected tag name");
      const auto tag = parse_tag_name(v.get<std::string>());
      if (!tag) schema_error(where, "unknown tag '" + v.get<std::string>() + "'");
      spec.pos.push_back(*tag);
    };
    if (it->is_array()) {
      for (std::size_t i = 0; i < it->size(); ++i) {
        parse_one((*it)[i], path + ".pos[" + std::to_string(i) + "]");
      }
    } else {
      parse_one(*it, path + ".pos");
    }
  }
  return spec;
}

MarkerPattern parse_pattern(const Json& j, const std::string& path) {
  if (!j.is_object()) schema_error(path, "expected object");
  static const std::unordered_set<std::string> kKnown = {
      "id", "language", "category", "kind", "elements", "max_gap",
      "excluded_by_default"};
  for (const auto& item : j.items()) {
    if (!kKnown.count(item.key())) {
      schema_error(path + "." + item.key(), "unknown field");
    }
  }
  MarkerPattern p;
  p.id = require_string(j, path, "id");
  if (p.id.empty()) schema_error(path + ".id", "must be non-empty");

  const std::string language = require_string(j, path, "language");
  if (language == "en") {
    p.language = Language::kEnglish;
  } else if (language == "fr") {
    p.language = Language::kFrench;
  } else {
    schema_error(path + ".language", "expected \"en\" or \"fr\"");
  }

  const std::string category = require_string(j, path, "category");
  if (category == "verb") {
    p.category = MarkerCategory::kVerb;
  } else if (category == "adj") {
    p.category = MarkerCategory::kAdj;
  } else {
    schema_error(path + ".category", "expected \"verb\" or \"adj\"");
  }

  const std::string kind = require_string(j, path, "kind");
  const auto kit = std::find(kKindNames.begin(), kKindNames.end(), kind);
  if (kit == kKindNames.end()) {
    schema_error(path + ".kind", "unknown kind '" + kind + "'");
  }
  p.kind = static_cast<PatternKind>(kit - kKindNames.begin());

  if (const auto it = j.find("elements"); it != j.end()) {
    if (!it->is_array()) schema_error(path + ".elements", "expected array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      p.elements.push_back(
          parse_element((*it)[i], path + ".elements[" + std::to_string(i) + "]"));
    }
  }
  if (const auto it = j.find("max_gap"); it != j.end()) {
    if (!it->is_number_unsigned()) {
      schema_error(path + ".max_gap", "expected non-negative integer");
    }
    p.max_gap = it->get<std::size_t>();
  }
  if (const auto it = j.find("excluded_by_default"); it != j.end()) {
    if (!it->is_boolean()) schema_error(path + ".excluded_by_default", "expected bool");
    p.excluded_by_default = it->get<bool>();
  }

  try {
    validate_pattern(p);
  } catch (const InputError& e) {
    schema_error(path, e.what());
  }
  return p;
}

Json element_to_json(const ElementSpec& spec) {
  Json j;
  j["lemmas"] = spec.lemmas;
  if (spec.pos.size() == 1) {
    j["pos"] = std::string(tag_name(spec.pos.front()));
  } else if (!spec.pos.empty()) {
    Json tags = Json::array();
    for (Tag t : spec.pos) tags.push_back(std::string(tag_name(t)));
    j["pos"] = tags;
  }
  return j;
}

}  // namespace

bool ElementSpec::accepts(const Token& token) const {
  if (!pos.empty() && std::find(pos.begin(), pos.end(), token.pos) == pos.end()) {
    return false;
  }
  return std::binary_search(lemmas.begin(), lemmas.end(), token.lemma);
}

std::string_view category_name(MarkerCategory category) {
  return category == MarkerCategory::kVerb ? "verb" : "adj";
}

std::string_view kind_name(PatternKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

void validate_pattern(const MarkerPattern& p) {
  auto fail = [&](const std::string& what) {
    throw InputError("pattern '" + p.id + "': " + what);
  };
  if (p.id.empty()) fail("empty id");
  for (char c : p.id) {
    if (c == ' ' || c == '\t' || c == '\n') fail("id contains whitespace");
  }
  const std::size_t n = p.elements.size();
  switch (p.kind) {
    case PatternKind::kFixedSeq:
      if (n < 1) fail("fixed_seq needs at least one element");
      break;
    case PatternKind::kGappedSeq:
      if (n < 2) fail("gapped_seq needs an anchor and at least one tail element");
      if (!p.max_gap) fail("gapped_seq requires max_gap");
      break;
    case PatternKind::kVerbComparative:
      if (n != 2) fail("verb_comparative needs exactly two elements");
      break;
    case PatternKind::kSuffixLike:
    case PatternKind::kColourCompound:
      if (n != 0) fail(std::string(kind_name(p.kind)) + " takes no elements");
      break;
  }
  if (p.kind != PatternKind::kGappedSeq && p.max_gap) {
    fail("max_gap is only valid for gapped_seq");
  }
  for (const ElementSpec& e : p.elements) {
    if (e.lemmas.empty()) fail("element with no lemmas");
    for (const std::string& lemma : e.lemmas) {
      if (lemma.empty()) fail("empty lemma");
      if (lemma.find_first_of(" \t\n\r") != std::string::npos) {
        fail("lemma '" + lemma + "' contains whitespace");
      }
      if (unicode::to_lower(lemma) != lemma) {
        fail("lemma '" + lemma + "' is not lowercase");
      }
      if (!unicode::is_nfc(lemma)) fail("lemma '" + lemma + "' is not NFC");
    }
  }
}

std::vector<MarkerPattern> builtin_lexicon(Language language) {
  return language == Language::kEnglish ? english_markers() : french_markers();
}

std::vector<MarkerPattern> parse_lexicon(std::string_view json_text) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_array()) schema_error("$", "expected top-level array");
  std::vector<MarkerPattern> patterns;
  std::unordered_set<std::string> ids;
  for (std::size_t i = 0; i < root.size(); ++i) {
    const std::string path = "[" + std::to_string(i) + "]";
    MarkerPattern p = parse_pattern(root[i], path);
    if (!ids.insert(p.id).second) {
      schema_error(path + ".id", "duplicate id '" + p.id + "'");
    }
    patterns.push_back(std::move(p));
  }
  return patterns;
}

std::vector<MarkerPattern> load_lexicon(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  try {
    return parse_lexicon(text);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

std::string lexicon_to_json(const std::vector<MarkerPattern>& patterns) {
  Json root = Json::array();
  for (const MarkerPattern& p : patterns) {
    Json j;
    j["id"] = p.id;
    j["language"] = std::string(language_code(p.language));
    j["category"] = std::string(category_name(p.category));
    j["kind"] = std::string(kind_name(p.kind));
    Json elements = Json::array();
    for (const ElementSpec& e : p.elements) elements.push_back(element_to_json(e));
    j["elements"] = elements;
    if (p.max_gap) j["max_gap"] = *p.max_gap;
    j["excluded_by_default"] = p.excluded_by_default;
    root.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

const ColourLexicon& ColourLexicon::builtin() {
  static const ColourLexicon colours(std::set<std::string>{
      "white", "black", "red", "green", "blue", "yellow", "grey", "gray",
      "brown", "gold", "golden", "silver", "pink", "purple", "violet",
      "crimson", "scarlet", "pale"});
  return colours;
}

ColourLexicon ColourLexicon::parse(std::string_view text) {
  std::set<std::string> colours;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    colours.insert(unicode::to_lower(unicode::to_nfc(line)));
  }
  return ColourLexicon(std::move(colours));
}

ColourLexicon ColourLexicon::load(const std::filesystem::path& path) {
  return parse(read_file(path));
}

bool ColourLexicon::contains(std::string_view word) const {
  return colours_.find(std::string(word)) != colours_.end();
}

bool detect_like_suffix(const Token& token) {
  static const std::unordered_set<std::string> kExcluded = {
      "like", "alike", "unlike", "dislike", "belike", "mislike"};
  const std::string lower = unicode::to_lower(token.surface);
  constexpr std::string_view kSuffix = "like";
  if (lower.size() <= kSuffix.size() ||
      std::string_view(lower).substr(lower.size() - kSuffix.size()) != kSuffix) {
    return false;
  }
  if (kExcluded.count(lower)) return false;
  std::string_view stem = std::string_view(lower).substr(0, lower.size() - kSuffix.size());
  if (!stem.empty() && stem.back() == '-') stem.remove_suffix(1);
  return unicode::length(stem) >= 2 && unicode::is_alphabetic_word(stem);
}

bool detect_colour_compound(const Token& token, const ColourLexicon& colours) {
  const std::string lower = unicode::to_lower(token.surface);
  const auto hyphen = lower.find('-');
  if (hyphen == std::string::npos || lower.find('-', hyphen + 1) != std::string::npos) {
    return false;
  }
  const std::string_view first = std::string_view(lower).substr(0, hyphen);
  const std::string_view second = std::string_view(lower).substr(hyphen + 1);
  return unicode::length(first) >= 2 && unicode::is_alphabetic_word(first) &&
         colours.contains(second) && !colours.contains(first);
}

}  // namespace simile
