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

#ifndef SIMILE_TYPES_HPP_
#define SIMILE_TYPES_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace simile {

// Tagset-independent part of speech.
enum class Tag {
  kNounCommon,
  kNounProper,
  kVerb,
  kAdj,
  kAdv,
  kDet,
  kAdp,
  kPron,
  kNum,
  kConj,
  kPunct,
  kSentEnd,
  kOther,
};

inline constexpr Tag kAllTags[] = {
    Tag::kNounCommon, Tag::kNounProper, Tag::kVerb, Tag::kAdj,  Tag::kAdv,
    Tag::kDet,        Tag::kAdp,        Tag::kPron, Tag::kNum,  Tag::kConj,
    Tag::kPunct,      Tag::kSentEnd,    Tag::kOther};

// "NOUN_COMMON", "VERB", ...
std::string_view tag_name(Tag tag);
std::optional<Tag> parse_tag_name(std::string_view name);

inline bool is_noun(Tag tag) {
  return tag == Tag::kNounCommon || tag == Tag::kNounProper;
}

// Half-open token range [start, end).
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool contains(std::size_t index) const { return start <= index && index < end; }
  bool overlaps(const Span& other) const {
    return start < other.end && other.start < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

struct Token {
  std::size_t index = 0;
  std::string surface;
  std::string lemma;  // lowercase
  Tag pos = Tag::kOther;
  std::string raw_tag;
  // Byte offsets into Document::text; absent for pre-tagged input.
  std::optional<std::size_t> char_start;
  std::optional<std::size_t> char_end;
};

enum class ChunkKind { kNounPhrase };

struct Chunk {
  ChunkKind kind = ChunkKind::kNounPhrase;
  Span span;
  std::size_t head_index = 0;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

struct Sentence {
  std::size_t index = 0;
  std::vector<Token> tokens;
  std::vector<Chunk> chunks;  // filled by the chunker
};

}  // namespace simile

#endif  // SIMILE_TYPES_HPP_
