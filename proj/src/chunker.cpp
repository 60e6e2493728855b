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

#include "simile/chunker.hpp"

#include <algorithm>
#include <optional>

#include "simile/error.hpp"

namespace simile {

namespace {

bool english_modifier(Tag t) {
  return t == Tag::kAdj || t == Tag::kNum || t == Tag::kAdv || is_noun(t);
}

// Longest English match starting at `i`.
std::optional<Chunk> match_english(const std::vector<Token>& tokens,
                                   std::size_t i) {
  std::size_t k = i;
  if (tokens[k].pos == Tag::kDet) ++k;
  std::optional<std::size_t> last_noun;
  for (; k < tokens.size() && english_modifier(tokens[k].pos); ++k) {
    if (is_noun(tokens[k].pos)) last_noun = k;
  }
  if (!last_noun) return std::nullopt;
  return Chunk{ChunkKind::kNounPhrase, {i, *last_noun + 1}, *last_noun};
}

std::optional<Chunk> match_french(const std::vector<Token>& tokens,
                                  std::size_t i) {
  std::size_t k = i;
  if (tokens[k].pos == Tag::kDet) ++k;
  while (k < tokens.size() &&
         (tokens[k].pos == Tag::kAdj || tokens[k].pos == Tag::kNum)) {
    ++k;
  }
  if (k >= tokens.size() || !is_noun(tokens[k].pos)) return std::nullopt;
  const std::size_t head = k++;
  while (k < tokens.size() && tokens[k].pos == Tag::kAdj) ++k;
  return Chunk{ChunkKind::kNounPhrase, {i, k}, head};
}

}  // namespace

std::vector<Chunk> chunk_nps(const Sentence& sentence, Language language) {
  std::vector<Chunk> chunks;
  const auto& tokens = sentence.tokens;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::optional<Chunk> chunk = language == Language::kEnglish
                                           ? match_english(tokens, i)
                                           : match_french(tokens, i);
    if (chunk) {
      chunks.push_back(*chunk);
      i = chunk->span.end;
    } else {
      ++i;
    }
  }
  return chunks;
}

const Token& np_head(const Chunk& chunk, const Sentence& sentence) {
  if (chunk.span.start >= chunk.span.end ||
      chunk.span.end > sentence.tokens.size() ||
      !chunk.span.contains(chunk.head_index)) {
    throw InvariantError("chunk [" + std::to_string(chunk.span.start) + "," +
                         std::to_string(chunk.span.end) + ") head " +
                         std::to_string(chunk.head_index) +
                         " does not fit sentence " +
                         std::to_string(sentence.index));
  }
  return sentence.tokens[chunk.head_index];
}

const Chunk* chunk_starting_at(const Sentence& sentence, std::size_t start) {
  const auto it = std::lower_bound(
      sentence.chunks.begin(), sentence.chunks.end(), start,
      [](const Chunk& c, std::size_t s) { return c.span.start < s; });
  if (it == sentence.chunks.end() || it->span.start != start) return nullptr;
  return &*it;
}

const Chunk* chunk_containing(const Sentence& sentence, std::size_t index) {
  for (const Chunk& c : sentence.chunks) {
    if (c.span.contains(index)) return &c;
    if (c.span.start > index) break;
  }
  return nullptr;
}

}  // namespace simile
