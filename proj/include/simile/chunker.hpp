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

#ifndef SIMILE_CHUNKER_HPP_
#define SIMILE_CHUNKER_HPP_

#include <vector>

#include "simile/language.hpp"
#include "simile/types.hpp"

namespace simile {

// Rule-based NP chunking, longest match first, scanning left to right.
//
//   en: DET? (ADJ|NUM|ADV|NOUN)* NOUN        head = last noun
//   fr: DET? (ADJ|NUM)* NOUN ADJ*            head = the noun
//
// Pronouns never start or extend a chunk.
std::vector<Chunk> chunk_nps(const Sentence& sentence, Language language);

// Token at `chunk.head_index`. Throws InvariantError if the chunk does not
// fit the sentence.
const Token& np_head(const Chunk& chunk, const Sentence& sentence);

// The chunk whose span begins at `start`, if any.
const Chunk* chunk_starting_at(const Sentence& sentence, std::size_t start);

// The chunk containing token `index`, if any.
const Chunk* chunk_containing(const Sentence& sentence, std::size_t index);

}  // namespace simile

#endif  // SIMILE_CHUNKER_HPP_
