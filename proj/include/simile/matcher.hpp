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

#ifndef SIMILE_MATCHER_HPP_
#define SIMILE_MATCHER_HPP_

#include <memory>
#include <span>
#include <vector>

#include "simile/lexicon.hpp"
#include "simile/types.hpp"

namespace simile {

// A compiled marker pattern: a deterministic predicate over token
// sequences. Immutable and safe to share across threads.
class Matcher {
 public:
  const MarkerPattern& pattern() const { return pattern_; }

  // Every match in the sentence, ordered by start. Gapped patterns report
  // the nearest tail for each anchor.
  std::vector<Span> find_all(const Sentence& sentence) const;

  // True if `span` is one of find_all(sentence).
  bool matches(const Sentence& sentence, const Span& span) const;

 private:
  friend Matcher compile_pattern(const MarkerPattern&, const ColourLexicon&);
  Matcher(MarkerPattern pattern, std::shared_ptr<const ColourLexicon> colours)
      : pattern_(std::move(pattern)), colours_(std::move(colours)) {}

  bool sequence_at(const Sentence& sentence, std::size_t start,
                   std::span<const ElementSpec> elements) const;

  MarkerPattern pattern_;
  std::shared_ptr<const ColourLexicon> colours_;
};

// Throws InputError naming the pattern id if it violates its invariants.
Matcher compile_pattern(const MarkerPattern& pattern,
                        const ColourLexicon& colours = ColourLexicon::builtin());

std::vector<Matcher> compile_lexicon(std::span<const MarkerPattern> patterns,
                                     const ColourLexicon& colours = ColourLexicon::builtin());

}  // namespace simile

#endif  // SIMILE_MATCHER_HPP_
