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

#ifndef SIMILE_UNICODE_HPP_
#define SIMILE_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

// Thin UTF-8 helpers over ICU. All strings are UTF-8 encoded.
namespace simile::unicode {

// Strict UTF-8 validation (no overlongs, surrogates or noncharacters above
// U+10FFFF).
bool is_valid_utf8(std::string_view bytes);

// Maps every byte to the code point of the same value.
std::string latin1_to_utf8(std::string_view bytes);

std::string to_nfc(std::string_view text);
bool is_nfc(std::string_view text);

// Full Unicode lowercasing (root locale). ASCII input takes a fast path.
std::string to_lower(std::string_view text);

// Decodes the code point starting at `pos` and advances `pos` past it.
// Ill-formed sequences decode to U+FFFD and advance by one byte.
char32_t next_code_point(std::string_view text, std::size_t& pos);

// Code point starting at `pos`, without advancing.
char32_t code_point_at(std::string_view text, std::size_t pos);

// Start of the code point that ends right before `pos`.
std::size_t previous_boundary(std::string_view text, std::size_t pos);

std::size_t length(std::string_view text);

bool is_alpha(char32_t c);
bool is_alnum(char32_t c);
bool is_upper(char32_t c);
bool is_space(char32_t c);
bool is_mark(char32_t c);

// True when `text` is non-empty and every code point is alphabetic
// (combining marks are accepted after a letter).
bool is_alphabetic_word(std::string_view text);

// True when the first code point is an uppercase letter.
bool starts_upper(std::string_view text);

bool is_whitespace_only(std::string_view text);

}  // namespace simile::unicode

#endif  // SIMILE_UNICODE_HPP_
