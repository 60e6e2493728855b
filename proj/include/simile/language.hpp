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

#ifndef SIMILE_LANGUAGE_HPP_
#define SIMILE_LANGUAGE_HPP_

#include <optional>
#include <string_view>

namespace simile {

enum class Language { kEnglish, kFrench };

// Accepts "en"/"fr" in any case.
std::optional<Language> parse_language(std::string_view code);

// Lowercase two-letter code.
std::string_view language_code(Language language);

}  // namespace simile

#endif  // SIMILE_LANGUAGE_HPP_
