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

#ifndef SIMILE_TESTS_SUPPORT_HPP_
#define SIMILE_TESTS_SUPPORT_HPP_

#include <filesystem>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "simile/language.hpp"
#include "simile/text.hpp"
#include "simile/types.hpp"
#include "simile/unicode.hpp"

namespace test {

inline std::filesystem::path data_path(std::string_view relative) {
  return std::filesystem::path(SIMILE_TEST_DATA_DIR) / relative;
}

inline std::filesystem::path bundled_path(std::string_view relative) {
  return std::filesystem::path(SIMILE_BUNDLED_DATA_DIR) / relative;
}

// "It/PP seemed/VVD/seem a/DT ghost/NN ./SENT": surface/raw_tag[/lemma],
// lemma defaulting to the lowercased surface.
inline simile::Sentence sentence(std::string_view spec, simile::Language language) {
  std::ostringstream tsv;
  std::istringstream in{std::string(spec)};
  std::string item;
  while (in >> item) {
    const auto a = item.find('/', 1);
    const auto b = item.find('/', a + 1);
    const std::string surface = item.substr(0, a);
    const std::string tag = item.substr(a + 1, b == std::string::npos ? b : b - a - 1);
    const std::string lemma =
        simile::unicode::to_lower(b == std::string::npos ? surface : item.substr(b + 1));
    tsv << surface << '\t' << tag << '\t' << lemma << '\n';
  }
  auto sentences = simile::read_tagged(tsv.str(), simile::tagset_for(language));
  return sentences.empty() ? simile::Sentence{} : sentences.front();
}

inline std::filesystem::path temp_dir(std::string_view name) {
  auto dir = std::filesystem::temp_directory_path() / ("simile_test_" + std::string(name));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace test

#endif  // SIMILE_TESTS_SUPPORT_HPP_
