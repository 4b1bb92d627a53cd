// Copyright 2026 The litscan Authors
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
//
// Keyword tagging of paragraphs that touch existential/absurdist
// vocabulary, and the rolling positional density of those tags.

#ifndef LITSCAN_THEMES_HPP_
#define LITSCAN_THEMES_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "litscan/lexicon.hpp"

namespace litscan {

struct ThemeMatch {
  std::string pattern;  // pattern as written in the lexicon ("absurd*")
  std::size_t offset;   // byte offset of the match in the paragraph
};

struct ThemeTag {
  int tag = 0;  // 1 iff matched is non-empty
  std::vector<ThemeMatch> matched;
};

// Case-insensitive word-boundary matching over cleaned text. A '*' entry
// matches any word completion; multi-word entries match across the single
// spaces cleaning guarantees.
ThemeTag tag_absurdity(std::string_view text, const ThemeLexicon& lexicon);

// Trailing-window rolling mean: element i averages tags over indices
// max(0, i - window + 1) .. i. Throws UsageError if window is 0.
std::vector<double> absurdity_series(const std::vector<int>& tags,
                                     std::size_t window);

}  // namespace litscan

#endif  // LITSCAN_THEMES_HPP_
