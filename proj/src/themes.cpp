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

#include "litscan/themes.hpp"

#include <algorithm>

#include "litscan/errors.hpp"
#include "litscan/textutil.hpp"

namespace litscan {

namespace {

struct CompiledPattern {
  const std::string* display;
  std::string literal;  // folded literal part, '*' removed
  bool star;            // matches any word completion after the literal
};

}  // namespace

ThemeTag tag_absurdity(std::string_view text, const ThemeLexicon& lexicon) {
  ThemeTag result;
  const FoldedText folded = fold_with_offsets(text);

  std::vector<CompiledPattern> compiled;
  compiled.reserve(lexicon.patterns.size());
  for (const std::string& pattern : lexicon.patterns) {
    CompiledPattern cp;
    cp.display = &pattern;
    cp.star = !pattern.empty() && pattern.back() == '*';
    cp.literal = fold_for_match(
        cp.star ? std::string_view(pattern).substr(0, pattern.size() - 1)
                : std::string_view(pattern));
    compiled.push_back(std::move(cp));
  }

  const std::string& hay = folded.text;
  for (const CompiledPattern& cp : compiled) {
    std::size_t from = 0;
    while (from <= hay.size()) {
      const std::size_t at = hay.find(cp.literal, from);
      if (at == std::string::npos) break;
      const std::size_t end = at + cp.literal.size();
      const bool start_ok = boundary_before(hay, at);
      // A starred pattern absorbs the rest of the word; a literal one must
      // end at a word boundary.
      const bool end_ok = cp.star || boundary_after(hay, end);
      if (start_ok && end_ok) {
        result.matched.push_back({*cp.display, folded.offsets[at]});
        break;  // one hit per pattern is enough for tagging
      }
      from = at + 1;
    }
  }

  std::sort(result.matched.begin(), result.matched.end(),
            [](const ThemeMatch& a, const ThemeMatch& b) {
              if (a.offset != b.offset) return a.offset < b.offset;
              return a.pattern < b.pattern;
            });
  result.tag = result.matched.empty() ? 0 : 1;
  return result;
}

std::vector<double> absurdity_series(const std::vector<int>& tags,
                                     std::size_t window) {
  if (window == 0) {
    throw UsageError("absurdity series window must be at least 1");
  }
  std::vector<double> series;
  series.reserve(tags.size());
  long long running = 0;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    running += tags[i];
    if (i >= window) running -= tags[i - window];
    const std::size_t span = std::min(window, i + 1);
    series.push_back(static_cast<double>(running) /
                     static_cast<double>(span));
  }
  return series;
}

}  // namespace litscan
