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
// Quotation-based dialogue/narration classification and the corpus-level
// dialogue share.

#ifndef LITSCAN_DIALOGUE_HPP_
#define LITSCAN_DIALOGUE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litscan/corpus.hpp"

namespace litscan {

// Byte range of quoted content, quote marks excluded.
struct QuoteSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct DialogueInfo {
  bool is_dialogue = false;  // some span holds a non-whitespace character
  std::vector<QuoteSpan> spans;
  bool unbalanced = false;  // unpaired opener (or stray closer) seen
};

// Opening/closing delimiter pair; open == close for straight quotes.
struct QuoteStyle {
  std::string open;
  std::string close;
};

// Straight double quotes, curly double quotes, guillemets.
const std::vector<QuoteStyle>& default_quote_styles();

// Scans left to right. An opener starts a span of its style; only that
// style's closer ends it; other styles' marks inside are content. An
// unpaired opener spans to the end of the paragraph and sets `unbalanced`.
DialogueInfo classify_dialogue(
    std::string_view text,
    const std::vector<QuoteStyle>& styles = default_quote_styles());

enum class DialogueWeighting { kParagraphs, kCharacters };

// (dialogue_share, narrative_share), summing to 1. Paragraph weighting is
// the fraction of dialogue-bearing paragraphs; character weighting is
// quoted code points over total code points (quote delimiters excluded
// from both). `styles` must be the set classify_dialogue ran with.
// Throws InputError on an empty corpus.
std::pair<double, double> dialogue_proportion(
    const std::vector<Paragraph>& paragraphs,
    const std::vector<DialogueInfo>& infos, DialogueWeighting weighting,
    const std::vector<QuoteStyle>& styles = default_quote_styles());

}  // namespace litscan

#endif  // LITSCAN_DIALOGUE_HPP_
