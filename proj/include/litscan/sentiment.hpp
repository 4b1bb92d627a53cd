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
// Rule-based paragraph sentiment scoring. Every heuristic constant lives in
// SentimentRules so tests can pin it and callers can audit it.
//
// Scoring pipeline, applied per token in order:
//   1. base valence from the lexicon (booster words score 0 themselves;
//      unknown tokens score 0),
//   2. all-caps emphasis (+/- caps_emphasis) when the token is emphatically
//      capitalized and the paragraph mixes cases,
//   3. for each of the up to `negation_window` preceding tokens that are
//      not themselves lexicon entries, nearest first:
//        booster  -> add +/- booster_increment toward the token's sign,
//                    damped by booster_damp_2 / booster_damp_3 at
//                    distances 2 and 3,
//        negator  -> multiply by negation_scalar.
// Then the first contrast word ("but") reweights token scores around it,
// trailing '!' runs amplify the total (exclamation_increment each, count
// capped at exclamation_cap), and the total is normalized to [-1, +1] via
// s / sqrt(s^2 + normalization_alpha).
//
// pos/neu/neg are proportions of adjusted valence mass: each scoring token
// contributes |score| + 1 to its side, each neutral token contributes 1.

#ifndef LITSCAN_SENTIMENT_HPP_
#define LITSCAN_SENTIMENT_HPP_

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "litscan/lexicon.hpp"

namespace litscan {

// One whitespace-delimited token of a cleaned paragraph.
struct AffectToken {
  std::string surface;         // exactly as it appears in the text
  std::string match;           // lowercased, folded, punctuation-stripped
  bool all_caps = false;       // letters present and all of them uppercase
  std::string trailing_punct;  // trailing non-word run ("!!", "...", ...)
};

// Splits on whitespace; joining the surfaces with single spaces restores
// the cleaned text's word sequence. Contractions stay whole.
std::vector<AffectToken> tokenize_affect(std::string_view text);

struct SentimentRules {
  double normalization_alpha = 15.0;
  double booster_increment = 0.293;
  double booster_damp_2 = 0.95;  // booster two tokens back
  double booster_damp_3 = 0.9;   // booster three tokens back
  double negation_scalar = -0.74;
  int negation_window = 3;
  double caps_emphasis = 0.733;
  double exclamation_increment = 0.292;
  int exclamation_cap = 4;
  double contrast_weight_before = 0.5;
  double contrast_weight_after = 1.5;
  std::string contrast_word = "but";

  // Degree modifiers: +1 intensifies, -1 dampens.
  std::unordered_map<std::string, int> boosters;
  // Words that flip the sign of a following scored token. Any token whose
  // match form ends in "n't" negates as well.
  std::unordered_set<std::string> negators;

  bool is_negator(std::string_view match_form) const;
  bool is_booster(std::string_view match_form) const;

  // The published reference constants plus the stock booster and negator
  // word lists.
  static SentimentRules standard();
};

struct SentimentScore {
  double compound = 0.0;  // in [-1, +1]
  double pos = 0.0;
  double neu = 0.0;
  double neg = 0.0;
};

// Deterministic; pure in (text, lexicon, rules). Empty input yields the
// all-zero score.
SentimentScore score_paragraph(std::string_view text,
                               const ValenceLexicon& lexicon,
                               const SentimentRules& rules);

}  // namespace litscan

#endif  // LITSCAN_SENTIMENT_HPP_
