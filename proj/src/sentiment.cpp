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

#include "litscan/sentiment.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "litscan/textutil.hpp"

namespace litscan {

namespace {

bool is_ascii_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Strips non-word code points (including apostrophes) from both ends.
// Returns the byte range of the word part.
std::pair<std::size_t, std::size_t> word_part(std::string_view token) {
  std::size_t begin = 0;
  std::size_t end = token.size();
  while (begin < end) {
    const auto [cp, len] = decode_cp(token, begin);
    if (is_word_cp(cp)) break;
    begin += len;
  }
  while (end > begin) {
    const auto [cp, len] = decode_cp_before(token, end);
    if (is_word_cp(cp)) break;
    end -= len;
  }
  return {begin, end};
}

bool all_caps_word(std::string_view word) {
  bool has_letter = false;
  for (char c : word) {
    const unsigned char b = static_cast<unsigned char>(c);
    if (b >= 0x80) continue;  // case handling is ASCII-only
    if (std::isalpha(b)) {
      has_letter = true;
      if (std::islower(b)) return false;
    }
  }
  return has_letter;
}

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

std::vector<AffectToken> tokenize_affect(std::string_view text) {
  std::vector<AffectToken> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    while (i < n && is_ascii_ws(text[i])) ++i;
    if (i >= n) break;
    std::size_t end = i;
    while (end < n && !is_ascii_ws(text[end])) ++end;
    const std::string_view surface = text.substr(i, end - i);

    AffectToken token;
    token.surface = std::string(surface);
    const auto [wb, we] = word_part(surface);
    const std::string_view word = surface.substr(wb, we - wb);
    token.match = fold_for_match(word);
    token.all_caps = all_caps_word(word);
    token.trailing_punct = std::string(surface.substr(we));
    tokens.push_back(std::move(token));
    i = end;
  }
  return tokens;
}

bool SentimentRules::is_negator(std::string_view match_form) const {
  if (negators.find(std::string(match_form)) != negators.end()) return true;
  return match_form.size() >= 3 &&
         match_form.substr(match_form.size() - 3) == "n't";
}

bool SentimentRules::is_booster(std::string_view match_form) const {
  return boosters.find(std::string(match_form)) != boosters.end();
}

SentimentRules SentimentRules::standard() {
  SentimentRules rules;
  static const char* const kIntensifiers[] = {
      "absolutely", "amazingly",  "awfully",      "completely",
      "considerably", "decidedly", "deeply",      "enormously",
      "entirely",   "especially", "exceptionally", "extremely",
      "fabulously", "fully",      "greatly",      "highly",
      "hugely",     "incredibly", "intensely",    "majorly",
      "more",       "most",       "particularly", "purely",
      "quite",      "really",     "remarkably",   "so",
      "substantially", "thoroughly", "totally",   "tremendously",
      "unbelievably", "unusually", "utterly",     "very",
  };
  static const char* const kDampeners[] = {
      "almost",     "barely", "hardly", "kinda",    "less",
      "little",     "marginally", "occasionally", "partly",
      "scarcely",   "slightly",   "somewhat",     "sorta",
  };
  for (const char* w : kIntensifiers) rules.boosters.emplace(w, 1);
  for (const char* w : kDampeners) rules.boosters.emplace(w, -1);

  static const char* const kNegators[] = {
      "aint",    "arent",   "cannot",  "cant",    "couldnt", "darent",
      "didnt",   "doesnt",  "dont",    "hadnt",   "hasnt",   "havent",
      "isnt",    "mightnt", "mustnt",  "neither", "neednt",  "never",
      "none",    "nope",    "nor",     "not",     "nothing", "nowhere",
      "oughtnt", "shant",   "shouldnt", "uhuh",   "wasnt",   "werent",
      "without", "wont",    "wouldnt", "rarely",  "seldom",  "despite",
  };
  for (const char* w : kNegators) rules.negators.insert(w);
  return rules;
}

SentimentScore score_paragraph(std::string_view text,
                               const ValenceLexicon& lexicon,
                               const SentimentRules& rules) {
  const std::vector<AffectToken> tokens = tokenize_affect(text);
  if (tokens.empty()) return SentimentScore{};

  // Caps emphasis only applies when the paragraph mixes emphatic and
  // normal capitalization.
  std::size_t caps_count = 0;
  for (const AffectToken& t : tokens) {
    if (t.all_caps) ++caps_count;
  }
  const bool caps_differential =
      caps_count > 0 && caps_count < tokens.size();

  std::vector<double> scores(tokens.size(), 0.0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const AffectToken& token = tokens[i];
    if (rules.is_booster(token.match)) continue;  // modifier, not content
    double v = lexicon.valence_of(token.match);
    if (v == 0.0) continue;

    if (token.all_caps && caps_differential) {
      v += sign_of(v) * rules.caps_emphasis;
    }
    for (int d = 1; d <= rules.negation_window; ++d) {
      if (static_cast<std::size_t>(d) > i) break;
      const AffectToken& prior = tokens[i - d];
      if (lexicon.contains(prior.match)) continue;
      if (auto it = rules.boosters.find(prior.match);
          it != rules.boosters.end()) {
        double s = it->second * rules.booster_increment;
        if (v < 0.0) s = -s;
        if (d == 2) s *= rules.booster_damp_2;
        if (d == 3) s *= rules.booster_damp_3;
        v += s;
      }
      if (rules.is_negator(prior.match)) {
        v *= rules.negation_scalar;
      }
    }
    scores[i] = v;
  }

  // Contrastive conjunction: discount before the pivot, amplify after.
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].match != rules.contrast_word) continue;
    for (std::size_t k = 0; k < scores.size(); ++k) {
      if (k < i) scores[k] *= rules.contrast_weight_before;
      if (k > i) scores[k] *= rules.contrast_weight_after;
    }
    break;
  }

  double total = 0.0;
  for (double s : scores) total += s;

  int bangs = 0;
  for (const AffectToken& t : tokens) {
    bangs += static_cast<int>(
        std::count(t.trailing_punct.begin(), t.trailing_punct.end(), '!'));
  }
  bangs = std::min(bangs, rules.exclamation_cap);
  const double emphasis = bangs * rules.exclamation_increment;
  if (total > 0.0) total += emphasis;
  if (total < 0.0) total -= emphasis;

  SentimentScore result;
  double normalized =
      total / std::sqrt(total * total + rules.normalization_alpha);
  normalized = std::clamp(normalized, -1.0, 1.0);
  result.compound = normalized;

  double pos_mass = 0.0;
  double neg_mass = 0.0;
  double neu_mass = 0.0;
  for (double s : scores) {
    if (s > 0.0) pos_mass += s + 1.0;
    if (s < 0.0) neg_mass += -s + 1.0;
    if (s == 0.0) neu_mass += 1.0;
  }
  const double mass = pos_mass + neg_mass + neu_mass;
  if (mass > 0.0) {
    result.pos = pos_mass / mass;
    result.neg = neg_mass / mass;
    result.neu = neu_mass / mass;
  }
  return result;
}

}  // namespace litscan
