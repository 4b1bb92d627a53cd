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

#include "litscan/emotion.hpp"

#include "litscan/textutil.hpp"

namespace litscan {

std::string_view emotion_source_name(EmotionSource source) {
  return source == EmotionSource::kBaseline ? "baseline" : "adapter";
}

EmotionResult classify_baseline(std::string_view text,
                                const EmotionLexicon& lexicon) {
  EmotionResult result;
  result.source = EmotionSource::kBaseline;

  const std::string folded = fold_for_match(text);
  for (const WordSpan& span : scan_words(folded)) {
    const std::string word = folded.substr(span.begin, span.end - span.begin);
    auto it = lexicon.entries.find(word);
    if (it == lexicon.entries.end()) continue;
    for (const std::string& label : it->second) {
      result.scores[label] += 1.0;
    }
  }

  std::string best(kNeutralLabel);
  double best_score = 0.0;
  std::size_t best_rank = lexicon.priority_rank(best);
  for (const auto& [label, score] : result.scores) {
    const std::size_t rank = lexicon.priority_rank(label);
    if (score > best_score ||
        (score == best_score && score > 0.0 && rank < best_rank)) {
      best = label;
      best_score = score;
      best_rank = rank;
    }
  }
  result.label = best;
  return result;
}

}  // namespace litscan
