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
// Runs every analyzer over the corpus, joins the results into one record
// per paragraph, and reduces the records to the corpus summary.

#ifndef LITSCAN_DATASET_HPP_
#define LITSCAN_DATASET_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "litscan/characters.hpp"
#include "litscan/corpus.hpp"
#include "litscan/dialogue.hpp"
#include "litscan/emotion.hpp"
#include "litscan/lexicon.hpp"
#include "litscan/sentiment.hpp"
#include "litscan/themes.hpp"

namespace litscan {

// The joined annotation row. Record index equals paragraph index.
struct ParagraphRecord {
  Paragraph paragraph;
  EmotionResult emotion;
  SentimentScore sentiment;
  MentionSet characters;
  ThemeTag theme;
  DialogueInfo dialogue;
};

// Everything assemble needs; lexicons are borrowed and must outlive the
// call. Immutable during assembly, so paragraph analysis can run
// data-parallel.
struct AnalyzerBundle {
  const ValenceLexicon* valence = nullptr;
  const EmotionLexicon* emotions = nullptr;
  const ThemeLexicon* themes = nullptr;
  const CharacterGazetteer* gazetteer = nullptr;
  SentimentRules rules = SentimentRules::standard();
  std::vector<QuoteStyle> quote_styles = default_quote_styles();
  std::optional<AdapterConfig> adapter;
  bool adapter_fallback = false;
};

// Analyzes every paragraph. Output is in paragraph order and identical
// for every `jobs` value. Adapter failures propagate unless
// `adapter_fallback` is set, in which case the whole run downgrades to the
// baseline classifier (a note is written to stderr).
std::vector<ParagraphRecord> assemble(const std::vector<Paragraph>& paragraphs,
                                      const AnalyzerBundle& bundle,
                                      unsigned jobs = 1);

inline constexpr std::size_t kSentimentHistBins = 20;

struct CorpusSummary {
  std::size_t n_paragraphs = 0;
  std::map<std::string, std::size_t> emotion_freq;  // all seven labels
  double sentiment_mean = 0.0;
  double sentiment_std = 0.0;  // population (divisor N)
  std::array<std::size_t, kSentimentHistBins> sentiment_hist{};
  std::map<std::string, std::size_t> interaction_counts;
  std::size_t absurd_count = 0;
  double absurd_ratio = 0.0;
  double dialogue_share = 0.0;
  double narrative_share = 0.0;
  std::vector<double> absurdity_series;
  std::size_t window = 10;  // rolling window the series was computed with
};

// Reduces records to the summary. Sentiment statistics are computed on
// compounds quantized to the 6-decimal export precision, so a dataset
// re-read from records.csv reproduces the summary exactly. Histogram bins
// are half-open over [-1, +1) with the final bin closed at +1. Throws
// InputError on empty records.
CorpusSummary aggregate(
    const std::vector<ParagraphRecord>& records, std::size_t window,
    DialogueWeighting weighting = DialogueWeighting::kParagraphs,
    const std::vector<QuoteStyle>& styles = default_quote_styles());

// Bin index for a compound score, matching aggregate's rule.
std::size_t sentiment_hist_bin(double compound);

}  // namespace litscan

#endif  // LITSCAN_DATASET_HPP_
