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
// Per-paragraph emotion labels, either from the built-in wordlist baseline
// or from an external classifier process spoken to over newline-delimited
// JSON: request {"id": <int>, "text": <string>}, response
// {"id": <int>, "label": <string>, "scores": {<label>: <number>, ...}}.
// Scores are optional and default to {label: 1.0}; when given, the label
// must be their argmax under the configured tie-break.

#ifndef LITSCAN_EMOTION_HPP_
#define LITSCAN_EMOTION_HPP_

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litscan/lexicon.hpp"

namespace litscan {

enum class EmotionSource { kBaseline, kAdapter };

std::string_view emotion_source_name(EmotionSource source);

struct EmotionResult {
  std::string label;
  std::map<std::string, double> scores;  // absent label means score 0
  EmotionSource source = EmotionSource::kBaseline;
};

// Counts word-boundary, case-insensitive lexicon hits per label and picks
// the argmax under the lexicon's priority order; all-zero scores yield
// "neutral".
EmotionResult classify_baseline(std::string_view text,
                                const EmotionLexicon& lexicon);

struct AdapterConfig {
  std::string command;  // run via /bin/sh -c
  std::chrono::milliseconds timeout{30000};
  std::vector<std::string> labels =
      std::vector<std::string>(kEmotionLabels.begin(), kEmotionLabels.end());
  std::vector<std::string> priority =
      std::vector<std::string>(kEmotionLabels.begin(), kEmotionLabels.end());
};

// One classifier process per call; all requests are streamed to it and the
// responses reassembled in id order regardless of arrival order. Throws
// AdapterError on spawn failure, timeout, malformed or unexpected
// responses, and missing ids.
std::vector<EmotionResult> classify_via_adapter(
    const std::vector<std::pair<std::size_t, std::string>>& batch,
    const AdapterConfig& config);

}  // namespace litscan

#endif  // LITSCAN_EMOTION_HPP_
