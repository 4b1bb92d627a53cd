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

#include "litscan/dataset.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <thread>

#include "litscan/errors.hpp"

namespace litscan {

namespace {

// Compounds are exported at 6 decimals; statistics use the same grid so
// the exported dataset reproduces them exactly.
double quantize6(double v) {
  return std::round(v * 1e6) / 1e6;
}

void analyze_one(ParagraphRecord& record, const AnalyzerBundle& bundle) {
  const std::string& text = record.paragraph.text;
  record.sentiment = score_paragraph(text, *bundle.valence, bundle.rules);
  record.characters = detect_mentions(text, *bundle.gazetteer);
  record.theme = tag_absurdity(text, *bundle.themes);
  record.dialogue = classify_dialogue(text, bundle.quote_styles);
}

}  // namespace

std::vector<ParagraphRecord> assemble(const std::vector<Paragraph>& paragraphs,
                                      const AnalyzerBundle& bundle,
                                      unsigned jobs) {
  if (jobs == 0) jobs = 1;
  std::vector<ParagraphRecord> records(paragraphs.size());
  for (std::size_t i = 0; i < paragraphs.size(); ++i) {
    records[i].paragraph = paragraphs[i];
  }

  // Emotion first: the adapter path is one serialized batch through a
  // single child process, reassembled by id.
  bool use_baseline = !bundle.adapter.has_value();
  if (bundle.adapter) {
    std::vector<std::pair<std::size_t, std::string>> batch;
    batch.reserve(paragraphs.size());
    for (const Paragraph& p : paragraphs) {
      batch.emplace_back(p.index, p.text);
    }
    try {
      std::vector<EmotionResult> results =
          classify_via_adapter(batch, *bundle.adapter);
      for (std::size_t i = 0; i < records.size(); ++i) {
        records[i].emotion = std::move(results[i]);
      }
    } catch (const AdapterError& e) {
      if (!bundle.adapter_fallback) throw;
      std::cerr << "warning: " << e.what()
                << "; falling back to the baseline classifier\n";
      use_baseline = true;
    }
  }

  const unsigned worker_count =
      static_cast<unsigned>(std::min<std::size_t>(jobs, records.size()));
  auto work = [&](unsigned worker) {
    for (std::size_t i = worker; i < records.size(); i += worker_count) {
      if (use_baseline) {
        records[i].emotion =
            classify_baseline(records[i].paragraph.text, *bundle.emotions);
      }
      analyze_one(records[i], bundle);
    }
  };
  if (worker_count <= 1) {
    if (!records.empty()) work(0);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (unsigned w = 0; w < worker_count; ++w) {
      workers.emplace_back(work, w);
    }
    for (std::thread& t : workers) t.join();
  }
  return records;
}

std::size_t sentiment_hist_bin(double compound) {
  // Integer micro-units make the half-open decimal boundaries exact.
  const long long micro = std::llround(quantize6(compound) * 1e6);
  const long long shifted = micro + 1000000;  // 0 .. 2000000
  const long long bin = shifted / 100000;
  if (bin < 0) return 0;
  if (bin >= static_cast<long long>(kSentimentHistBins)) {
    return kSentimentHistBins - 1;  // +1.0 closes the final bin
  }
  return static_cast<std::size_t>(bin);
}

CorpusSummary aggregate(const std::vector<ParagraphRecord>& records,
                        std::size_t window, DialogueWeighting weighting,
                        const std::vector<QuoteStyle>& styles) {
  if (records.empty()) {
    throw InputError("cannot aggregate an empty record set");
  }
  CorpusSummary summary;
  summary.n_paragraphs = records.size();
  summary.window = window;

  for (std::string_view label : kEmotionLabels) {
    summary.emotion_freq[std::string(label)] = 0;
  }

  std::vector<int> tags;
  tags.reserve(records.size());
  std::vector<Paragraph> paragraphs;
  paragraphs.reserve(records.size());
  std::vector<DialogueInfo> infos;
  infos.reserve(records.size());
  std::vector<MentionSet> mentions;
  mentions.reserve(records.size());

  double sum = 0.0;
  for (const ParagraphRecord& record : records) {
    ++summary.emotion_freq[record.emotion.label];
    const double compound = quantize6(record.sentiment.compound);
    sum += compound;
    ++summary.sentiment_hist[sentiment_hist_bin(compound)];
    tags.push_back(record.theme.tag);
    if (record.theme.tag == 1) ++summary.absurd_count;
    paragraphs.push_back(record.paragraph);
    infos.push_back(record.dialogue);
    mentions.push_back(record.characters);
  }
  const double n = static_cast<double>(records.size());
  summary.sentiment_mean = sum / n;
  double variance = 0.0;
  for (const ParagraphRecord& record : records) {
    const double d =
        quantize6(record.sentiment.compound) - summary.sentiment_mean;
    variance += d * d;
  }
  summary.sentiment_std = std::sqrt(variance / n);

  summary.interaction_counts = interaction_counts(mentions);
  summary.absurd_ratio = static_cast<double>(summary.absurd_count) / n;
  const auto [dialogue, narrative] =
      dialogue_proportion(paragraphs, infos, weighting, styles);
  summary.dialogue_share = dialogue;
  summary.narrative_share = narrative;
  summary.absurdity_series = absurdity_series(tags, window);
  return summary;
}

}  // namespace litscan
