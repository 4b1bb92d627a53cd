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

#include "litscan/characters.hpp"

#include <algorithm>

#include "litscan/report.hpp"
#include "litscan/textutil.hpp"

namespace litscan {

namespace {

// Pronoun surface forms per class, matched case-insensitively. Common
// contractions are included so first-person narration is not lost to "I'm".
const std::vector<std::string>& pronoun_words(PronounClass cls) {
  static const std::vector<std::string> kFirst = {
      "i", "me", "my", "mine", "myself", "i'm", "i'd", "i'll", "i've"};
  static const std::vector<std::string> kMasculine = {
      "he", "him", "his", "himself", "he's", "he'd", "he'll"};
  static const std::vector<std::string> kFeminine = {
      "she", "her", "hers", "herself", "she's", "she'd", "she'll"};
  switch (cls) {
    case PronounClass::kFirstPerson:
      return kFirst;
    case PronounClass::kThirdMasculine:
      return kMasculine;
    case PronounClass::kThirdFeminine:
      return kFeminine;
  }
  return kFirst;
}

struct AliasRef {
  const std::string* alias;
  const std::string* character;
};

}  // namespace

MentionSet detect_mentions(std::string_view text,
                           const CharacterGazetteer& gazetteer) {
  MentionSet mentions;

  // Longest alias first so "Marie Cardona" beats "Marie" on overlap.
  std::vector<AliasRef> aliases;
  for (const auto& [name, list] : gazetteer.characters) {
    for (const std::string& alias : list) {
      aliases.push_back({&alias, &name});
    }
  }
  std::sort(aliases.begin(), aliases.end(),
            [](const AliasRef& a, const AliasRef& b) {
              if (a.alias->size() != b.alias->size()) {
                return a.alias->size() > b.alias->size();
              }
              return *a.alias < *b.alias;
            });

  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!boundary_before(text, pos)) {
      ++pos;
      continue;
    }
    const AliasRef* hit = nullptr;
    for (const AliasRef& ref : aliases) {
      const std::string& alias = *ref.alias;
      if (alias.size() > text.size() - pos) continue;
      if (text.compare(pos, alias.size(), alias) != 0) continue;
      if (!boundary_after(text, pos + alias.size())) continue;
      hit = &ref;
      break;
    }
    if (hit != nullptr) {
      mentions.characters.insert(*hit->character);
      mentions.evidence.push_back(
          {*hit->alias, *hit->character, pos});
      pos += hit->alias->size();
    } else {
      ++pos;
    }
  }

  if (!gazetteer.pronoun_map.empty()) {
    const FoldedText folded = fold_with_offsets(text);
    for (const WordSpan& span : scan_words(folded.text)) {
      const std::string_view word(folded.text.data() + span.begin,
                                  span.end - span.begin);
      for (const auto& [cls, target] : gazetteer.pronoun_map) {
        const auto& words = pronoun_words(cls);
        if (std::find(words.begin(), words.end(), word) == words.end()) {
          continue;
        }
        const std::size_t original_begin = folded.offsets[span.begin];
        const std::size_t original_end =
            span.end < folded.offsets.size()
                ? folded.offsets[span.end]
                : text.size();
        mentions.characters.insert(target);
        mentions.evidence.push_back(
            {std::string(text.substr(original_begin,
                                     original_end - original_begin)),
             target, original_begin});
        break;
      }
    }
    // Keep evidence ordered by position regardless of detection pass.
    std::stable_sort(mentions.evidence.begin(), mentions.evidence.end(),
                     [](const MentionEvidence& a, const MentionEvidence& b) {
                       return a.offset < b.offset;
                     });
  }
  return mentions;
}

std::map<std::string, std::size_t> interaction_counts(
    const std::vector<MentionSet>& mentions) {
  std::map<std::string, std::size_t> counts;
  for (const MentionSet& m : mentions) {
    for (const std::string& name : m.characters) {
      ++counts[name];
    }
  }
  return counts;
}

std::map<std::pair<std::string, std::string>, std::size_t>
co_occurrence_edges(const std::vector<MentionSet>& mentions) {
  std::map<std::pair<std::string, std::string>, std::size_t> edges;
  for (const MentionSet& m : mentions) {
    for (auto a = m.characters.begin(); a != m.characters.end(); ++a) {
      auto b = a;
      for (++b; b != m.characters.end(); ++b) {
        ++edges[{*a, *b}];  // set iteration order keeps *a < *b
      }
    }
  }
  return edges;
}

std::string co_occurrence_csv(
    const std::map<std::pair<std::string, std::string>, std::size_t>& edges) {
  std::string out = "source,target,weight\r\n";
  for (const auto& [pair, weight] : edges) {
    out += csv_escape(pair.first);
    out += ',';
    out += csv_escape(pair.second);
    out += ',';
    out += std::to_string(weight);
    out += "\r\n";
  }
  return out;
}

}  // namespace litscan
