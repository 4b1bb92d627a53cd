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
// The four immutable lookup tables behind the analyzers. Flat lexicons are
// TSV (token<TAB>value, '#' comments); the gazetteer is JSON. Loaders
// validate everything up front and throw LexiconError with a line number
// (TSV) or a path expression (JSON); after loading the tables never change,
// so they are safe to share across threads.

#ifndef LITSCAN_LEXICON_HPP_
#define LITSCAN_LEXICON_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace litscan {

// The fixed label set, in default tie-break priority order. `neutral` is
// the no-signal label and never appears as a lexicon mapping.
inline constexpr std::array<std::string_view, 7> kEmotionLabels = {
    "sadness", "anger", "fear", "disgust", "surprise", "joy", "neutral"};

inline constexpr std::string_view kNeutralLabel = "neutral";

// Per-token sentiment valence in [-4, +4]. Keys are lowercase and
// whitespace-free.
struct ValenceLexicon {
  std::unordered_map<std::string, double> entries;
  std::vector<std::string> warnings;  // duplicate-token notes from loading

  static ValenceLexicon parse(std::string_view tsv);
  static ValenceLexicon load(const std::filesystem::path& path);

  // Sorted serialization; parse(to_tsv()) reproduces `entries`.
  std::string to_tsv() const;

  double valence_of(std::string_view token) const;
  bool contains(std::string_view token) const;
};

// Token -> set of emotion labels, plus the tie-break priority order.
struct EmotionLexicon {
  std::unordered_map<std::string, std::set<std::string>> entries;
  std::vector<std::string> priority;  // strict total order over the labels
  std::vector<std::string> warnings;

  static EmotionLexicon parse(std::string_view tsv);
  static EmotionLexicon load(const std::filesystem::path& path);
  std::string to_tsv() const;

  // Position in the priority order; lower wins ties.
  std::size_t priority_rank(std::string_view label) const;
};

// Case-insensitive word-boundary patterns for theme tagging. A trailing
// '*' matches any word completion; multi-word entries match across single
// spaces.
struct ThemeLexicon {
  std::vector<std::string> patterns;

  static ThemeLexicon parse(std::string_view text);
  static ThemeLexicon load(const std::filesystem::path& path);
  std::string to_text() const;
};

enum class PronounClass { kFirstPerson, kThirdMasculine, kThirdFeminine };

std::string_view pronoun_class_name(PronounClass cls);
std::optional<PronounClass> pronoun_class_from_name(std::string_view name);

// Canonical character names with their case-sensitive surface aliases,
// optional narrator, and the static pronoun-class resolution map.
struct CharacterGazetteer {
  std::map<std::string, std::vector<std::string>> characters;
  std::optional<std::string> narrator;
  std::map<PronounClass, std::string> pronoun_map;

  static CharacterGazetteer parse(std::string_view json_text);
  static CharacterGazetteer load(const std::filesystem::path& path);
  std::string to_json() const;

  // Re-points the narrator (and the first-person mapping that follows it
  // by default). Throws LexiconError if `name` is not a known character.
  void set_narrator(const std::string& name);
};

// Bundled defaults, parsed once from the embedded copies of the files
// under data/.
const ValenceLexicon& default_valence_lexicon();
const EmotionLexicon& default_emotion_lexicon();
const ThemeLexicon& default_theme_lexicon();
const CharacterGazetteer& default_gazetteer();

}  // namespace litscan

#endif  // LITSCAN_LEXICON_HPP_
