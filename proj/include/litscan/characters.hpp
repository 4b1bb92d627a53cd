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
// Character mention detection from the gazetteer plus static pronoun
// resolution, and the paragraph-level interaction aggregates built on it.
// "Interaction" means presence in a paragraph, counted once per paragraph;
// per-occurrence detail stays available in the evidence list.

#ifndef LITSCAN_CHARACTERS_HPP_
#define LITSCAN_CHARACTERS_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "litscan/lexicon.hpp"

namespace litscan {

struct MentionEvidence {
  std::string surface;    // matched text as it appears in the paragraph
  std::string character;  // canonical name
  std::size_t offset;     // byte offset into the paragraph text
};

struct MentionSet {
  std::set<std::string> characters;
  std::vector<MentionEvidence> evidence;
};

// Aliases match case-sensitively at word boundaries, longest alias first
// on overlap. Mapped pronoun classes match case-insensitively at word
// boundaries and resolve to their configured target.
MentionSet detect_mentions(std::string_view text,
                           const CharacterGazetteer& gazetteer);

// Paragraphs mentioning each character; zero-count characters are omitted.
// Element i of `mentions` is paragraph i's mention set.
std::map<std::string, std::size_t> interaction_counts(
    const std::vector<MentionSet>& mentions);

// Paragraph co-mention counts per unordered character pair (pair keys are
// sorted lexicographically).
std::map<std::pair<std::string, std::string>, std::size_t>
co_occurrence_edges(const std::vector<MentionSet>& mentions);

// RFC 4180 CSV with header "source,target,weight", rows sorted by pair.
std::string co_occurrence_csv(
    const std::map<std::pair<std::string, std::string>, std::size_t>& edges);

}  // namespace litscan

#endif  // LITSCAN_CHARACTERS_HPP_
