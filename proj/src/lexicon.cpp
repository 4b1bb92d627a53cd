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

#include "litscan/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "litscan/corpus.hpp"
#include "litscan/errors.hpp"
#include "litscan/textutil.hpp"

namespace litscan {

namespace defaults {
// Defined in the generated defaults_data.cpp; verbatim copies of the
// bundled files under data/.
extern const char* const kValenceTsv;
extern const char* const kEmotionTsv;
extern const char* const kThemeText;
extern const char* const kGazetteerJson;
}  // namespace defaults

namespace {

constexpr double kValenceMin = -4.0;
constexpr double kValenceMax = 4.0;

struct TsvRow {
  std::size_t line_no;  // 1-based
  std::string_view token;
  std::string_view value;
};

// Splits TSV content into token/value rows, skipping comments and blank
// lines. `want_value` controls whether a missing second column is an error.
std::vector<TsvRow> split_tsv(std::string_view text, bool want_value) {
  std::vector<TsvRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos) {
        if (want_value) {
          throw LexiconError("line " + std::to_string(line_no) +
                             ": expected token<TAB>value");
        }
        rows.push_back({line_no, line, {}});
      } else {
        rows.push_back(
            {line_no, line.substr(0, tab), line.substr(tab + 1)});
      }
    }
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return rows;
}

void check_token(std::string_view token, std::size_t line_no) {
  if (token.empty()) {
    throw LexiconError("line " + std::to_string(line_no) + ": empty token");
  }
  for (char c : token) {
    if (c == ' ' || c == '\t') {
      throw LexiconError("line " + std::to_string(line_no) +
                         ": token contains whitespace");
    }
  }
  if (std::string(token) != fold_for_match(token)) {
    throw LexiconError("line " + std::to_string(line_no) +
                       ": token must be lowercase");
  }
}

double parse_valence_value(std::string_view value, std::size_t line_no) {
  double v = 0.0;
  const char* first = value.data();
  const char* last = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw LexiconError("line " + std::to_string(line_no) +
                       ": invalid valence");
  }
  if (v < kValenceMin || v > kValenceMax) {
    throw LexiconError("line " + std::to_string(line_no) + ": valence " +
                       std::string(value) + " out of range [-4, 4]");
  }
  return v;
}

std::string format_valence(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

bool is_known_label(std::string_view label) {
  return std::find(kEmotionLabels.begin(), kEmotionLabels.end(), label) !=
         kEmotionLabels.end();
}

using nlohmann::json;

const json& expect(const json& node, const char* key, json::value_t type,
                   const std::string& path) {
  auto it = node.find(key);
  if (it == node.end()) {
    throw LexiconError(path + "." + key + ": missing");
  }
  if (it->type() != type) {
    throw LexiconError(path + "." + key + ": unexpected type");
  }
  return *it;
}

}  // namespace

ValenceLexicon ValenceLexicon::parse(std::string_view tsv) {
  ValenceLexicon lexicon;
  for (const TsvRow& row : split_tsv(tsv, /*want_value=*/true)) {
    check_token(row.token, row.line_no);
    const double v = parse_valence_value(row.value, row.line_no);
    const std::string key = normalize_nfc(row.token);
    auto [it, inserted] = lexicon.entries.emplace(key, v);
    if (!inserted) {
      lexicon.warnings.push_back("line " + std::to_string(row.line_no) +
                                 ": duplicate token \"" + key +
                                 "\" (last entry wins)");
      it->second = v;
    }
  }
  return lexicon;
}

ValenceLexicon ValenceLexicon::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    throw LexiconError(e.what());
  }
  require_valid_utf8(text);
  try {
    return parse(text);
  } catch (const LexiconError& e) {
    throw LexiconError(path.string() + ": " + e.what());
  }
}

std::string ValenceLexicon::to_tsv() const {
  std::vector<std::pair<std::string, double>> sorted(entries.begin(),
                                                     entries.end());
  std::sort(sorted.begin(), sorted.end());
  std::string out;
  for (const auto& [token, v] : sorted) {
    out += token;
    out += '\t';
    out += format_valence(v);
    out += '\n';
  }
  return out;
}

double ValenceLexicon::valence_of(std::string_view token) const {
  auto it = entries.find(std::string(token));
  return it == entries.end() ? 0.0 : it->second;
}

bool ValenceLexicon::contains(std::string_view token) const {
  return entries.find(std::string(token)) != entries.end();
}

EmotionLexicon EmotionLexicon::parse(std::string_view tsv) {
  EmotionLexicon lexicon;
  lexicon.priority.assign(kEmotionLabels.begin(), kEmotionLabels.end());
  for (const TsvRow& row : split_tsv(tsv, /*want_value=*/true)) {
    check_token(row.token, row.line_no);
    const std::string label(row.value);
    if (!is_known_label(label)) {
      throw LexiconError("line " + std::to_string(row.line_no) +
                         ": unknown label \"" + label + "\"");
    }
    if (label == kNeutralLabel) {
      throw LexiconError("line " + std::to_string(row.line_no) +
                         ": label \"neutral\" cannot be mapped to a token");
    }
    const std::string key = normalize_nfc(row.token);
    auto& labels = lexicon.entries[key];
    if (!labels.insert(label).second) {
      lexicon.warnings.push_back("line " + std::to_string(row.line_no) +
                                 ": duplicate row for \"" + key + "\" / " +
                                 label);
    }
  }
  return lexicon;
}

EmotionLexicon EmotionLexicon::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    throw LexiconError(e.what());
  }
  require_valid_utf8(text);
  try {
    return parse(text);
  } catch (const LexiconError& e) {
    throw LexiconError(path.string() + ": " + e.what());
  }
}

std::string EmotionLexicon::to_tsv() const {
  std::vector<std::string> tokens;
  tokens.reserve(entries.size());
  for (const auto& [token, labels] : entries) tokens.push_back(token);
  std::sort(tokens.begin(), tokens.end());
  std::string out;
  for (const std::string& token : tokens) {
    for (const std::string& label : entries.at(token)) {
      out += token;
      out += '\t';
      out += label;
      out += '\n';
    }
  }
  return out;
}

std::size_t EmotionLexicon::priority_rank(std::string_view label) const {
  for (std::size_t i = 0; i < priority.size(); ++i) {
    if (priority[i] == label) return i;
  }
  return priority.size();
}

ThemeLexicon ThemeLexicon::parse(std::string_view text) {
  ThemeLexicon lexicon;
  std::set<std::string> seen;  // folded forms, for duplicate detection
  for (const TsvRow& row : split_tsv(text, /*want_value=*/false)) {
    std::string_view pattern = row.token;
    // Trim surrounding spaces; patterns may contain internal spaces.
    while (!pattern.empty() && pattern.front() == ' ') pattern.remove_prefix(1);
    while (!pattern.empty() && pattern.back() == ' ') pattern.remove_suffix(1);
    if (pattern.empty()) continue;
    const std::size_t star = pattern.find('*');
    if (star != std::string_view::npos && star != pattern.size() - 1) {
      throw LexiconError("line " + std::to_string(row.line_no) +
                         ": '*' is only allowed at the end of a pattern");
    }
    if (pattern == "*") {
      throw LexiconError("line " + std::to_string(row.line_no) +
                         ": pattern has no literal text");
    }
    const std::string display = normalize_nfc(pattern);
    if (!seen.insert(fold_for_match(display)).second) {
      throw LexiconError("line " + std::to_string(row.line_no) +
                         ": duplicate pattern \"" + display + "\"");
    }
    lexicon.patterns.push_back(display);
  }
  if (lexicon.patterns.empty()) {
    throw LexiconError("empty theme lexicon");
  }
  return lexicon;
}

ThemeLexicon ThemeLexicon::load(const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    throw LexiconError(e.what());
  }
  require_valid_utf8(text);
  try {
    return parse(text);
  } catch (const LexiconError& e) {
    throw LexiconError(path.string() + ": " + e.what());
  }
}

std::string ThemeLexicon::to_text() const {
  std::string out;
  for (const std::string& p : patterns) {
    out += p;
    out += '\n';
  }
  return out;
}

std::string_view pronoun_class_name(PronounClass cls) {
  switch (cls) {
    case PronounClass::kFirstPerson:
      return "first_person";
    case PronounClass::kThirdMasculine:
      return "third_masculine";
    case PronounClass::kThirdFeminine:
      return "third_feminine";
  }
  return "";
}

std::optional<PronounClass> pronoun_class_from_name(std::string_view name) {
  if (name == "first_person") return PronounClass::kFirstPerson;
  if (name == "third_masculine") return PronounClass::kThirdMasculine;
  if (name == "third_feminine") return PronounClass::kThirdFeminine;
  return std::nullopt;
}

CharacterGazetteer CharacterGazetteer::parse(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw LexiconError(std::string("gazetteer: ") + e.what());
  }
  if (!doc.is_object()) {
    throw LexiconError("gazetteer: top-level value must be an object");
  }

  CharacterGazetteer gaz;
  const json& characters =
      expect(doc, "characters", json::value_t::object, "gazetteer");
  std::map<std::string, std::string> alias_owner;
  for (const auto& [name, aliases] : characters.items()) {
    if (name.empty()) {
      throw LexiconError("characters: empty character name");
    }
    if (!aliases.is_array()) {
      throw LexiconError("characters." + name + ": expected an alias array");
    }
    const std::string canonical = normalize_nfc(name);
    std::vector<std::string> list;
    for (std::size_t i = 0; i < aliases.size(); ++i) {
      if (!aliases[i].is_string()) {
        throw LexiconError("characters." + name + "[" + std::to_string(i) +
                           "]: alias must be a string");
      }
      const std::string alias =
          normalize_nfc(aliases[i].get<std::string>());
      if (alias.empty()) {
        throw LexiconError("characters." + name + "[" + std::to_string(i) +
                           "]: empty alias");
      }
      auto [it, inserted] = alias_owner.emplace(alias, canonical);
      if (!inserted) {
        throw LexiconError("alias \"" + alias + "\" is claimed by both \"" +
                           it->second + "\" and \"" + canonical + "\"");
      }
      list.push_back(alias);
    }
    if (!gaz.characters.emplace(canonical, std::move(list)).second) {
      throw LexiconError("characters: duplicate character \"" + canonical +
                         "\"");
    }
  }

  if (auto it = doc.find("narrator"); it != doc.end() && !it->is_null()) {
    if (!it->is_string()) {
      throw LexiconError("narrator: must be a string");
    }
    const std::string narrator = normalize_nfc(it->get<std::string>());
    if (gaz.characters.find(narrator) == gaz.characters.end()) {
      throw LexiconError("narrator \"" + narrator +
                         "\" is not a defined character");
    }
    gaz.narrator = narrator;
  }

  if (auto it = doc.find("pronoun_map"); it != doc.end() && !it->is_null()) {
    if (!it->is_object()) {
      throw LexiconError("pronoun_map: must be an object");
    }
    for (const auto& [key, value] : it->items()) {
      const auto cls = pronoun_class_from_name(key);
      if (!cls) {
        throw LexiconError("pronoun_map." + key + ": unknown pronoun class");
      }
      if (!value.is_string()) {
        throw LexiconError("pronoun_map." + key + ": must be a string");
      }
      const std::string target = normalize_nfc(value.get<std::string>());
      if (gaz.characters.find(target) == gaz.characters.end()) {
        throw LexiconError("pronoun_map." + key + ": \"" + target +
                           "\" is not a defined character");
      }
      gaz.pronoun_map[*cls] = target;
    }
  }

  // The narrator is the first person speaker unless the file says otherwise.
  if (gaz.narrator &&
      gaz.pronoun_map.find(PronounClass::kFirstPerson) ==
          gaz.pronoun_map.end()) {
    gaz.pronoun_map[PronounClass::kFirstPerson] = *gaz.narrator;
  }

  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (key != "characters" && key != "narrator" && key != "pronoun_map") {
      throw LexiconError("gazetteer." + key + ": unknown key");
    }
  }
  return gaz;
}

CharacterGazetteer CharacterGazetteer::load(
    const std::filesystem::path& path) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const InputError& e) {
    throw LexiconError(e.what());
  }
  require_valid_utf8(text);
  try {
    return parse(text);
  } catch (const LexiconError& e) {
    throw LexiconError(path.string() + ": " + e.what());
  }
}

std::string CharacterGazetteer::to_json() const {
  json characters_obj = json::object();
  for (const auto& [name, aliases] : characters) {
    characters_obj[name] = aliases;
  }
  json doc;
  doc["characters"] = characters_obj;
  if (narrator) doc["narrator"] = *narrator;
  if (!pronoun_map.empty()) {
    json pm = json::object();
    for (const auto& [cls, target] : pronoun_map) {
      pm[std::string(pronoun_class_name(cls))] = target;
    }
    doc["pronoun_map"] = pm;
  }
  return doc.dump(2) + "\n";
}

void CharacterGazetteer::set_narrator(const std::string& name) {
  if (characters.find(name) == characters.end()) {
    throw LexiconError("narrator \"" + name + "\" is not a defined character");
  }
  narrator = name;
  pronoun_map[PronounClass::kFirstPerson] = name;
}

const ValenceLexicon& default_valence_lexicon() {
  static const ValenceLexicon lexicon =
      ValenceLexicon::parse(defaults::kValenceTsv);
  return lexicon;
}

const EmotionLexicon& default_emotion_lexicon() {
  static const EmotionLexicon lexicon =
      EmotionLexicon::parse(defaults::kEmotionTsv);
  return lexicon;
}

const ThemeLexicon& default_theme_lexicon() {
  static const ThemeLexicon lexicon =
      ThemeLexicon::parse(defaults::kThemeText);
  return lexicon;
}

const CharacterGazetteer& default_gazetteer() {
  static const CharacterGazetteer gaz =
      CharacterGazetteer::parse(defaults::kGazetteerJson);
  return gaz;
}

}  // namespace litscan
