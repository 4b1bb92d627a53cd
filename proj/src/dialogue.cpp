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

#include "litscan/dialogue.hpp"

#include <cctype>

#include "litscan/errors.hpp"
#include "litscan/textutil.hpp"

namespace litscan {

namespace {

bool starts_with_at(std::string_view text, std::size_t pos,
                    const std::string& what) {
  return !what.empty() && text.compare(pos, what.size(), what) == 0;
}

bool span_has_content(std::string_view text, const QuoteSpan& span) {
  for (std::size_t i = span.begin; i < span.end; ++i) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c >= 0x80 || !std::isspace(c)) return true;
  }
  return false;
}

}  // namespace

const std::vector<QuoteStyle>& default_quote_styles() {
  static const std::vector<QuoteStyle> styles = {
      {"\"", "\""},
      {"“", "”"},  // curly double quotes
      {"«", "»"},  // guillemets
  };
  return styles;
}

DialogueInfo classify_dialogue(std::string_view text,
                               const std::vector<QuoteStyle>& styles) {
  DialogueInfo info;
  std::size_t pos = 0;
  int open_style = -1;
  std::size_t content_start = 0;

  while (pos < text.size()) {
    if (open_style >= 0) {
      const QuoteStyle& style = styles[static_cast<std::size_t>(open_style)];
      if (starts_with_at(text, pos, style.close)) {
        info.spans.push_back({content_start, pos});
        pos += style.close.size();
        open_style = -1;
        continue;
      }
    } else {
      int matched = -1;
      bool stray_closer = false;
      for (std::size_t s = 0; s < styles.size(); ++s) {
        if (starts_with_at(text, pos, styles[s].open)) {
          matched = static_cast<int>(s);
          break;
        }
        // A closer with nothing open is noise, not an opener.
        if (styles[s].close != styles[s].open &&
            starts_with_at(text, pos, styles[s].close)) {
          stray_closer = true;
          break;
        }
      }
      if (matched >= 0) {
        open_style = matched;
        pos += styles[static_cast<std::size_t>(matched)].open.size();
        content_start = pos;
        continue;
      }
      if (stray_closer) {
        info.unbalanced = true;
      }
    }
    pos += decode_cp(text, pos).len;
  }

  if (open_style >= 0) {
    info.spans.push_back({content_start, text.size()});
    info.unbalanced = true;
  }

  for (const QuoteSpan& span : info.spans) {
    if (span_has_content(text, span)) {
      info.is_dialogue = true;
      break;
    }
  }
  return info;
}

namespace {

// Code points of the quote marks classify_dialogue consumed around the
// given spans. The opener sits immediately before the content; the closer,
// when paired, starts exactly at span.end.
std::size_t consumed_delimiter_cp(std::string_view text,
                                  const std::vector<QuoteSpan>& spans,
                                  const std::vector<QuoteStyle>& styles) {
  std::size_t count = 0;
  for (const QuoteSpan& span : spans) {
    const QuoteStyle* style = nullptr;
    for (const QuoteStyle& s : styles) {
      if (span.begin >= s.open.size() &&
          text.compare(span.begin - s.open.size(), s.open.size(), s.open) ==
              0) {
        style = &s;
        break;
      }
    }
    if (style == nullptr) continue;
    count += count_code_points(style->open);
    if (span.end < text.size() &&
        text.compare(span.end, style->close.size(), style->close) == 0) {
      count += count_code_points(style->close);
    }
  }
  return count;
}

}  // namespace

std::pair<double, double> dialogue_proportion(
    const std::vector<Paragraph>& paragraphs,
    const std::vector<DialogueInfo>& infos, DialogueWeighting weighting,
    const std::vector<QuoteStyle>& styles) {
  if (paragraphs.empty() || paragraphs.size() != infos.size()) {
    throw InputError("dialogue proportion is undefined for an empty corpus");
  }
  double dialogue = 0.0;
  double total = 0.0;
  if (weighting == DialogueWeighting::kParagraphs) {
    for (const DialogueInfo& info : infos) {
      if (info.is_dialogue) dialogue += 1.0;
    }
    total = static_cast<double>(paragraphs.size());
  } else {
    for (std::size_t i = 0; i < paragraphs.size(); ++i) {
      const std::string& text = paragraphs[i].text;
      std::size_t quoted_cp = 0;
      for (const QuoteSpan& span : infos[i].spans) {
        quoted_cp += count_code_points(
            std::string_view(text).substr(span.begin, span.end - span.begin));
      }
      const std::size_t prose_cp =
          count_code_points(text) -
          consumed_delimiter_cp(text, infos[i].spans, styles);
      dialogue += static_cast<double>(quoted_cp);
      total += static_cast<double>(prose_cp);
    }
    if (total <= 0.0) {
      throw InputError(
          "dialogue proportion by characters is undefined: corpus has no "
          "prose mass");
    }
  }
  const double share = dialogue / total;
  return {share, 1.0 - share};
}

}  // namespace litscan
