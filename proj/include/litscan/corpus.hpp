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
// Turns raw narrative text into the ordered sequence of cleaned paragraphs
// that every analyzer consumes. Paragraphs are the unit of analysis.

#ifndef LITSCAN_CORPUS_HPP_
#define LITSCAN_CORPUS_HPP_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace litscan {

// One cleaned text unit with a stable ordinal position.
//
// `source_offset` is the code-point offset of the paragraph's first
// character in the normalized source (newlines folded to "\n", NFC
// applied); it increases strictly with `index`.
struct Paragraph {
  std::size_t index = 0;
  std::string text;
  std::size_t source_offset = 0;
};

enum class ParagraphDelimiter {
  kBlankLines,     // one or more blank lines separate paragraphs (default)
  kSingleNewline,  // every non-blank line is its own paragraph
};

struct SegmentationConfig {
  ParagraphDelimiter delimiter = ParagraphDelimiter::kBlankLines;
};

// Collapses runs of spaces, tabs and newlines to one space and trims the
// ends. No other characters are altered. Total and idempotent.
std::string clean_paragraph(std::string_view text);

// Splits raw text into cleaned paragraphs. Validates UTF-8 (throws
// InputError naming the byte offset of the first invalid byte), folds
// newlines to "\n", applies NFC once, then segments per `cfg`. No
// returned paragraph is whitespace-only; indices are contiguous from 0.
std::vector<Paragraph> segment_text(std::string_view raw,
                                    const SegmentationConfig& cfg = {});

// Reads a whole file as bytes. Throws InputError if unreadable.
std::string read_file(const std::filesystem::path& path);

}  // namespace litscan

#endif  // LITSCAN_CORPUS_HPP_
