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

#include "litscan/corpus.hpp"

#include <fstream>
#include <sstream>

#include "litscan/errors.hpp"
#include "litscan/textutil.hpp"

namespace litscan {

namespace {

bool is_collapsible_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// A line is blank when it has no characters outside spaces and tabs.
bool is_blank_line(std::string_view line) {
  for (char c : line) {
    if (c != ' ' && c != '\t' && c != '\f' && c != '\v' && c != '\r') {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string clean_paragraph(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (char c : text) {
    if (is_collapsible_ws(c)) {
      if (!out.empty()) pending_space = true;
      continue;
    }
    if (pending_space) {
      out.push_back(' ');
      pending_space = false;
    }
    out.push_back(c);
  }
  return out;
}

std::vector<Paragraph> segment_text(std::string_view raw,
                                    const SegmentationConfig& cfg) {
  require_valid_utf8(raw);
  const std::string normalized = normalize_nfc(normalize_newlines(raw));

  std::vector<Paragraph> paragraphs;
  // Walk lines, accumulating blocks of consecutive non-blank lines. With
  // kSingleNewline every non-blank line closes its own block.
  std::size_t line_start = 0;      // byte offset of current line
  std::size_t cp_offset = 0;       // code points consumed so far
  std::string block;               // raw text of the open block
  std::size_t block_cp_offset = 0; // code-point offset of block start
  bool block_open = false;

  auto flush = [&]() {
    if (!block_open) return;
    std::string cleaned = clean_paragraph(block);
    if (!cleaned.empty()) {
      paragraphs.push_back(
          Paragraph{paragraphs.size(), std::move(cleaned), block_cp_offset});
    }
    block.clear();
    block_open = false;
  };

  const std::size_t n = normalized.size();
  while (line_start <= n) {
    std::size_t line_end = normalized.find('\n', line_start);
    if (line_end == std::string::npos) line_end = n;
    const std::string_view line(normalized.data() + line_start,
                                line_end - line_start);
    if (is_blank_line(line)) {
      flush();
    } else {
      if (!block_open) {
        block_open = true;
        // Offset of the first non-whitespace character on the line.
        std::size_t lead = 0;
        std::size_t lead_cp = 0;
        while (lead < line.size() &&
               (line[lead] == ' ' || line[lead] == '\t')) {
          ++lead;
          ++lead_cp;
        }
        block_cp_offset = cp_offset + lead_cp;
      } else {
        block.push_back('\n');
      }
      block.append(line);
      if (cfg.delimiter == ParagraphDelimiter::kSingleNewline) flush();
    }
    cp_offset += count_code_points(line) + 1;  // +1 for the newline
    if (line_end == n) break;
    line_start = line_end + 1;
  }
  flush();
  return paragraphs;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError("cannot open file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) {
    throw InputError("error while reading file: " + path.string());
  }
  return buffer.str();
}

}  // namespace litscan
