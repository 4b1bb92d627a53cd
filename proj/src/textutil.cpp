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

#include "litscan/textutil.hpp"

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>

#include <cctype>

#include "litscan/errors.hpp"

namespace litscan {

namespace {

inline unsigned char ub(char c) { return static_cast<unsigned char>(c); }

}  // namespace

std::optional<std::size_t> find_invalid_utf8(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char b0 = ub(text[i]);
    if (b0 < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char bk = ub(text[i + k]);
      if ((bk & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (bk & 0x3F);
    }
    // Overlong encodings, surrogates, out-of-range values.
    if (len == 2 && cp < 0x80) return i;
    if (len == 3 && cp < 0x800) return i;
    if (len == 4 && cp < 0x10000) return i;
    if (cp >= 0xD800 && cp <= 0xDFFF) return i;
    if (cp > 0x10FFFF) return i;
    i += len;
  }
  return std::nullopt;
}

void require_valid_utf8(std::string_view text) {
  if (auto bad = find_invalid_utf8(text)) {
    throw InputError("invalid UTF-8 byte at offset " + std::to_string(*bad));
  }
}

DecodedCp decode_cp(std::string_view text, std::size_t pos) {
  const unsigned char b0 = ub(text[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else {
    len = 4;
    cp = b0 & 0x07;
  }
  for (std::size_t k = 1; k < len; ++k) {
    cp = (cp << 6) | (ub(text[pos + k]) & 0x3F);
  }
  return {cp, len};
}

DecodedCp decode_cp_before(std::string_view text, std::size_t pos) {
  std::size_t start = pos - 1;
  while (start > 0 && (ub(text[start]) & 0xC0) == 0x80) --start;
  return decode_cp(text, start);
}

std::size_t count_code_points(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((ub(text[i]) & 0xC0) != 0x80) ++count;
  }
  return count;
}

std::string normalize_nfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr) {
    throw InputError("unicode normalizer unavailable");
  }
  icu::UnicodeString input = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString normalized = nfc->normalize(input, status);
  if (U_FAILURE(status)) {
    throw InputError("unicode normalization failed");
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::string normalize_newlines(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

bool is_word_cp(char32_t cp) {
  if (cp < 0x80) {
    return std::isalnum(static_cast<unsigned char>(cp)) != 0;
  }
  // Latin-1 punctuation and symbols, including guillemets.
  if (cp >= 0xA0 && cp <= 0xBF) return false;
  if (cp == 0xD7 || cp == 0xF7) return false;  // multiplication/division sign
  // General punctuation (curly quotes, dashes, ellipsis) and supplements.
  if (cp >= 0x2000 && cp <= 0x206F) return false;
  if (cp >= 0x2E00 && cp <= 0x2E7F) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  return true;
}

bool is_apostrophe_cp(char32_t cp) { return cp == U'\'' || cp == 0x2019; }

bool boundary_before(std::string_view text, std::size_t pos) {
  if (pos == 0) return true;
  return !is_word_cp(decode_cp_before(text, pos).cp);
}

bool boundary_after(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return true;
  return !is_word_cp(decode_cp(text, pos).cp);
}

std::optional<WordSpan> next_word(std::string_view text, std::size_t pos) {
  const std::size_t n = text.size();
  std::size_t i = pos;
  while (i < n) {
    const auto [cp, len] = decode_cp(text, i);
    if (is_word_cp(cp)) break;
    i += len;
  }
  if (i >= n) return std::nullopt;
  const std::size_t begin = i;
  while (i < n) {
    const auto [cp, len] = decode_cp(text, i);
    if (is_word_cp(cp)) {
      i += len;
      continue;
    }
    // Keep a single apostrophe when flanked by word constituents.
    if (is_apostrophe_cp(cp) && i + len < n) {
      const auto next = decode_cp(text, i + len);
      if (is_word_cp(next.cp)) {
        i += len;
        continue;
      }
    }
    break;
  }
  return WordSpan{begin, i};
}

std::vector<WordSpan> scan_words(std::string_view text) {
  std::vector<WordSpan> words;
  std::size_t pos = 0;
  while (auto w = next_word(text, pos)) {
    words.push_back(*w);
    pos = w->end;
  }
  return words;
}

std::string fold_for_match(std::string_view text) {
  return fold_with_offsets(text).text;
}

FoldedText fold_with_offsets(std::string_view text) {
  FoldedText out;
  out.text.reserve(text.size());
  out.offsets.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const auto [cp, len] = decode_cp(text, i);
    if (cp == 0x2019) {
      out.text.push_back('\'');
      out.offsets.push_back(i);
    } else if (cp < 0x80) {
      out.text.push_back(
          static_cast<char>(std::tolower(static_cast<unsigned char>(cp))));
      out.offsets.push_back(i);
    } else {
      for (std::size_t k = 0; k < len; ++k) {
        out.text.push_back(text[i + k]);
        out.offsets.push_back(i + k);
      }
    }
    i += len;
  }
  return out;
}

std::string to_lower_ascii(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(ub(c)));
  return out;
}

bool equals_fold(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(ub(a[i])) != std::tolower(ub(b[i]))) return false;
  }
  return true;
}

}  // namespace litscan
