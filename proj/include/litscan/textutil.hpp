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
// Shared low-level text machinery: UTF-8 decoding and validation, NFC
// normalization, the word/boundary model used by every matcher, and the
// case/apostrophe folding applied before case-insensitive matching.

#ifndef LITSCAN_TEXTUTIL_HPP_
#define LITSCAN_TEXTUTIL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace litscan {

// Byte offset of the first invalid UTF-8 byte, or nullopt if valid.
// Strict: rejects overlong encodings, surrogates and values > U+10FFFF.
std::optional<std::size_t> find_invalid_utf8(std::string_view text);

// Throws InputError naming the byte offset if the text is not valid UTF-8.
void require_valid_utf8(std::string_view text);

// Decodes the code point starting at byte `pos`. Input must be valid UTF-8.
struct DecodedCp {
  char32_t cp;
  std::size_t len;  // bytes consumed
};
DecodedCp decode_cp(std::string_view text, std::size_t pos);

// Decodes the code point ending just before byte `pos` (pos > 0).
DecodedCp decode_cp_before(std::string_view text, std::size_t pos);

// Number of code points in valid UTF-8 text.
std::size_t count_code_points(std::string_view text);

// Canonical composition (NFC) of valid UTF-8 text.
std::string normalize_nfc(std::string_view text);

// "\r\n" and lone "\r" become "\n".
std::string normalize_newlines(std::string_view text);

// Word model. A code point is a word constituent if it is an ASCII
// alphanumeric or a non-ASCII letter-like code point; general punctuation
// (curly quotes, dashes, guillemets, ellipses) is not. Apostrophes are not
// word constituents, so boundaries exist on both sides of "'"; the word
// scanner below joins internal apostrophes so contractions stay whole.
bool is_word_cp(char32_t cp);

// True if `cp` is ASCII "'" or U+2019 right single quotation mark.
bool is_apostrophe_cp(char32_t cp);

// True if no word constituent ends immediately before byte `pos`.
bool boundary_before(std::string_view text, std::size_t pos);
// True if no word constituent starts at byte `pos`.
bool boundary_after(std::string_view text, std::size_t pos);

// Half-open byte range of one scanned word.
struct WordSpan {
  std::size_t begin;
  std::size_t end;
};

// Scans the next word at or after `pos`. Words are maximal runs of word
// constituents; a single apostrophe flanked by word constituents is kept
// inside the word ("can't" is one word). Returns nullopt at end of text.
std::optional<WordSpan> next_word(std::string_view text, std::size_t pos);

// All words of `text` in order.
std::vector<WordSpan> scan_words(std::string_view text);

// Lowercases ASCII letters and folds U+2019 to "'". Used to build the
// carrier for case-insensitive matching; non-ASCII letters pass through.
std::string fold_for_match(std::string_view text);

// fold_for_match plus a byte map from folded positions back to the
// original text, for matchers that report offsets.
struct FoldedText {
  std::string text;
  std::vector<std::size_t> offsets;  // offsets[i] = original byte offset
};
FoldedText fold_with_offsets(std::string_view text);

// ASCII-only case helpers.
std::string to_lower_ascii(std::string_view text);
bool equals_fold(std::string_view a, std::string_view b);

}  // namespace litscan

#endif  // LITSCAN_TEXTUTIL_HPP_
