// Copyright 2026 The lrlprep Authors
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

// Thin UTF-8 / Unicode helpers over ICU.

#ifndef LRLPREP_UNICODE_H_
#define LRLPREP_UNICODE_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace lrlprep::unicode {

// Throws EncodingError naming the first ill-formed byte. Surrogates and
// overlong forms are ill-formed.
void validate_utf8(std::string_view bytes, std::size_t base_offset = 0);

// Decodes well-formed UTF-8. Throws EncodingError otherwise.
std::u32string decode(std::string_view utf8);

std::string encode(std::u32string_view codepoints);
void append(std::string& out, char32_t cp);

std::string to_nfc(std::string_view utf8);
bool is_nfc(std::string_view utf8);

bool is_whitespace(char32_t cp);

// True when the codepoint has a general category other than Cn.
bool is_assigned(char32_t cp);

// ASCII punctuation plus DEVANAGARI DANDA (U+0964) and DOUBLE DANDA (U+0965).
bool is_word_punctuation(char32_t cp);

// Removes trailing Unicode whitespace.
std::string_view rstrip(std::string_view utf8);

// Full Unicode lowercasing (root locale).
std::string to_lower(std::string_view utf8);

std::size_t codepoint_count(std::string_view utf8);

}  // namespace lrlprep::unicode

#endif  // LRLPREP_UNICODE_H_
