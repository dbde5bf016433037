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

#include "lrlprep/unicode.h"

#include <unicode/locid.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include <cstdint>

#include "lrlprep/error.h"

namespace lrlprep::unicode {
namespace {

const icu::Normalizer2& nfc_instance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || nfc == nullptr) {
    throw Error(std::string("ICU NFC normalizer unavailable: ") +
                u_errorName(status));
  }
  return *nfc;
}

// Walks `bytes`, calling fn(cp, start, end) per codepoint.
template <typename Fn>
void for_each_codepoint(std::string_view bytes, std::size_t base_offset,
                        Fn&& fn) {
  const auto* s = reinterpret_cast<const uint8_t*>(bytes.data());
  const auto length = static_cast<int32_t>(bytes.size());
  int32_t i = 0;
  while (i < length) {
    const int32_t start = i;
    UChar32 c;
    U8_NEXT(s, i, length, c);
    if (c < 0) throw EncodingError(base_offset + static_cast<std::size_t>(start));
    fn(static_cast<char32_t>(c), static_cast<std::size_t>(start),
       static_cast<std::size_t>(i));
  }
}

}  // namespace

void validate_utf8(std::string_view bytes, std::size_t base_offset) {
  for_each_codepoint(bytes, base_offset,
                     [](char32_t, std::size_t, std::size_t) {});
}

std::u32string decode(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  for_each_codepoint(utf8, 0, [&](char32_t c, std::size_t, std::size_t) {
    out.push_back(c);
  });
  return out;
}

void append(std::string& out, char32_t cp) {
  uint8_t buf[U8_MAX_LENGTH];
  int32_t n = 0;
  UBool error = false;
  U8_APPEND(buf, n, U8_MAX_LENGTH, static_cast<UChar32>(cp), error);
  if (error) {
    throw ValidationError("not a Unicode scalar value: " +
                          std::to_string(static_cast<uint32_t>(cp)));
  }
  out.append(reinterpret_cast<const char*>(buf), static_cast<std::size_t>(n));
}

std::string encode(std::u32string_view codepoints) {
  std::string out;
  out.reserve(codepoints.size() * 3);
  for (char32_t c : codepoints) append(out, c);
  return out;
}

std::string to_nfc(std::string_view utf8) {
  validate_utf8(utf8);
  const auto& nfc = nfc_instance();
  const icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UErrorCode status = U_ZERO_ERROR;
  if (nfc.isNormalized(src, status) && U_SUCCESS(status)) {
    return std::string(utf8);
  }
  status = U_ZERO_ERROR;
  const icu::UnicodeString normalized = nfc.normalize(src, status);
  if (U_FAILURE(status)) {
    throw Error(std::string("NFC normalization failed: ") +
                u_errorName(status));
  }
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

bool is_nfc(std::string_view utf8) {
  validate_utf8(utf8);
  const icu::UnicodeString src = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  UErrorCode status = U_ZERO_ERROR;
  const bool ok = nfc_instance().isNormalized(src, status);
  return U_SUCCESS(status) && ok;
}

bool is_whitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp));
}

bool is_assigned(char32_t cp) {
  return u_charType(static_cast<UChar32>(cp)) != U_UNASSIGNED;
}

bool is_word_punctuation(char32_t cp) {
  if (cp == 0x0964 || cp == 0x0965) return true;
  return (cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
         (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E);
}

std::string_view rstrip(std::string_view utf8) {
  std::size_t keep = 0;
  for_each_codepoint(utf8, 0, [&](char32_t c, std::size_t, std::size_t end) {
    if (!is_whitespace(c)) keep = end;
  });
  return utf8.substr(0, keep);
}

std::string to_lower(std::string_view utf8) {
  validate_utf8(utf8);
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  s.toLower(icu::Locale::getRoot());
  std::string out;
  s.toUTF8String(out);
  return out;
}

std::size_t codepoint_count(std::string_view utf8) {
  std::size_t n = 0;
  for_each_codepoint(utf8, 0,
                     [&](char32_t, std::size_t, std::size_t) { ++n; });
  return n;
}

}  // namespace lrlprep::unicode
