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

#ifndef LRLPREP_SCRIPT_H_
#define LRLPREP_SCRIPT_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace lrlprep {

enum class Script { kDevanagari, kBengali, kGurmukhi, kGujarati, kOriya };

inline constexpr std::array<Script, 5> kAllScripts = {
    Script::kDevanagari, Script::kBengali, Script::kGurmukhi,
    Script::kGujarati, Script::kOriya};

// A 128-codepoint Brahmic Unicode block. The five supported blocks share a
// parallel layout, so position within the block identifies the letter.
struct ScriptBlock {
  Script script;
  char32_t base;
  char32_t length = 0x80;

  bool contains(char32_t cp) const { return cp >= base && cp < base + length; }
  friend bool operator==(const ScriptBlock&, const ScriptBlock&) = default;
};

ScriptBlock block_of(Script script);

// Block whose range contains `cp`, if any.
std::optional<Script> script_of_codepoint(char32_t cp);

// Canonical lowercase name: devanagari, bengali, gurmukhi, gujarati, oriya.
std::string_view script_name(Script script);

// Accepts canonical names plus the aliases "odia", "assamese",
// "bengali-assamese" and "bangla". Case-insensitive. Throws ValidationError.
Script parse_script(std::string_view name);

}  // namespace lrlprep

#endif  // LRLPREP_SCRIPT_H_
