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

#include "lrlprep/script_translit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <vector>

#include "lrlprep/error.h"
#include "lrlprep/unicode.h"

namespace lrlprep {
namespace {

constexpr char32_t kReplacementCharacter = 0xFFFD;

std::string hex(char32_t cp) {
  std::ostringstream os;
  os << "U+" << std::uppercase << std::hex;
  os.width(4);
  os.fill('0');
  os << static_cast<std::uint32_t>(cp);
  return os.str();
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::optional<char32_t> parse_hex_codepoint(std::string_view token) {
  if (token.starts_with("U+") || token.starts_with("u+") ||
      token.starts_with("0x") || token.starts_with("0X")) {
    token.remove_prefix(2);
  }
  if (token.empty() || token.size() > 6) return std::nullopt;
  std::uint32_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value, 16);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    return std::nullopt;
  }
  if (value > 0x10FFFF || (value >= 0xD800 && value <= 0xDFFF)) {
    return std::nullopt;
  }
  return static_cast<char32_t>(value);
}

}  // namespace

ScriptBlock block_of(Script script) {
  switch (script) {
    case Script::kDevanagari:
      return {script, 0x0900};
    case Script::kBengali:
      return {script, 0x0980};
    case Script::kGurmukhi:
      return {script, 0x0A00};
    case Script::kGujarati:
      return {script, 0x0A80};
    case Script::kOriya:
      return {script, 0x0B00};
  }
  throw PreconditionError("unknown script");
}

std::optional<Script> script_of_codepoint(char32_t cp) {
  if (cp < 0x0900 || cp >= 0x0B80) return std::nullopt;
  for (Script s : kAllScripts) {
    if (block_of(s).contains(cp)) return s;
  }
  return std::nullopt;
}

std::string_view script_name(Script script) {
  switch (script) {
    case Script::kDevanagari:
      return "devanagari";
    case Script::kBengali:
      return "bengali";
    case Script::kGurmukhi:
      return "gurmukhi";
    case Script::kGujarati:
      return "gujarati";
    case Script::kOriya:
      return "oriya";
  }
  return "unknown";
}

Script parse_script(std::string_view name) {
  const std::string n = lower_ascii(name);
  if (n == "devanagari") return Script::kDevanagari;
  if (n == "bengali" || n == "assamese" || n == "bengali-assamese" ||
      n == "bangla") {
    return Script::kBengali;
  }
  if (n == "gurmukhi") return Script::kGurmukhi;
  if (n == "gujarati") return Script::kGujarati;
  if (n == "oriya" || n == "odia") return Script::kOriya;
  throw ValidationError(
      "unknown script '" + std::string(name) +
      "' (expected devanagari, bengali, gurmukhi, gujarati or oriya)");
}

PassthroughPolicy parse_passthrough_policy(std::string_view name) {
  const std::string n = lower_ascii(name);
  if (n == "copy") return PassthroughPolicy::kCopy;
  if (n == "drop") return PassthroughPolicy::kDrop;
  if (n == "mark") return PassthroughPolicy::kMark;
  throw ValidationError("unknown passthrough policy '" + std::string(name) +
                        "' (expected copy, drop or mark)");
}

TransliterationReport& TransliterationReport::operator+=(
    const TransliterationReport& other) {
  mapped_count += other.mapped_count;
  exception_count += other.exception_count;
  passthrough_count += other.passthrough_count;
  passthrough_codepoints.insert(other.passthrough_codepoints.begin(),
                                other.passthrough_codepoints.end());
  return *this;
}

TransliterationTable::TransliterationTable(
    ScriptBlock source, ScriptBlock target,
    std::map<char32_t, std::u32string> exceptions, PassthroughPolicy policy)
    : source_(source),
      target_(target),
      exceptions_(std::move(exceptions)),
      policy_(policy) {
  if (source_ == target_) {
    throw PreconditionError("source and target script are both " +
                            std::string(script_name(source_.script)));
  }
  for (const auto& [key, value] : exceptions_) {
    if (!source_.contains(key)) {
      throw ValidationError("exception key " + hex(key) + " lies outside the " +
                            std::string(script_name(source_.script)) +
                            " block");
    }
  }
}

void TransliterationTable::apply(char32_t cp, std::u32string& out,
                                 TransliterationReport& report) const {
  if (!source_.contains(cp)) {
    out.push_back(cp);
    return;
  }
  if (auto it = exceptions_.find(cp); it != exceptions_.end()) {
    out.append(it->second);
    ++report.exception_count;
    return;
  }
  const char32_t image = offset_image(cp);
  if (unicode::is_assigned(image)) {
    out.push_back(image);
    ++report.mapped_count;
    return;
  }
  ++report.passthrough_count;
  report.passthrough_codepoints.insert(cp);
  switch (policy_) {
    case PassthroughPolicy::kCopy:
      out.push_back(cp);
      break;
    case PassthroughPolicy::kDrop:
      break;
    case PassthroughPolicy::kMark:
      out.push_back(kReplacementCharacter);
      break;
  }
}

std::map<char32_t, std::u32string> parse_exception_rules(std::istream& in) {
  std::map<char32_t, std::u32string> rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;

    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw LoadError("expected '<hex codepoint>\\t<hex codepoints>'", line_no);
    }
    const auto key = parse_hex_codepoint(trim(std::string_view(line).substr(0, tab)));
    if (!key) throw LoadError("bad source codepoint", line_no);

    std::u32string value;
    std::istringstream targets(line.substr(tab + 1));
    std::string token;
    while (targets >> token) {
      const auto cp = parse_hex_codepoint(token);
      if (!cp) throw LoadError("bad target codepoint '" + token + "'", line_no);
      value.push_back(*cp);
    }
    if (!rules.emplace(*key, std::move(value)).second) {
      throw LoadError("duplicate rule for " + hex(*key), line_no);
    }
  }
  return rules;
}

TransliterationTable build_table(Script source, Script target,
                                 std::istream* exception_file,
                                 PassthroughPolicy policy) {
  if (source == target) {
    throw PreconditionError("source and target script are both " +
                            std::string(script_name(source)));
  }
  std::map<char32_t, std::u32string> exceptions;
  if (exception_file != nullptr) {
    exceptions = parse_exception_rules(*exception_file);
  }
  return TransliterationTable(block_of(source), block_of(target),
                              std::move(exceptions), policy);
}

TransliterationResult transliterate_text(std::string_view text,
                                         const TransliterationTable& table) {
  TransliterationResult result;
  std::u32string out;
  const std::u32string cps = unicode::decode(text);
  out.reserve(cps.size());
  for (char32_t cp : cps) table.apply(cp, out, result.report);
  result.text = unicode::encode(out);
  return result;
}

CorpusTransliteration transliterate_corpus(const Corpus& corpus,
                                           const TransliterationTable& table) {
  CorpusTransliteration result;
  result.corpus.language_tag = corpus.language_tag;
  result.corpus.lines.reserve(corpus.lines.size());
  for (const auto& line : corpus.lines) {
    auto r = transliterate_text(line, table);
    result.corpus.lines.push_back(unicode::to_nfc(r.text));
    result.report += r.report;
  }
  result.corpus.script = detect_script(result.corpus.lines);
  return result;
}

}  // namespace lrlprep
