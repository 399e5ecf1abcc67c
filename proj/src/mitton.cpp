// mitton.cpp
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
// Copyright 2026 The phonotax Authors.

#include "phonotax/mitton.hpp"

#include <array>
#include <optional>

#include "phonotax/error.hpp"
#include "phonotax/text.hpp"

namespace phonotax {

namespace {

struct Mapping {
  std::string_view code;
  std::string_view ipa;
  bool vowel;
};

// Two-character codes first so that matching is longest-first.
constexpr std::array<Mapping, 44> kMappings{{
    {"eI", "eɪ", true},  {"aI", "aɪ", true},  {"oI", "ɔɪ", true},
    {"@U", "əʊ", true},  {"aU", "aʊ", true},  {"I@", "ɪə", true},
    {"e@", "eə", true},  {"U@", "ʊə", true},  {"tS", "tʃ", false},
    {"dZ", "dʒ", false},
    {"i", "iː", true},   {"I", "ɪ", true},    {"e", "e", true},
    {"&", "æ", true},    {"A", "ɑː", true},   {"0", "ɒ", true},
    {"O", "ɔː", true},   {"U", "ʊ", true},    {"u", "uː", true},
    {"V", "ʌ", true},    {"3", "ɜː", true},   {"@", "ə", true},
    {"p", "p", false},   {"b", "b", false},   {"t", "t", false},
    {"d", "d", false},   {"k", "k", false},   {"g", "g", false},
    {"f", "f", false},   {"v", "v", false},   {"T", "θ", false},
    {"D", "ð", false},   {"s", "s", false},   {"z", "z", false},
    {"S", "ʃ", false},   {"Z", "ʒ", false},   {"h", "h", false},
    {"m", "m", false},   {"n", "n", false},   {"N", "ŋ", false},
    {"l", "l", false},   {"r", "r", false},   {"j", "j", false},
    {"w", "w", false},
}};

struct Segment {
  std::string symbol;
  bool vowel = false;
  std::optional<int> stress;
  bool boundary = false;
};

}  // namespace

std::string convert_mitton_pronunciation(std::string_view pron) {
  std::vector<Segment> segs;
  std::optional<int> pending;
  std::size_t i = 0;
  while (i < pron.size()) {
    const char c = pron[i];
    if (c == '\'' || c == ',') {
      pending = c == '\'' ? 1 : 2;
      ++i;
      continue;
    }
    if (c == '-') {
      segs.push_back(Segment{"+", false, {}, true});
      ++i;
      continue;
    }
    if (c == ' ') {
      ++i;
      continue;
    }
    const Mapping* hit = nullptr;
    for (const auto& m : kMappings) {
      if (pron.substr(i, m.code.size()) == m.code) {
        hit = &m;
        break;
      }
    }
    if (!hit)
      throw Error(ErrorCode::UnknownSymbol,
                  "pronunciation code '" + std::string(1, c) + "' in '" +
                      std::string(pron) + "'");
    Segment s{std::string(hit->ipa), hit->vowel, {}, false};
    if (hit->vowel && pending) {
      s.stress = pending;
      pending.reset();
    }
    segs.push_back(std::move(s));
    i += hit->code.size();
  }
  std::size_t vowels = 0;
  for (const auto& s : segs) vowels += s.vowel;
  std::string out;
  for (auto& s : segs) {
    if (s.vowel && !s.stress && vowels > 1) s.stress = 0;
    if (!out.empty()) out += ' ';
    out += s.symbol;
    if (s.stress) out += static_cast<char>('0' + *s.stress);
  }
  return out;
}

MittonImport import_mitton(std::string_view document) {
  constexpr std::size_t kSpellingWidth = 23;
  constexpr std::size_t kPronunciationWidth = 23;
  MittonImport out;
  std::size_t line_no = 0;
  for (std::string_view line : text::split_lines(document)) {
    ++line_no;
    if (text::trim(line).empty()) continue;
    if (line.size() <= kSpellingWidth) {
      out.issues.push_back({line_no, "line shorter than the spelling field"});
      continue;
    }
    const std::string_view spelling = text::trim(line.substr(0, kSpellingWidth));
    const std::string_view pron =
        text::trim(line.substr(kSpellingWidth, kPronunciationWidth));
    if (spelling.empty() || pron.empty()) {
      out.issues.push_back({line_no, "empty spelling or pronunciation"});
      continue;
    }
    try {
      const std::string transcription = convert_mitton_pronunciation(pron);
      out.lexicon += std::string(spelling) + '\t' + transcription + '\n';
      ++out.converted;
    } catch (const Error& e) {
      out.issues.push_back({line_no, e.what()});
    }
  }
  return out;
}

}  // namespace phonotax
