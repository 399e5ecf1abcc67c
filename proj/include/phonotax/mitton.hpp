// mitton.hpp
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

#ifndef PHONOTAX_MITTON_HPP_
#define PHONOTAX_MITTON_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace phonotax {

// Best-effort converter from the Oxford Text Archive `text710.dat` layout
// (mapping version "mitton-v1") to `orthography<TAB>transcription` lines over
// the default IPA inventory.
//
// Field mapping:
//   columns  1-23  spelling (trailing blanks trimmed)
//   columns 24-46  pronunciation, ASCII phonemic code
// Pronunciation symbols are matched longest-first against the table in
// mitton.cpp. A `'` puts digit 1 on the next vowel and `,` puts digit 2;
// remaining vowels of polysyllables get 0, and monosyllables stay undigited.
// A `-` in the pronunciation becomes the compound mark `+`.
inline constexpr std::string_view kMittonMappingVersion = "mitton-v1";

struct MittonIssue {
  std::size_t line = 0;
  std::string detail;
};

struct MittonImport {
  std::string lexicon;  // ready for ingest_lexicon
  std::size_t converted = 0;
  std::vector<MittonIssue> issues;
};

MittonImport import_mitton(std::string_view document);

// One pronunciation field to transcription text. Throws Error on symbols
// outside the mapping.
std::string convert_mitton_pronunciation(std::string_view pronunciation);

}  // namespace phonotax

#endif  // PHONOTAX_MITTON_HPP_
