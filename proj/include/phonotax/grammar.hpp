// grammar.hpp
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

#ifndef PHONOTAX_GRAMMAR_HPP_
#define PHONOTAX_GRAMMAR_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phonotax/phonology.hpp"

namespace phonotax {

// Position of a syllable within its phonological word. Words in scope have
// one or two syllables, so there is no Medial value: a three-syllable word
// would need a medial category that this grammar deliberately cannot express.
enum class Position { Initial, Final, InitialFinal };

enum class ConstituentKind { Onset, Rhyme };

// One of the six syllable categories Ssi, Ssf, Ssif, Swi, Swf, Swif.
struct SyllableCategory {
  Stress stress = Stress::Strong;
  Position position = Position::InitialFinal;

  // "Ssi", "Swif", ...
  std::string label() const;

  friend bool operator==(const SyllableCategory&,
                         const SyllableCategory&) = default;
};

// (syllable category, constituent kind): the twelve cells Osi, Rsi, ...
struct Cell {
  SyllableCategory syllable;
  ConstituentKind kind = ConstituentKind::Onset;

  std::string label() const;  // "Osi", "Rwf", ...
  std::size_t index() const;  // dense 0..11

  static Cell from_index(std::size_t index);
  static std::optional<Cell> from_label(std::string_view label);

  friend bool operator==(const Cell&, const Cell&) = default;
};

inline constexpr std::size_t kCellCount = 12;

// The order used for reports: onsets then rhymes, each Sf, Sif, Si, Wf, Wi, Wif.
const std::array<Cell, kCellCount>& report_order();

std::optional<SyllableCategory> syllable_from_label(std::string_view label);

// U -> W or U -> W W, each W a sequence of syllable categories.
struct WordTemplate {
  std::vector<std::vector<SyllableCategory>> words;

  std::size_t syllable_count() const;
  bool is_compound() const { return words.size() == 2; }
  std::vector<SyllableCategory> syllables() const;  // flattened, in order
  std::string label() const;                        // "W[Ssi Swf]"

  friend bool operator==(const WordTemplate&, const WordTemplate&) = default;
};

// Templates licensed by the word-expansion rules for a stress pattern:
//   [S]    -> W[Ssif]          [W]    -> W[Swif]
//   [W S]  -> W[Swi Ssf]       [S W]  -> W[Ssi Swf]
//   [S S]  -> W[Ssi Ssf], W[Ssif] W[Ssif]
// Throws UnsupportedStressPattern for [W W], OutOfScope beyond two syllables.
std::vector<WordTemplate> templates_for(const StressPattern& pattern);

using Terminal = std::vector<std::string>;

// Null terminals print as U+2205.
inline constexpr std::string_view kNullTerminal = "\xE2\x88\x85";

std::string terminal_text(const Terminal& terminal);     // "æ n", or ∅
std::string terminal_display(const Terminal& terminal);  // "æn", or ∅
Terminal terminal_from_text(std::string_view text);

// A root-to-frontier path U : W : <syllable> : <constituent> : <terminal>.
// U and W carry no parameters and are implied.
struct PathType {
  SyllableCategory syllable;
  ConstituentKind constituent = ConstituentKind::Onset;
  Terminal terminal;

  Cell cell() const { return Cell{syllable, constituent}; }

  friend bool operator==(const PathType&, const PathType&) = default;
};

std::string format_path(const PathType& path);
PathType parse_path(std::string_view text);

struct UnifiedParse {
  WordTemplate word_template;
  std::vector<PathType> paths;

  friend bool operator==(const UnifiedParse&, const UnifiedParse&) = default;
};

// First adjacent pair that does not unify. `left` is empty when the very first
// path is wrong; `right` is empty when the sequence stops too early.
struct UnifyFailure {
  std::size_t index = 0;  // position of `right` (or one past the end)
  std::optional<Cell> left;
  std::optional<Cell> right;
  std::optional<Cell> expected;
  std::string message;
};

using UnifyResult = std::variant<UnifiedParse, UnifyFailure>;

// Zips paths top-down against the template: each syllable contributes an
// onset followed by a rhyme carrying the same stress and position tags.
UnifyResult sequential_unify(const WordTemplate& word_template,
                             const std::vector<PathType>& paths);

}  // namespace phonotax

#endif  // PHONOTAX_GRAMMAR_HPP_
