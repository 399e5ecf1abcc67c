// phonology.hpp
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

#ifndef PHONOTAX_PHONOLOGY_HPP_
#define PHONOTAX_PHONOLOGY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace phonotax {

enum class PhoneClass { Vowel, Consonant };

enum class Stress { Strong, Weak };

// Ordered phoneme set with a vowel/consonant class per symbol. Loaded from a
// line-oriented `symbol<TAB>V|C` document; `#` starts a comment line.
class PhonemeInventory {
 public:
  PhonemeInventory() = default;

  // Throws Error{DuplicateSymbol, IncompleteInventory, ...} on bad input.
  static PhonemeInventory from_symbols(
      std::span<const std::pair<std::string, PhoneClass>> symbols);

  bool contains(std::string_view symbol) const;
  std::optional<PhoneClass> class_of(std::string_view symbol) const;
  bool is_vowel(std::string_view symbol) const {
    return class_of(symbol) == PhoneClass::Vowel;
  }

  const std::vector<std::string>& symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  std::size_t vowel_count() const;

  // FNV-1a over the canonical `symbol\tV|C\n` serialization. Stored in model
  // files so a model is never paired with a different inventory.
  std::uint64_t fingerprint() const;

 private:
  std::vector<std::string> symbols_;
  std::vector<PhoneClass> classes_;
  std::unordered_map<std::string, std::size_t> index_;
};

PhonemeInventory load_inventory(std::string_view document);

struct Token {
  std::string symbol;
  PhoneClass cls = PhoneClass::Consonant;
  std::optional<int> stress;  // 0, 1 or 2; vowels only

  bool is_vowel() const { return cls == PhoneClass::Vowel; }

  friend bool operator==(const Token&, const Token&) = default;
};

// One utterance: a token sequence with at most one compound boundary.
// `boundary`, when set, is the index of the first token of the second word.
struct Transcription {
  std::vector<Token> tokens;
  std::optional<std::size_t> boundary;

  // Phonological words (one, or two for a compound) as token spans.
  std::vector<std::span<const Token>> words() const;

  friend bool operator==(const Transcription&, const Transcription&) = default;
};

Transcription tokenize(std::string_view raw, const PhonemeInventory& inventory);

// Canonical text form; tokenize(format(t)) == t.
std::string format(const Transcription& t);

using StressPattern = std::vector<Stress>;

// Digit 1 or 2 -> Strong, 0 -> Weak, an undigited monosyllable -> Strong.
StressPattern stress_pattern(const Transcription& t);

std::size_t count_vowels(std::span<const Token> tokens);

std::string_view stress_name(Stress s);

}  // namespace phonotax

#endif  // PHONOTAX_PHONOLOGY_HPP_
