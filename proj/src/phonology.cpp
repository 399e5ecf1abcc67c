// phonology.cpp
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

#include "phonotax/phonology.hpp"

#include <algorithm>

#include "phonotax/error.hpp"
#include "phonotax/text.hpp"

namespace phonotax {

PhonemeInventory PhonemeInventory::from_symbols(
    std::span<const std::pair<std::string, PhoneClass>> symbols) {
  PhonemeInventory inv;
  for (const auto& [symbol, cls] : symbols) {
    if (symbol.empty())
      throw Error(ErrorCode::InvalidArgument, "empty phoneme symbol");
    if (symbol == "+" || symbol == "\xE2\x88\x85")
      throw Error(ErrorCode::InvalidArgument,
                  "'" + symbol + "' is reserved and cannot be a phoneme");
    if (inv.index_.count(symbol))
      throw Error(ErrorCode::DuplicateSymbol, "'" + symbol + "'");
    inv.index_.emplace(symbol, inv.symbols_.size());
    inv.symbols_.push_back(symbol);
    inv.classes_.push_back(cls);
  }
  if (inv.symbols_.empty())
    throw Error(ErrorCode::EmptyDocument, "inventory has no symbols");
  const std::size_t vowels = inv.vowel_count();
  if (vowels == 0 || vowels == inv.size())
    throw Error(ErrorCode::IncompleteInventory,
                "inventory needs at least one vowel and one consonant");
  return inv;
}

bool PhonemeInventory::contains(std::string_view symbol) const {
  return index_.find(std::string(symbol)) != index_.end();
}

std::optional<PhoneClass> PhonemeInventory::class_of(
    std::string_view symbol) const {
  auto it = index_.find(std::string(symbol));
  if (it == index_.end()) return std::nullopt;
  return classes_[it->second];
}

std::size_t PhonemeInventory::vowel_count() const {
  return static_cast<std::size_t>(
      std::count(classes_.begin(), classes_.end(), PhoneClass::Vowel));
}

std::uint64_t PhonemeInventory::fingerprint() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ULL;
    }
  };
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    mix(symbols_[i]);
    mix(classes_[i] == PhoneClass::Vowel ? "\tV\n" : "\tC\n");
  }
  return h;
}

PhonemeInventory load_inventory(std::string_view document) {
  std::vector<std::pair<std::string, PhoneClass>> symbols;
  std::size_t line_no = 0;
  for (std::string_view line : text::split_lines(document)) {
    ++line_no;
    if (text::is_skippable(line)) continue;
    auto fields = text::split_whitespace(line);
    const std::string where = "line " + std::to_string(line_no);
    if (fields.size() < 2)
      throw Error(ErrorCode::MissingClass, where + ": expected 'symbol<TAB>V|C'");
    if (fields.size() > 2)
      throw Error(ErrorCode::UnknownClass, where + ": trailing fields");
    PhoneClass cls;
    if (fields[1] == "V")
      cls = PhoneClass::Vowel;
    else if (fields[1] == "C")
      cls = PhoneClass::Consonant;
    else
      throw Error(ErrorCode::UnknownClass,
                  where + ": class '" + std::string(fields[1]) + "'");
    symbols.emplace_back(std::string(fields[0]), cls);
  }
  if (symbols.empty())
    throw Error(ErrorCode::EmptyDocument, "inventory document is empty");
  return PhonemeInventory::from_symbols(symbols);
}

std::vector<std::span<const Token>> Transcription::words() const {
  std::span<const Token> all(tokens);
  if (!boundary) return {all};
  return {all.first(*boundary), all.subspan(*boundary)};
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

Token read_token(std::string_view raw, const PhonemeInventory& inventory) {
  if (auto cls = inventory.class_of(raw)) return Token{std::string(raw), *cls, {}};
  // `symbol` + one trailing ASCII digit.
  if (raw.size() >= 2 && is_digit(raw.back())) {
    std::string_view symbol = raw.substr(0, raw.size() - 1);
    auto cls = inventory.class_of(symbol);
    if (!cls)
      throw Error(ErrorCode::UnknownSymbol, "'" + std::string(symbol) + "'");
    const int digit = raw.back() - '0';
    if (digit > 2)
      throw Error(ErrorCode::BadStressDigit, "'" + std::string(raw) + "'");
    if (*cls != PhoneClass::Vowel)
      throw Error(ErrorCode::StressOnConsonant, "'" + std::string(raw) + "'");
    return Token{std::string(symbol), *cls, digit};
  }
  throw Error(ErrorCode::UnknownSymbol, "'" + std::string(raw) + "'");
}

}  // namespace

Transcription tokenize(std::string_view raw, const PhonemeInventory& inventory) {
  auto pieces = text::split_whitespace(raw);
  if (pieces.empty()) throw Error(ErrorCode::EmptyInput, "empty transcription");
  Transcription t;
  for (std::string_view piece : pieces) {
    if (piece == "+") {
      if (t.boundary)
        throw Error(ErrorCode::MultipleBoundaries,
                    "more than one '+' in '" + std::string(raw) + "'");
      t.boundary = t.tokens.size();
      continue;
    }
    t.tokens.push_back(read_token(piece, inventory));
  }
  if (t.boundary && (*t.boundary == 0 || *t.boundary == t.tokens.size()))
    throw Error(ErrorCode::MisplacedBoundary,
                "'+' must separate two non-empty words");
  return t;
}

std::string format(const Transcription& t) {
  std::string out;
  for (std::size_t i = 0; i < t.tokens.size(); ++i) {
    if (t.boundary && *t.boundary == i) out += " +";
    if (i) out += ' ';
    out += t.tokens[i].symbol;
    if (t.tokens[i].stress) out += static_cast<char>('0' + *t.tokens[i].stress);
  }
  return out;
}

std::size_t count_vowels(std::span<const Token> tokens) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(),
                    [](const Token& tok) { return tok.is_vowel(); }));
}

StressPattern stress_pattern(const Transcription& t) {
  const std::size_t vowels = count_vowels(t.tokens);
  if (vowels == 0) throw Error(ErrorCode::NoNucleus, format(t));
  StressPattern pattern;
  for (const Token& tok : t.tokens) {
    if (!tok.is_vowel()) continue;
    if (!tok.stress) {
      if (vowels != 1) throw Error(ErrorCode::MissingStress, format(t));
      pattern.push_back(Stress::Strong);
    } else {
      pattern.push_back(*tok.stress == 0 ? Stress::Weak : Stress::Strong);
    }
  }
  return pattern;
}

std::string_view stress_name(Stress s) {
  return s == Stress::Strong ? "Strong" : "Weak";
}

}  // namespace phonotax
