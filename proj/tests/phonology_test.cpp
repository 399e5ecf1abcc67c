// phonology_test.cpp
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

#include <random>

#include "doctest.h"
#include "phonotax/error.hpp"
#include "phonotax/phonology.hpp"
#include "test_support.hpp"

using namespace phonotax;
using phonotax::testing::ipa;
using phonotax::testing::tx;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

const char* kSmallInventory =
    "# test inventory\n"
    "p\tC\nt\tC\nk\tC\ns\tC\nm\tC\nl\tC\nd\tC\nn\tC\n"
    "\n"
    "æ\tV\nə\tV\nɪ\tV\n";

}  // namespace

TEST_CASE("load_inventory reads classes in order") {
  const PhonemeInventory inv = load_inventory(kSmallInventory);
  CHECK(inv.size() == 11);
  CHECK(inv.vowel_count() == 3);
  CHECK(inv.symbols().front() == "p");
  CHECK(inv.symbols().back() == "ɪ");
  CHECK(inv.is_vowel("æ"));
  CHECK_FALSE(inv.is_vowel("k"));
  CHECK_FALSE(inv.contains("b"));
}

TEST_CASE("load_inventory errors") {
  CHECK(code_of([] { load_inventory("p C\nt C\np C\na V\n"); }) ==
        ErrorCode::DuplicateSymbol);
  CHECK(code_of([] { load_inventory("a V\nx Q\n"); }) == ErrorCode::UnknownClass);
  CHECK(code_of([] { load_inventory("a V\nx\n"); }) == ErrorCode::MissingClass);
  CHECK(code_of([] { load_inventory("# nothing\n\n"); }) ==
        ErrorCode::EmptyDocument);
  CHECK(code_of([] { load_inventory("a V\ne V\n"); }) ==
        ErrorCode::IncompleteInventory);
}

TEST_CASE("fingerprint depends on content and order") {
  const auto a = load_inventory("p C\na V\n");
  const auto b = load_inventory("a V\np C\n");
  const auto c = load_inventory("p C\na V\n");
  CHECK(a.fingerprint() == c.fingerprint());
  CHECK(a.fingerprint() != b.fingerprint());
}

TEST_CASE("tokenize attaches stress digits") {
  const Transcription t = tx("k æ1 n d ə0 l");
  REQUIRE(t.tokens.size() == 6);
  CHECK(t.tokens[1].symbol == "æ");
  CHECK(t.tokens[1].stress == 1);
  CHECK(t.tokens[4].symbol == "ə");
  CHECK(t.tokens[4].stress == 0);
  CHECK_FALSE(t.tokens[0].stress);
  CHECK_FALSE(t.boundary);
}

TEST_CASE("tokenize records a compound boundary") {
  const Transcription t = tx("b ʌ1 s + b ɔɪ1");
  CHECK(t.tokens.size() == 5);
  REQUIRE(t.boundary);
  CHECK(*t.boundary == 3);
  const auto words = t.words();
  REQUIRE(words.size() == 2);
  CHECK(words[0].size() == 3);
  CHECK(words[1].size() == 2);
}

TEST_CASE("tokenize errors") {
  CHECK(code_of([] { tx("k æ7 t"); }) == ErrorCode::BadStressDigit);
  CHECK(code_of([] { tx("k1 æ t"); }) == ErrorCode::StressOnConsonant);
  CHECK(code_of([] { tx("k æ Q"); }) == ErrorCode::UnknownSymbol);
  CHECK(code_of([] { tx("k æ1 + t + æ1"); }) == ErrorCode::MultipleBoundaries);
  CHECK(code_of([] { tx("+ k æ1 t"); }) == ErrorCode::MisplacedBoundary);
  CHECK(code_of([] { tx("   "); }) == ErrorCode::EmptyInput);
}

TEST_CASE("stress_pattern") {
  CHECK(stress_pattern(tx("k æ1 t")) == StressPattern{Stress::Strong});
  CHECK(stress_pattern(tx("k æ t")) == StressPattern{Stress::Strong});
  CHECK(stress_pattern(tx("ə0 b aʊ1 t")) ==
        StressPattern{Stress::Weak, Stress::Strong});
  CHECK(stress_pattern(tx("r æ2 ŋ g u1 n")) ==
        StressPattern{Stress::Strong, Stress::Strong});
  CHECK(code_of([] { stress_pattern(tx("s t")); }) == ErrorCode::NoNucleus);
  CHECK(code_of([] { stress_pattern(tx("k æ n d ə0 l")); }) ==
        ErrorCode::MissingStress);
}

TEST_CASE("property: tokenize(format(t)) == t and token counts are kept") {
  std::mt19937 rng(7);
  const auto& symbols = ipa().symbols();
  for (int iter = 0; iter < 500; ++iter) {
    Transcription t;
    const std::size_t n = 1 + rng() % 8;
    for (std::size_t i = 0; i < n; ++i) {
      const std::string& s = symbols[rng() % symbols.size()];
      Token tok{s, *ipa().class_of(s), {}};
      if (tok.is_vowel() && rng() % 2) tok.stress = static_cast<int>(rng() % 3);
      t.tokens.push_back(tok);
    }
    if (n >= 2 && rng() % 3 == 0) t.boundary = 1 + rng() % (n - 1);
    const std::string text = format(t);
    const Transcription back = tokenize(text, ipa());
    CHECK(back == t);
    CHECK(back.tokens.size() == n);
    if (count_vowels(t.tokens) == 1 ||
        (count_vowels(t.tokens) > 1 &&
         std::all_of(t.tokens.begin(), t.tokens.end(), [](const Token& k) {
           return !k.is_vowel() || k.stress.has_value();
         }))) {
      CHECK(stress_pattern(t).size() == count_vowels(t.tokens));
    }
  }
}
