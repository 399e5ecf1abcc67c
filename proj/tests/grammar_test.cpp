// grammar_test.cpp
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

#include "doctest.h"
#include "phonotax/error.hpp"
#include "phonotax/grammar.hpp"

using namespace phonotax;

namespace {

constexpr auto kS = Stress::Strong;
constexpr auto kW = Stress::Weak;

SyllableCategory cat(Stress s, Position p) { return {s, p}; }

PathType path(const std::string& text) { return parse_path(text); }

std::vector<SyllableCategory> all_syllable_categories() {
  std::vector<SyllableCategory> out;
  for (Stress s : {kS, kW})
    for (Position p : {Position::Initial, Position::Final, Position::InitialFinal})
      out.push_back({s, p});
  return out;
}

}  // namespace

TEST_CASE("category labels") {
  CHECK(cat(kS, Position::Initial).label() == "Ssi");
  CHECK(cat(kW, Position::InitialFinal).label() == "Swif");
  CHECK(Cell{cat(kW, Position::Final), ConstituentKind::Rhyme}.label() == "Rwf");
  for (std::size_t i = 0; i < kCellCount; ++i) {
    const Cell c = Cell::from_index(i);
    CHECK(c.index() == i);
    CHECK(Cell::from_label(c.label()) == c);
  }
  CHECK_FALSE(Cell::from_label("Osm"));
  CHECK_FALSE(syllable_from_label("Sxi"));
}

TEST_CASE("templates_for covers the word-expansion rules") {
  auto mono = templates_for({kS});
  REQUIRE(mono.size() == 1);
  CHECK(mono[0].label() == "W[Ssif]");

  CHECK(templates_for({kW})[0].label() == "W[Swif]");

  auto iamb = templates_for({kW, kS});
  REQUIRE(iamb.size() == 1);
  CHECK(iamb[0].syllables() ==
        std::vector{cat(kW, Position::Initial), cat(kS, Position::Final)});

  auto trochee = templates_for({kS, kW});
  REQUIRE(trochee.size() == 1);
  CHECK(trochee[0].label() == "W[Ssi Swf]");

  auto spondee = templates_for({kS, kS});
  REQUIRE(spondee.size() == 2);
  CHECK(spondee[0].label() == "W[Ssi Ssf]");
  CHECK(spondee[1].label() == "W[Ssif] W[Ssif]");
  CHECK(spondee[1].is_compound());
  CHECK(templates_for({kS, kS}) == spondee);  // order-stable

  CHECK_THROWS_AS(templates_for({kW, kW}), Error);
  try {
    templates_for({kW, kW});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedStressPattern);
  }
  try {
    templates_for({kS, kW, kS});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfScope);
  }
}

TEST_CASE("path text") {
  PathType k{cat(kS, Position::Initial), ConstituentKind::Onset, {"k"}};
  CHECK(format_path(k) == "U : W : Ssi : Osi : k");
  PathType null_onset{cat(kS, Position::InitialFinal), ConstituentKind::Onset, {}};
  CHECK(format_path(null_onset) == "U : W : Ssif : Osif : ∅");
  PathType rhyme{cat(kS, Position::Initial), ConstituentKind::Rhyme, {"æ", "n"}};
  CHECK(format_path(rhyme) == "U : W : Ssi : Rsi : æ n");

  for (const auto& p : {k, null_onset, rhyme}) CHECK(parse_path(format_path(p)) == p);

  try {
    parse_path("U : W : Ssi : Owf : d");
    FAIL("expected TagMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TagMismatch);
  }
  for (const char* bad : {"U : W : Ssi : Osi", "X : W : Ssi : Osi : k",
                          "U : W : Sqi : Osi : k", "U : W : Ssi : Osi : "}) {
    try {
      parse_path(bad);
      FAIL("expected MalformedPath for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedPath);
    }
  }
}

TEST_CASE("sequential_unify: candle succeeds") {
  const WordTemplate tmpl = templates_for({kS, kW})[0];
  const std::vector<PathType> paths{
      path("U : W : Ssi : Osi : k"), path("U : W : Ssi : Rsi : æ n"),
      path("U : W : Swf : Owf : d"), path("U : W : Swf : Rwf : ə l")};
  auto result = sequential_unify(tmpl, paths);
  REQUIRE(std::holds_alternative<UnifiedParse>(result));
  const auto& parse = std::get<UnifiedParse>(result);
  CHECK(parse.paths == paths);
  CHECK(parse.word_template == tmpl);

  // Idempotent.
  auto again = sequential_unify(parse.word_template, parse.paths);
  REQUIRE(std::holds_alternative<UnifiedParse>(again));
  CHECK(std::get<UnifiedParse>(again) == parse);
}

TEST_CASE("sequential_unify: Osi followed by Owf fails at that pair") {
  const WordTemplate tmpl = templates_for({kS, kW})[0];
  auto result = sequential_unify(
      tmpl, {path("U : W : Ssi : Osi : k"), path("U : W : Swf : Owf : d"),
             path("U : W : Swf : Rwf : ə l")});
  REQUIRE(std::holds_alternative<UnifyFailure>(result));
  const auto& f = std::get<UnifyFailure>(result);
  CHECK(f.index == 1);
  CHECK(f.left->label() == "Osi");
  CHECK(f.right->label() == "Owf");
  CHECK(f.expected->label() == "Rsi");
}

TEST_CASE("sequential_unify: monosyllable and compounds") {
  auto mono = sequential_unify(
      templates_for({kS})[0],
      {path("U : W : Ssif : Osif : ∅"), path("U : W : Ssif : Rsif : æ t")});
  CHECK(std::holds_alternative<UnifiedParse>(mono));

  const WordTemplate compound = templates_for({kS, kS})[1];
  auto busboy = sequential_unify(
      compound,
      {path("U : W : Ssif : Osif : b"), path("U : W : Ssif : Rsif : ʌ s"),
       path("U : W : Ssif : Osif : b"), path("U : W : Ssif : Rsif : ɔɪ")});
  CHECK(std::holds_alternative<UnifiedParse>(busboy));

  auto short_seq = sequential_unify(compound, {path("U : W : Ssif : Osif : b"),
                                               path("U : W : Ssif : Rsif : ʌ s")});
  REQUIRE(std::holds_alternative<UnifyFailure>(short_seq));
  CHECK(std::get<UnifyFailure>(short_seq).index == 2);
  CHECK_FALSE(std::get<UnifyFailure>(short_seq).right);

  auto empty = sequential_unify(compound, {});
  CHECK(std::holds_alternative<UnifyFailure>(empty));
}

TEST_CASE("property: any mismatched adjacent label pair fails") {
  // Exhaustive over two-path sequences for every monosyllabic template and
  // every 12 x 12 label pair: only (Osif-like onset, matching rhyme) unify.
  for (const auto& syl : all_syllable_categories()) {
    if (syl.position != Position::InitialFinal) continue;
    const WordTemplate tmpl{{{syl}}};
    for (std::size_t a = 0; a < kCellCount; ++a) {
      for (std::size_t b = 0; b < kCellCount; ++b) {
        const Cell ca = Cell::from_index(a), cb = Cell::from_index(b);
        const std::vector<PathType> paths{
            {ca.syllable, ca.kind, {"t"}}, {cb.syllable, cb.kind, {"æ"}}};
        const bool ok = std::holds_alternative<UnifiedParse>(
            sequential_unify(tmpl, paths));
        const bool expected = ca == Cell{syl, ConstituentKind::Onset} &&
                              cb == Cell{syl, ConstituentKind::Rhyme};
        CHECK(ok == expected);
      }
    }
  }
  // Disyllables: every single-label substitution in the valid sequence fails.
  for (const auto& tmpl : {templates_for({kS, kW})[0], templates_for({kW, kS})[0],
                           templates_for({kS, kS})[0], templates_for({kS, kS})[1]}) {
    std::vector<PathType> valid;
    for (const auto& syl : tmpl.syllables()) {
      valid.push_back({syl, ConstituentKind::Onset, {"t"}});
      valid.push_back({syl, ConstituentKind::Rhyme, {"æ"}});
    }
    REQUIRE(std::holds_alternative<UnifiedParse>(sequential_unify(tmpl, valid)));
    for (std::size_t pos = 0; pos < valid.size(); ++pos) {
      for (std::size_t c = 0; c < kCellCount; ++c) {
        const Cell cell = Cell::from_index(c);
        if (cell == valid[pos].cell()) continue;
        auto mutated = valid;
        mutated[pos].syllable = cell.syllable;
        mutated[pos].constituent = cell.kind;
        auto r = sequential_unify(tmpl, mutated);
        REQUIRE(std::holds_alternative<UnifyFailure>(r));
        CHECK(std::get<UnifyFailure>(r).index == pos);
      }
    }
  }
}
