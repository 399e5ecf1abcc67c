// parse_test.cpp
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

#include <cmath>
#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "phonotax/error.hpp"
#include "phonotax/parse.hpp"
#include "test_support.hpp"
#include "toy_lexicon.hpp"

using namespace phonotax;
using phonotax::testing::ipa;
using phonotax::testing::tx;

namespace {

const TrainedModel& toy_model() {
  static const TrainedModel m =
      train(phonotax::testing::data_file("toy_lexicon.tsv"), ipa(), {}).model;
  return m;
}

const TrainedModel& sample_model() {
  static const TrainedModel m =
      train(phonotax::testing::data_file("sample_lexicon.tsv"), ipa(), {}).model;
  return m;
}

ScoredParse fake_parse(double product, const std::string& onset) {
  ScoredParse p;
  p.parse.word_template = templates_for({Stress::Strong})[0];
  p.parse.paths = {{{Stress::Strong, Position::InitialFinal}, ConstituentKind::Onset, {onset}},
                   {{Stress::Strong, Position::InitialFinal}, ConstituentKind::Rhyme, {"æ"}}};
  p.probabilities = {product, 1.0};
  p.seen = {true, true};
  p.product = product;
  return p;
}

}  // namespace

TEST_CASE("enumerate_segmentations") {
  auto stin = enumerate_segmentations(tx("s t ɪ1 n"));
  REQUIRE(stin.size() == 1);
  CHECK(stin[0].syllables() ==
        std::vector<CandidateSyllable>{{{"s", "t"}, {"ɪ", "n"}}});

  auto candle = enumerate_segmentations(tx("k æ1 n d ə0 l"));
  REQUIRE(candle.size() == 3);
  CHECK(candle[0].syllables() == std::vector<CandidateSyllable>{
                                     {{"k"}, {"æ"}}, {{"n", "d"}, {"ə", "l"}}});
  CHECK(candle[1].syllables() == std::vector<CandidateSyllable>{
                                     {{"k"}, {"æ", "n"}}, {{"d"}, {"ə", "l"}}});
  CHECK(candle[2].syllables() == std::vector<CandidateSyllable>{
                                     {{"k"}, {"æ", "n", "d"}}, {{}, {"ə", "l"}}});

  CHECK(enumerate_segmentations(tx("k æ1 t")).size() == 1);
  CHECK(enumerate_segmentations(tx("b ʌ1 s + b ɔɪ1")).size() == 1);

  // Brute enumeration of split counts: m medial consonants, m + 1 splits.
  for (int m = 0; m <= 5; ++m) {
    std::string raw = "æ1";
    for (int i = 0; i < m; ++i) raw += " t";
    raw += " ə0";
    CHECK(enumerate_segmentations(tx(raw)).size() == static_cast<std::size_t>(m + 1));
  }

  for (auto [raw, code] : {std::pair{"s t", ErrorCode::NoNucleus},
                           std::pair{"b ə0 n æ1 n ə0", ErrorCode::ThreePlusNuclei}}) {
    try {
      enumerate_segmentations(tx(raw));
      FAIL("expected error for " << raw);
    } catch (const Error& e) {
      CHECK(e.code() == code);
    }
  }
}

TEST_CASE("parse_all on the toy model") {
  // Osif: five singletons -> p0 clamps to 1/2, each seen onset 0.1.
  // Rsif: æt 3, ɪt 1, ɒp 1 -> p0 = 2/5, p(æt) = 0.6 * 3/5 = 0.36.
  const ParseForest f = parse_all(tx("k æ1 t"), toy_model());
  REQUIRE(f.parses.size() == 1);
  const ScoredParse& best = best_parse(f);
  CHECK(best.probabilities[0] == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(best.probabilities[1] == doctest::Approx(0.36).epsilon(1e-15));
  CHECK(best.product == doctest::Approx(0.036).epsilon(1e-14));
  CHECK(best.seen == std::vector<bool>{true, true});

  const ScoredParse unseen = best_parse(parse_all(tx("ʃ uː1 ŋ"), toy_model()));
  CHECK(unseen.seen == std::vector<bool>{false, false});
  CHECK(unseen.product == doctest::Approx(0.5 * 0.4).epsilon(1e-15));

  // A disyllable over a model with no disyllables: every cell is empty.
  const ParseForest d = parse_all(tx("k æ1 n d ə0 l"), toy_model());
  CHECK(d.parses.size() == 3);
  for (const auto& p : d.parses) {
    CHECK(p.seen == std::vector<bool>(4, false));
    CHECK(p.product == doctest::Approx(std::pow(1e-9, 4)));
  }
}

TEST_CASE("parse_all: impossible /ml/ onset still parses") {
  const ScoredParse best = best_parse(parse_all(tx("m l æ1 ʃ"), sample_model()));
  CHECK(best.parse.paths[0].cell().label() == "Osif");
  CHECK(best.parse.paths[0].terminal == Terminal{"m", "l"});
  CHECK_FALSE(best.seen[0]);
  CHECK(best.product > 0.0);
}

TEST_CASE("parse_all: candle picks a seen Owf onset and matches the oracle") {
  const std::string raw = "k æ1 n d ə0 l";
  const ParseForest f = parse_all(tx(raw), sample_model());
  CHECK(f.parses.size() == 3);
  const ScoredParse& best = best_parse(f);
  CHECK(best.parse.paths[2].cell().label() == "Owf");
  CHECK(best.seen[2]);
  const auto oracle = phonotax::testing::brute_force_best(raw, sample_model(), ipa());
  REQUIRE(oracle);
  CHECK(best.product == oracle->product);
  CHECK(best.path_text() == oracle->path_text);
}

TEST_CASE("compound input uses only the two-word template") {
  const ParseForest marked = parse_all(tx("b ʌ1 s + b ɔɪ1"), sample_model());
  REQUIRE(marked.parses.size() == 1);
  CHECK(marked.parses[0].parse.word_template.is_compound());

  const ParseForest unmarked = parse_all(tx("b ʌ1 s b ɔɪ1"), sample_model());
  CHECK(unmarked.parses.size() == 6);  // 2 templates x 3 splits
}

TEST_CASE("parse_all errors propagate") {
  try {
    parse_all(tx("k ə0 t ə0"), toy_model());
    FAIL("expected UnsupportedStressPattern");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedStressPattern);
  }
}

TEST_CASE("best_parse ordering") {
  ParseForest f;
  f.parses = {fake_parse(0.02, "k"), fake_parse(0.5, "p"), fake_parse(0.1, "t")};
  std::sort(f.parses.begin(), f.parses.end(), parse_precedes);
  CHECK(best_parse(f).product == 0.5);

  ParseForest tie;
  tie.parses = {fake_parse(0.25, "t"), fake_parse(0.25, "k")};
  std::sort(tie.parses.begin(), tie.parses.end(), parse_precedes);
  CHECK(best_parse(tie).parse.paths[0].terminal == Terminal{"k"});

  CHECK_THROWS_AS(best_parse(ParseForest{}), Error);
}

TEST_CASE("property: oracle equivalence, product law, forest order") {
  std::mt19937_64 rng(99);
  int compared = 0;
  for (int iter = 0; iter < 150; ++iter) {
    const std::string lexicon = phonotax::testing::random_lexicon(rng, 10, 120);
    const TrainedModel model = train(lexicon, ipa(), {}).model;
    for (int w = 0; w < 4; ++w) {
      const std::string raw = phonotax::testing::random_word(rng);
      const auto oracle = phonotax::testing::brute_force_best(raw, model, ipa());
      if (!oracle) {
        CHECK_THROWS_AS(parse_all(tx(raw), model), Error);
        continue;
      }
      const ParseForest f = parse_all(tx(raw), model);
      const ScoredParse& best = best_parse(f);
      CHECK(std::fabs(best.product - oracle->product) <= 1e-12 * oracle->product);
      CHECK(best.path_text() == oracle->path_text);
      for (std::size_t i = 1; i < f.parses.size(); ++i)
        CHECK_FALSE(parse_precedes(f.parses[i], f.parses[i - 1]));
      for (const auto& p : f.parses) {
        double log_sum = 0.0;
        for (double q : p.probabilities) log_sum += std::log(q);
        CHECK(std::fabs(std::log(p.product) - log_sum) <= 1e-12 * std::fabs(log_sum));
        CHECK(p.product > 0.0);
        CHECK(p.product <= 1.0);
      }
      ++compared;
    }
  }
  CHECK(compared > 300);
}

TEST_CASE("property: scaling one cell keeps the argmax within a template") {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 80; ++iter) {
    const TrainedModel model =
        train(phonotax::testing::random_lexicon(rng, 20, 120), ipa(), {}).model;
    std::string raw;
    do {
      raw = phonotax::testing::random_word(rng, 3, false);
    } while (!phonotax::testing::brute_force_best(raw, model, ipa()) ||
             count_vowels(tx(raw).tokens) != 2);
    const ParseForest f = parse_all(tx(raw), model);
    const Cell target = f.parses[0].parse.paths[2].cell();  // second onset
    if (model.cell(target).all_mass_unseen) continue;

    const double k = 0.3;
    std::array<CellModel, kCellCount> cells;
    for (std::size_t i = 0; i < kCellCount; ++i) cells[i] = model.cell(Cell::from_index(i));
    CellModel& scaled = cells[target.index()];
    scaled.unseen *= k;
    for (auto& [t, p] : scaled.probabilities) p *= k;
    const TrainedModel rescaled(model.table(), cells, model.config());

    const ParseForest g = parse_all(tx(raw), rescaled);
    auto best_for = [](const ParseForest& forest, const WordTemplate& tmpl) {
      for (const auto& p : forest.parses)
        if (p.parse.word_template == tmpl) return p.path_text();
      return std::string();
    };
    for (const auto& p : f.parses) {
      if (!(p.parse.word_template == f.parses[0].parse.word_template)) continue;
      CHECK(best_for(f, p.parse.word_template) == best_for(g, p.parse.word_template));
      int uses = 0;
      for (const auto& path : p.parse.paths) uses += path.cell() == target;
      for (const auto& q : g.parses)
        if (q.path_text() == p.path_text())
          CHECK(q.product ==
                doctest::Approx(p.product * std::pow(k, uses)).epsilon(1e-12));
    }
  }
}
