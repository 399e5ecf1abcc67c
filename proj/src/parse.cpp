// parse.cpp
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

#include "phonotax/parse.hpp"

#include <algorithm>

#include "phonotax/error.hpp"

namespace phonotax {

std::vector<CandidateSyllable> Segmentation::syllables() const {
  std::vector<CandidateSyllable> out;
  for (const auto& w : words) out.insert(out.end(), w.begin(), w.end());
  return out;
}

namespace {

Terminal symbols_of(std::span<const Token> tokens) {
  Terminal out;
  for (const Token& tok : tokens) out.push_back(tok.symbol);
  return out;
}

std::vector<std::vector<CandidateSyllable>> word_segmentations(
    std::span<const Token> word, const Transcription& whole) {
  std::vector<std::size_t> nuclei;
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i].is_vowel()) nuclei.push_back(i);
  if (nuclei.empty()) throw Error(ErrorCode::NoNucleus, format(whole));
  if (nuclei.size() > 2) throw Error(ErrorCode::ThreePlusNuclei, format(whole));

  if (nuclei.size() == 1)
    return {{CandidateSyllable{symbols_of(word.first(nuclei[0])),
                               symbols_of(word.subspan(nuclei[0]))}}};
  std::vector<std::vector<CandidateSyllable>> out;
  const std::size_t v1 = nuclei[0], v2 = nuclei[1];
  // split = first index of syllable 2; from right after v1 up to v2.
  for (std::size_t split = v1 + 1; split <= v2; ++split) {
    out.push_back({CandidateSyllable{symbols_of(word.first(v1)),
                                     symbols_of(word.subspan(v1, split - v1))},
                   CandidateSyllable{symbols_of(word.subspan(split, v2 - split)),
                                     symbols_of(word.subspan(v2))}});
  }
  return out;
}

}  // namespace

std::vector<Segmentation> enumerate_segmentations(const Transcription& t) {
  std::vector<Segmentation> out{Segmentation{}};
  for (auto word : t.words()) {
    const auto options = word_segmentations(word, t);
    std::vector<Segmentation> next;
    for (const auto& prefix : out) {
      for (const auto& opt : options) {
        Segmentation s = prefix;
        s.words.push_back(opt);
        next.push_back(std::move(s));
      }
    }
    out = std::move(next);
  }
  std::size_t syllables = 0;
  for (const auto& w : out.front().words) syllables += w.size();
  if (syllables > 2) throw Error(ErrorCode::ThreePlusNuclei, format(t));
  return out;
}

std::string ScoredParse::path_text() const {
  std::string out;
  for (std::size_t i = 0; i < parse.paths.size(); ++i) {
    if (i) out += " | ";
    out += format_path(parse.paths[i]);
  }
  return out;
}

bool parse_precedes(const ScoredParse& a, const ScoredParse& b) {
  if (a.product != b.product) return a.product > b.product;
  return a.path_text() < b.path_text();
}

ParseForest parse_all(const Transcription& t, const TrainedModel& model) {
  auto templates = templates_for(stress_pattern(t));
  if (t.boundary)
    std::erase_if(templates, [](const WordTemplate& w) { return !w.is_compound(); });
  const auto segmentations = enumerate_segmentations(t);

  ParseForest forest;
  for (const auto& tmpl : templates) {
    const auto categories = tmpl.syllables();
    for (const auto& seg : segmentations) {
      const auto syllables = seg.syllables();
      if (syllables.size() != categories.size()) continue;
      std::vector<PathType> paths;
      for (std::size_t k = 0; k < syllables.size(); ++k) {
        paths.push_back({categories[k], ConstituentKind::Onset, syllables[k].onset});
        paths.push_back({categories[k], ConstituentKind::Rhyme, syllables[k].rhyme});
      }
      auto unified = sequential_unify(tmpl, paths);
      if (!std::holds_alternative<UnifiedParse>(unified)) continue;

      ScoredParse sp;
      sp.parse = std::get<UnifiedParse>(std::move(unified));
      sp.product = 1.0;
      for (const auto& path : sp.parse.paths) {
        const Lookup l = model.lookup(path);
        sp.probabilities.push_back(l.probability);
        sp.seen.push_back(l.seen);
        sp.product *= l.probability;
      }
      forest.parses.push_back(std::move(sp));
    }
  }
  if (forest.parses.empty())
    throw Error(ErrorCode::OutOfScope, "no parse for " + format(t));
  std::sort(forest.parses.begin(), forest.parses.end(), parse_precedes);
  return forest;
}

const ScoredParse& best_parse(const ParseForest& forest) {
  if (forest.parses.empty())
    throw Error(ErrorCode::InvalidArgument, "empty parse forest");
  return forest.parses.front();
}

}  // namespace phonotax
