// parse.hpp
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

#ifndef PHONOTAX_PARSE_HPP_
#define PHONOTAX_PARSE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "phonotax/grammar.hpp"
#include "phonotax/phonology.hpp"
#include "phonotax/train.hpp"

namespace phonotax {

struct CandidateSyllable {
  Terminal onset;
  Terminal rhyme;

  friend bool operator==(const CandidateSyllable&,
                         const CandidateSyllable&) = default;
};

// One way of cutting a transcription into onset/rhyme pairs, grouped by
// phonological word as marked in the input.
struct Segmentation {
  std::vector<std::vector<CandidateSyllable>> words;

  std::vector<CandidateSyllable> syllables() const;

  friend bool operator==(const Segmentation&, const Segmentation&) = default;
};

// Every split of each medial cluster: m consonants give m + 1 candidates,
// starting with the whole cluster in the second onset and ending with it all
// in the first rhyme.
std::vector<Segmentation> enumerate_segmentations(const Transcription& t);

struct ScoredParse {
  UnifiedParse parse;
  std::vector<double> probabilities;
  std::vector<bool> seen;
  double product = 0.0;

  // Path texts joined by " | "; the secondary sort key.
  std::string path_text() const;
};

// All parses, best first: product descending, then path text ascending.
struct ParseForest {
  std::vector<ScoredParse> parses;
};

ParseForest parse_all(const Transcription& t, const TrainedModel& model);

const ScoredParse& best_parse(const ParseForest& forest);

// Ordering used by the forest sort.
bool parse_precedes(const ScoredParse& a, const ScoredParse& b);

}  // namespace phonotax

#endif  // PHONOTAX_PARSE_HPP_
