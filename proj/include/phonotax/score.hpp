// score.hpp
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

#ifndef PHONOTAX_SCORE_HPP_
#define PHONOTAX_SCORE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phonotax/parse.hpp"
#include "phonotax/phonology.hpp"
#include "phonotax/train.hpp"

namespace phonotax {

// The four acceptability measures of a word, all read off its best parse.
struct ScoreReport {
  double p_word = 0.0;     // product over all paths
  double ln_p_word = 0.0;  // natural log of p_word
  double p_worst = 0.0;    // least probable onset or rhyme
  double p_best = 0.0;     // most probable onset or rhyme
  ScoredParse best_parse;
};

ScoreReport score_parse(const ScoredParse& parse);
ScoreReport score_word(const TrainedModel& model, const Transcription& t);

enum class ScoringMethod { PWord, LnPWord, PWorst, PBest };

inline constexpr ScoringMethod kScoringMethods[] = {
    ScoringMethod::PWord, ScoringMethod::LnPWord, ScoringMethod::PWorst,
    ScoringMethod::PBest};

std::string_view scoring_method_name(ScoringMethod method);  // "p(word)", ...
double score_value(const ScoreReport& report, ScoringMethod method);

struct BatchRow {
  std::string word_id;
  std::size_t line = 0;
  std::optional<ScoreReport> report;
  std::string error;  // set when report is empty
};

// Scores `word_id<TAB>transcription` lines in input order. Per-line failures
// are recorded on the row; the batch never aborts.
std::vector<BatchRow> score_batch(const TrainedModel& model,
                                  const PhonemeInventory& inventory,
                                  std::string_view stimuli_document);

// TSV with header `word_id p_word ln_p_word p_worst p_best best_parse_paths
// error`.
std::string format_score_table(const std::vector<BatchRow>& rows);

}  // namespace phonotax

#endif  // PHONOTAX_SCORE_HPP_
