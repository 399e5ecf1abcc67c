// score.cpp
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

#include "phonotax/score.hpp"

#include <algorithm>
#include <cmath>

#include "phonotax/error.hpp"
#include "phonotax/text.hpp"

namespace phonotax {

ScoreReport score_parse(const ScoredParse& parse) {
  if (parse.probabilities.empty())
    throw Error(ErrorCode::InvalidArgument, "parse has no paths");
  ScoreReport r;
  r.p_word = parse.product;
  r.ln_p_word = std::log(parse.product);
  const auto [lo, hi] = std::minmax_element(parse.probabilities.begin(),
                                            parse.probabilities.end());
  r.p_worst = *lo;
  r.p_best = *hi;
  r.best_parse = parse;
  return r;
}

ScoreReport score_word(const TrainedModel& model, const Transcription& t) {
  const ParseForest forest = parse_all(t, model);
  return score_parse(best_parse(forest));
}

std::string_view scoring_method_name(ScoringMethod method) {
  switch (method) {
    case ScoringMethod::PWord: return "p(word)";
    case ScoringMethod::LnPWord: return "ln(p(word))";
    case ScoringMethod::PWorst: return "p(worst part)";
    case ScoringMethod::PBest: return "p(best part)";
  }
  return "";
}

double score_value(const ScoreReport& report, ScoringMethod method) {
  switch (method) {
    case ScoringMethod::PWord: return report.p_word;
    case ScoringMethod::LnPWord: return report.ln_p_word;
    case ScoringMethod::PWorst: return report.p_worst;
    case ScoringMethod::PBest: return report.p_best;
  }
  return 0.0;
}

std::vector<BatchRow> score_batch(const TrainedModel& model,
                                  const PhonemeInventory& inventory,
                                  std::string_view stimuli_document) {
  std::vector<BatchRow> rows;
  std::size_t line_no = 0;
  for (std::string_view line : text::split_lines(stimuli_document)) {
    ++line_no;
    if (text::is_skippable(line)) continue;
    BatchRow row;
    row.line = line_no;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || text::trim(line.substr(0, tab)).empty()) {
      row.word_id = "line" + std::to_string(line_no);
      row.error = "Malformed: expected 'word_id<TAB>transcription'";
      rows.push_back(std::move(row));
      continue;
    }
    row.word_id = std::string(text::trim(line.substr(0, tab)));
    try {
      row.report = score_word(model, tokenize(line.substr(tab + 1), inventory));
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

static std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), '\t', ' ');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::string format_score_table(const std::vector<BatchRow>& rows) {
  std::string out =
      "word_id\tp_word\tln_p_word\tp_worst\tp_best\tbest_parse_paths\terror\n";
  for (const auto& row : rows) {
    out += sanitize(row.word_id);
    if (row.report) {
      const ScoreReport& r = *row.report;
      out += '\t' + text::format_double(r.p_word) + '\t' +
             text::format_double(r.ln_p_word) + '\t' +
             text::format_double(r.p_worst) + '\t' +
             text::format_double(r.p_best) + '\t' + r.best_parse.path_text() +
             '\t';
    } else {
      out += "\t\t\t\t\t\t" + sanitize(row.error);
    }
    out += '\n';
  }
  return out;
}

}  // namespace phonotax
