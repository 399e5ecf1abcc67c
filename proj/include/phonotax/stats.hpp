// stats.hpp
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

#ifndef PHONOTAX_STATS_HPP_
#define PHONOTAX_STATS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonotax/score.hpp"

namespace phonotax {

// Product-moment correlation. Throws LengthMismatch, TooFewSamples (< 3) or
// DegenerateVariance.
double pearson_r(std::span<const double> xs, std::span<const double> ys);

struct TStatistic {
  double t = 0.0;
  std::size_t df = 0;
  bool infinite = false;  // |r| == 1
};

// t = r * sqrt(df / (1 - r^2)) with df = n - 2.
TStatistic t_from_r(double r, std::size_t n);

// I_x(a, b), continued fraction (modified Lentz), relative accuracy ~1e-15.
double regularized_incomplete_beta(double x, double a, double b);

// Two-tailed Student-t tail: I_{df/(df+t^2)}(df/2, 1/2).
double p_two_tailed(double t, double df);

enum class Significance { P001, P01, P05, NotSignificant };

Significance significance_of(double p);
std::string_view significance_label(Significance s);  // "p < .001", "n.s."

struct JudgmentRecord {
  std::string word_id;
  int votes_against = 0;  // 0 (good) .. 12 (bad)
};

inline constexpr int kMaxVotes = 12;

// CSV with header `word_id,votes_against`.
std::vector<JudgmentRecord> load_judgments(std::string_view csv);
std::string format_judgments(const std::vector<JudgmentRecord>& records);

struct CorrelationResult {
  ScoringMethod method = ScoringMethod::PWord;
  double r = 0.0;
  std::size_t n = 0;
  std::size_t df = 0;
  double t = 0.0;
  double p = 1.0;
  Significance significance = Significance::NotSignificant;
};

struct ScatterRow {
  std::string word_id;
  double ln_p = 0.0;
  int votes = 0;
};

struct Evaluation {
  std::vector<CorrelationResult> results;  // one per scoring method
  std::vector<ScatterRow> scatter;
};

// Joins scored rows (failed rows are ignored) with judgments on word id and
// correlates each scoring method with votes against.
Evaluation evaluate(const std::vector<BatchRow>& rows,
                    const std::vector<JudgmentRecord>& judgments);

std::string format_significance_table(const Evaluation& evaluation);
std::string format_scatter_csv(const Evaluation& evaluation);

inline constexpr std::string_view kSvgHeader =
    "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 450\" "
    "width=\"800\" height=\"450\">";

// ln(parse probability) against votes, fixed 800x450 canvas.
std::string render_scatter_svg(const Evaluation& evaluation);

struct SyntheticJudgmentParams {
  std::uint64_t seed = 1;
  double noise_sd = 1.5;  // in votes
};

// Votes as a noisy increasing function of -ln p(word): -ln p is mapped
// linearly onto [0, 12], Gaussian noise is added, and the result is rounded
// and clamped. Rows without a report are skipped.
std::vector<JudgmentRecord> synthetic_judgments(
    const std::vector<BatchRow>& rows, const SyntheticJudgmentParams& params);

}  // namespace phonotax

#endif  // PHONOTAX_STATS_HPP_
