// stats.cpp
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

#include "phonotax/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <unordered_map>

#include "phonotax/error.hpp"
#include "phonotax/text.hpp"

namespace phonotax {

double pearson_r(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size())
    throw Error(ErrorCode::LengthMismatch, std::to_string(xs.size()) + " vs " +
                                               std::to_string(ys.size()));
  const std::size_t n = xs.size();
  if (n < 3) throw Error(ErrorCode::TooFewSamples, "need at least 3 pairs");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx, dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (!(sxx > 0) || !(syy > 0))
    throw Error(ErrorCode::DegenerateVariance, "a variable is constant");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

TStatistic t_from_r(double r, std::size_t n) {
  if (n < 3) throw Error(ErrorCode::TooFewSamples, "n must be at least 3");
  if (!(r >= -1.0 && r <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "r outside [-1, 1]");
  TStatistic out;
  out.df = n - 2;
  if (std::fabs(r) == 1.0) {
    out.infinite = true;
    out.t = std::copysign(std::numeric_limits<double>::infinity(), r);
    return out;
  }
  out.t = r * std::sqrt(static_cast<double>(out.df) / (1.0 - r * r));
  return out;
}

namespace {

// Continued fraction for I_x(a, b), valid for x < (a + 1) / (a + b + 2).
double beta_continued_fraction(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  constexpr int kMaxIter = 10000;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0) || !(b > 0.0) || !(x >= 0.0 && x <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "incomplete beta outside domain");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_continued_fraction(x, a, b) / a;
  return 1.0 - front * beta_continued_fraction(1.0 - x, b, a) / b;
}

double p_two_tailed(double t, double df) {
  if (!(df >= 1.0)) throw Error(ErrorCode::InvalidArgument, "df must be >= 1");
  if (std::isnan(t)) throw Error(ErrorCode::InvalidArgument, "t is NaN");
  if (std::isinf(t)) return 0.0;
  if (t == 0.0) return 1.0;
  const double x = df / (df + t * t);
  return std::clamp(regularized_incomplete_beta(x, df / 2.0, 0.5), 0.0, 1.0);
}

Significance significance_of(double p) {
  if (p < 0.001) return Significance::P001;
  if (p < 0.01) return Significance::P01;
  if (p < 0.05) return Significance::P05;
  return Significance::NotSignificant;
}

std::string_view significance_label(Significance s) {
  switch (s) {
    case Significance::P001: return "p < .001";
    case Significance::P01: return "p < .01";
    case Significance::P05: return "p < .05";
    case Significance::NotSignificant: return "n.s.";
  }
  return "";
}

std::vector<JudgmentRecord> load_judgments(std::string_view csv) {
  auto lines = text::split_lines(csv);
  std::size_t i = 0;
  while (i < lines.size() && text::trim(lines[i]).empty()) ++i;
  if (i == lines.size() || text::trim(lines[i]) != "word_id,votes_against")
    throw Error(ErrorCode::MalformedJudgment,
                "expected header 'word_id,votes_against'");
  std::vector<JudgmentRecord> out;
  std::set<std::string> ids;
  for (++i; i < lines.size(); ++i) {
    std::string_view line = text::trim(lines[i]);
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(i + 1);
    auto fields = text::split(line, ',');
    if (fields.size() != 2 || text::trim(fields[0]).empty())
      throw Error(ErrorCode::MalformedJudgment, where + ": expected 2 fields");
    std::string_view votes = text::trim(fields[1]);
    int v = 0;
    if (votes.empty() || votes.size() > 3)
      throw Error(ErrorCode::MalformedJudgment, where + ": bad vote count");
    for (char c : votes) {
      if (c < '0' || c > '9')
        throw Error(ErrorCode::MalformedJudgment, where + ": bad vote count");
      v = v * 10 + (c - '0');
    }
    if (v > kMaxVotes)
      throw Error(ErrorCode::MalformedJudgment,
                  where + ": votes must lie in 0..12");
    JudgmentRecord rec{std::string(text::trim(fields[0])), v};
    if (!ids.insert(rec.word_id).second)
      throw Error(ErrorCode::DuplicateId, rec.word_id);
    out.push_back(std::move(rec));
  }
  return out;
}

std::string format_judgments(const std::vector<JudgmentRecord>& records) {
  std::string out = "word_id,votes_against\n";
  for (const auto& r : records)
    out += r.word_id + "," + std::to_string(r.votes_against) + "\n";
  return out;
}

Evaluation evaluate(const std::vector<BatchRow>& rows,
                    const std::vector<JudgmentRecord>& judgments) {
  std::unordered_map<std::string, int> votes;
  for (const auto& j : judgments)
    if (!votes.emplace(j.word_id, j.votes_against).second)
      throw Error(ErrorCode::DuplicateId, "judgment " + j.word_id);

  std::set<std::string> seen_ids;
  std::vector<const BatchRow*> joined;
  for (const auto& row : rows) {
    if (!seen_ids.insert(row.word_id).second)
      throw Error(ErrorCode::DuplicateId, "stimulus " + row.word_id);
    if (row.report && votes.count(row.word_id)) joined.push_back(&row);
  }
  if (joined.empty())
    throw Error(ErrorCode::JoinEmpty, "no scored word has a judgment");
  if (joined.size() < 3)
    throw Error(ErrorCode::TooFewSamples,
                "only " + std::to_string(joined.size()) + " joined words");

  Evaluation out;
  std::vector<double> ys;
  for (const BatchRow* row : joined) {
    const int v = votes.at(row->word_id);
    ys.push_back(v);
    out.scatter.push_back({row->word_id, row->report->ln_p_word, v});
  }
  for (ScoringMethod method : kScoringMethods) {
    std::vector<double> xs;
    for (const BatchRow* row : joined) xs.push_back(score_value(*row->report, method));
    CorrelationResult c;
    c.method = method;
    c.n = joined.size();
    c.r = pearson_r(xs, ys);
    const TStatistic t = t_from_r(c.r, c.n);
    c.df = t.df;
    c.t = t.t;
    c.p = p_two_tailed(t.t, static_cast<double>(t.df));
    c.significance = significance_of(c.p);
    out.results.push_back(c);
  }
  return out;
}

std::string format_significance_table(const Evaluation& evaluation) {
  std::string out =
      "method\tscoring\tr\tn\tdf\tt\tp\tsignificance\n";
  int i = 1;
  char buf[256];
  for (const auto& c : evaluation.results) {
    std::snprintf(buf, sizeof buf, "%d\t%s\t%.6f\t%zu\t%zu\t%.6f\t%.6g\t%s\n", i++,
                  std::string(scoring_method_name(c.method)).c_str(), c.r, c.n,
                  c.df, c.t, c.p,
                  std::string(significance_label(c.significance)).c_str());
    out += buf;
  }
  return out;
}

std::string format_scatter_csv(const Evaluation& evaluation) {
  std::string out = "word_id,ln_p,votes\n";
  for (const auto& row : evaluation.scatter)
    out += row.word_id + "," + text::format_double(row.ln_p) + "," +
           std::to_string(row.votes) + "\n";
  return out;
}

namespace {

std::string fmt2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_scatter_svg(const Evaluation& evaluation) {
  constexpr double kLeft = 70, kRight = 770, kTop = 30, kBottom = 390;
  double lo = 0.0, hi = 0.0;
  if (!evaluation.scatter.empty()) {
    lo = hi = evaluation.scatter.front().ln_p;
    for (const auto& r : evaluation.scatter) {
      lo = std::min(lo, r.ln_p);
      hi = std::max(hi, r.ln_p);
    }
  }
  // Whole multiples of 5 around the data, as on a hand-drawn axis.
  double x_min = std::floor(lo / 5.0) * 5.0;
  double x_max = std::ceil(hi / 5.0) * 5.0;
  if (x_max - x_min < 5.0) x_max = x_min + 5.0;
  auto sx = [&](double v) {
    return kLeft + (v - x_min) / (x_max - x_min) * (kRight - kLeft);
  };
  auto sy = [&](double v) {
    return kBottom - v / kMaxVotes * (kBottom - kTop);
  };

  std::string out(kSvgHeader);
  out += "\n<rect x=\"0\" y=\"0\" width=\"800\" height=\"450\" fill=\"white\"/>\n";
  out += "<g stroke=\"black\" stroke-width=\"1\">\n";
  out += "<line x1=\"" + fmt2(kLeft) + "\" y1=\"" + fmt2(kBottom) + "\" x2=\"" +
         fmt2(kRight) + "\" y2=\"" + fmt2(kBottom) + "\"/>\n";
  out += "<line x1=\"" + fmt2(kLeft) + "\" y1=\"" + fmt2(kTop) + "\" x2=\"" +
         fmt2(kLeft) + "\" y2=\"" + fmt2(kBottom) + "\"/>\n";
  out += "</g>\n<g font-family=\"sans-serif\" font-size=\"12\">\n";
  for (double v = x_min; v <= x_max + 1e-9; v += 5.0) {
    const double x = sx(v);
    out += "<line x1=\"" + fmt2(x) + "\" y1=\"" + fmt2(kBottom) + "\" x2=\"" +
           fmt2(x) + "\" y2=\"" + fmt2(kBottom + 5) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt2(x) + "\" y=\"" + fmt2(kBottom + 20) +
           "\" text-anchor=\"middle\">" + std::to_string(static_cast<int>(v)) +
           "</text>\n";
  }
  for (int v = 0; v <= kMaxVotes; v += 2) {
    const double y = sy(v);
    out += "<line x1=\"" + fmt2(kLeft - 5) + "\" y1=\"" + fmt2(y) + "\" x2=\"" +
           fmt2(kLeft) + "\" y2=\"" + fmt2(y) + "\" stroke=\"black\"/>\n";
    out += "<text x=\"" + fmt2(kLeft - 10) + "\" y=\"" + fmt2(y + 4) +
           "\" text-anchor=\"end\">" + std::to_string(v) + "</text>\n";
  }
  out += "<text x=\"420.00\" y=\"435.00\" text-anchor=\"middle\">"
         "ln(parse probability)</text>\n";
  out += "<text x=\"20.00\" y=\"210.00\" text-anchor=\"middle\" "
         "transform=\"rotate(-90 20.00 210.00)\"># votes against "
         "well-formedness</text>\n";
  out += "</g>\n<g fill=\"black\">\n";
  for (const auto& r : evaluation.scatter) {
    out += "<circle cx=\"" + fmt2(sx(r.ln_p)) + "\" cy=\"" + fmt2(sy(r.votes)) +
           "\" r=\"3\"><title>" + xml_escape(r.word_id) + "</title></circle>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

std::vector<JudgmentRecord> synthetic_judgments(
    const std::vector<BatchRow>& rows, const SyntheticJudgmentParams& params) {
  std::vector<const BatchRow*> scored;
  for (const auto& row : rows)
    if (row.report) scored.push_back(&row);
  if (scored.empty()) return {};
  double lo = -scored.front()->report->ln_p_word, hi = lo;
  for (const BatchRow* row : scored) {
    lo = std::min(lo, -row->report->ln_p_word);
    hi = std::max(hi, -row->report->ln_p_word);
  }
  const double span = hi > lo ? hi - lo : 1.0;

  // Box-Muller over raw 53-bit draws keeps the stream identical across
  // standard libraries.
  std::mt19937_64 rng(params.seed);
  auto uniform = [&rng] {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
  };
  std::vector<JudgmentRecord> out;
  for (const BatchRow* row : scored) {
    const double u1 = uniform(), u2 = uniform();
    const double z =
        std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    const double base = (-row->report->ln_p_word - lo) / span * kMaxVotes;
    const double v = std::round(base + params.noise_sd * z);
    out.push_back({row->word_id,
                   static_cast<int>(std::clamp(v, 0.0, double(kMaxVotes)))});
  }
  return out;
}

}  // namespace phonotax
