// train.cpp
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

#include "phonotax/train.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "phonotax/error.hpp"
#include "phonotax/text.hpp"

namespace phonotax {

std::string_view skip_reason_name(SkipReason reason) {
  switch (reason) {
    case SkipReason::Malformed: return "Malformed";
    case SkipReason::InvalidTranscription: return "InvalidTranscription";
    case SkipReason::NoNucleus: return "NoNucleus";
    case SkipReason::OutOfScope: return "OutOfScope";
    case SkipReason::MissingStress: return "MissingStress";
    case SkipReason::UnsupportedStressPattern: return "UnsupportedStressPattern";
  }
  return "Unknown";
}

static std::map<SkipReason, std::size_t> count_reasons(
    const std::vector<SkippedLine>& skipped) {
  std::map<SkipReason, std::size_t> out;
  for (const auto& s : skipped) ++out[s.reason];
  return out;
}

std::map<SkipReason, std::size_t> IngestResult::skip_counts() const {
  return count_reasons(skipped);
}

std::map<SkipReason, std::size_t> TrainingReport::skip_counts() const {
  return count_reasons(skipped);
}

StressPattern training_stress(const Transcription& t) {
  const auto words = t.words();
  std::size_t total = 0;
  for (auto w : words) {
    const std::size_t v = count_vowels(w);
    if (v == 0) throw Error(ErrorCode::NoNucleus, format(t));
    total += v;
  }
  if (total > 2) throw Error(ErrorCode::OutOfScope, format(t));
  if (words.size() == 2) return {Stress::Strong, Stress::Strong};

  std::vector<std::optional<int>> digits;
  for (const Token& tok : t.tokens)
    if (tok.is_vowel()) digits.push_back(tok.stress);
  if (digits.size() == 1)
    return {digits[0] && *digits[0] == 0 ? Stress::Weak : Stress::Strong};
  if (!digits[0] || !digits[1]) throw Error(ErrorCode::MissingStress, format(t));
  StressPattern out;
  for (std::size_t i = 0; i < 2; ++i) {
    const int d = *digits[i];
    const int other = *digits[1 - i];
    if (d == 0 || (d == 2 && other == 1))
      out.push_back(Stress::Weak);
    else
      out.push_back(Stress::Strong);
  }
  return out;
}

static SkipReason reason_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoNucleus: return SkipReason::NoNucleus;
    case ErrorCode::OutOfScope:
    case ErrorCode::ThreePlusNuclei: return SkipReason::OutOfScope;
    case ErrorCode::MissingStress: return SkipReason::MissingStress;
    case ErrorCode::UnsupportedStressPattern:
      return SkipReason::UnsupportedStressPattern;
    default: return SkipReason::InvalidTranscription;
  }
}

IngestResult ingest_lexicon(std::string_view document,
                            const PhonemeInventory& inventory) {
  IngestResult out;
  std::size_t line_no = 0;
  for (std::string_view line : text::split_lines(document)) {
    ++line_no;
    if (text::is_skippable(line)) continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string_view::npos || text::trim(line.substr(0, tab)).empty()) {
      out.skipped.push_back({line_no, SkipReason::Malformed,
                             "expected 'orthography<TAB>transcription'"});
      continue;
    }
    LexiconEntry entry;
    entry.orthography = std::string(text::trim(line.substr(0, tab)));
    entry.line = line_no;
    try {
      entry.transcription = tokenize(line.substr(tab + 1), inventory);
      entry.stress = training_stress(entry.transcription);
    } catch (const Error& e) {
      out.skipped.push_back({line_no, reason_for(e.code()), e.what()});
      continue;
    }
    out.entries.push_back(std::move(entry));
  }
  if (out.entries.empty())
    throw Error(ErrorCode::EmptyCorpus, "no lexicon entries retained");
  return out;
}

std::vector<PathType> extract_paths(const LexiconEntry& entry,
                                    const WordOnsetSet& onsets,
                                    MedialSplit policy) {
  const Syllabification syl = syllabify(entry.transcription, onsets, policy);
  WordTemplate tmpl;
  if (entry.transcription.boundary) {
    tmpl = templates_for({Stress::Strong, Stress::Strong}).back();
  } else {
    tmpl = templates_for(entry.stress).front();
  }
  if (tmpl.words.size() != syl.words.size() ||
      tmpl.syllable_count() != syl.syllable_count())
    throw Error(ErrorCode::OutOfScope,
                entry.orthography + " does not fit " + tmpl.label());

  std::vector<PathType> paths;
  const auto categories = tmpl.syllables();
  std::size_t k = 0;
  for (const auto& word : syl.words) {
    for (const auto& s : word) {
      paths.push_back(PathType{categories[k], ConstituentKind::Onset, s.onset});
      paths.push_back(PathType{categories[k], ConstituentKind::Rhyme, s.rhyme});
      ++k;
    }
  }
  return paths;
}

void PathTable::add(const PathType& path, std::uint64_t count) {
  const std::size_t i = path.cell().index();
  counts_[i][path.terminal] += count;
  totals_[i] += count;
  total_ += count;
}

std::uint64_t PathTable::count(const Cell& cell,
                               const Terminal& terminal) const {
  const auto& m = counts_[cell.index()];
  auto it = m.find(terminal);
  return it == m.end() ? 0 : it->second;
}

std::map<std::uint64_t, std::uint64_t> PathTable::frequency_of_frequencies(
    const Cell& cell) const {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [terminal, c] : counts_[cell.index()]) ++out[c];
  return out;
}

std::uint64_t PathTable::singletons(const Cell& cell) const {
  std::uint64_t n = 0;
  for (const auto& [terminal, c] : counts_[cell.index()]) n += (c == 1);
  return n;
}

PathTable tabulate(std::span<const PathType> paths) {
  if (paths.empty()) throw Error(ErrorCode::EmptyPathList, "nothing to tabulate");
  PathTable table;
  for (const auto& p : paths) table.add(p);
  return table;
}

std::string_view good_turing_mode_name(GoodTuringMode mode) {
  return mode == GoodTuringMode::Simple ? "simple" : "full";
}

GoodTuringMode good_turing_mode_from_name(std::string_view name) {
  if (name == "simple") return GoodTuringMode::Simple;
  if (name == "full") return GoodTuringMode::Full;
  throw Error(ErrorCode::InvalidArgument,
              "unknown Good-Turing mode '" + std::string(name) + "'");
}

namespace {

// Adjusted counts r* = (r+1) N_{r+1} / N_r for small r, forced non-decreasing
// so that more frequent terminals never end up less probable.
std::map<std::uint64_t, double> adjusted_counts(
    const std::map<std::uint64_t, std::uint64_t>& freq_of_freq) {
  constexpr std::uint64_t kMaxDiscountedCount = 5;
  std::map<std::uint64_t, double> out;
  double floor = 0.0;
  for (const auto& [r, nr] : freq_of_freq) {
    double adj = static_cast<double>(r);
    auto next = freq_of_freq.find(r + 1);
    if (r <= kMaxDiscountedCount && next != freq_of_freq.end())
      adj = static_cast<double>(r + 1) * static_cast<double>(next->second) /
            static_cast<double>(nr);
    adj = std::max(adj, floor);
    out[r] = adj;
    floor = adj;
  }
  return out;
}

}  // namespace

TrainedModel good_turing(const PathTable& table, ModelConfig config) {
  std::array<CellModel, kCellCount> cells;
  for (std::size_t i = 0; i < kCellCount; ++i) {
    const Cell cell = Cell::from_index(i);
    CellModel& cm = cells[i];
    const std::uint64_t n = table.total(cell);
    if (n == 0) {
      cm.unseen = 1.0;
      cm.all_mass_unseen = true;
      continue;
    }
    cm.all_mass_unseen = false;
    const double total = static_cast<double>(n);
    const double raw = static_cast<double>(table.singletons(cell)) / total;
    cm.unseen = std::clamp(raw, 1.0 / (2.0 * total), 0.5);
    const double seen_mass = 1.0 - cm.unseen;
    if (config.good_turing == GoodTuringMode::Simple) {
      for (const auto& [terminal, c] : table.counts(cell))
        cm.probabilities[terminal] = seen_mass * static_cast<double>(c) / total;
    } else {
      const auto adj = adjusted_counts(table.frequency_of_frequencies(cell));
      double norm = 0.0;
      for (const auto& [terminal, c] : table.counts(cell)) norm += adj.at(c);
      for (const auto& [terminal, c] : table.counts(cell))
        cm.probabilities[terminal] = seen_mass * adj.at(c) / norm;
    }
  }
  return TrainedModel(table, std::move(cells), config);
}

Lookup TrainedModel::lookup(const Cell& cell, const Terminal& terminal) const {
  const CellModel& cm = cells_[cell.index()];
  if (cm.all_mass_unseen) return {config_.epsilon, false};
  auto it = cm.probabilities.find(terminal);
  if (it == cm.probabilities.end()) return {cm.unseen, false};
  return {it->second, true};
}

std::vector<TopRow> top_k(const TrainedModel& model, const Cell& cell,
                          std::size_t k) {
  std::vector<TopRow> rows;
  for (const auto& [terminal, c] : model.table().counts(cell))
    rows.push_back({terminal, c});
  std::sort(rows.begin(), rows.end(), [](const TopRow& a, const TopRow& b) {
    if (a.count != b.count) return a.count > b.count;
    return terminal_text(a.terminal) < terminal_text(b.terminal);
  });
  if (rows.size() > k) rows.resize(k);
  return rows;
}

// ---------------------------------------------------------------------------
// Model file

std::string save_model(const TrainedModel& model) {
  const ModelConfig& cfg = model.config();
  const PathTable& table = model.table();
  std::ostringstream out;
  char fp[32];
  std::snprintf(fp, sizeof fp, "%016llx",
                static_cast<unsigned long long>(cfg.inventory_fingerprint));
  out << kModelHeader << '\n'
      << "inventory\t" << fp << '\n'
      << "medial-split\t" << medial_split_name(cfg.medial_split) << '\n'
      << "good-turing\t" << good_turing_mode_name(cfg.good_turing) << '\n'
      << "epsilon\t" << text::format_double(cfg.epsilon) << '\n'
      << "paths\t" << table.total() << '\n';
  std::size_t records = 0;
  for (const Cell& cell : report_order()) {
    const CellModel& cm = model.cell(cell);
    out << "cell\t" << cell.label() << '\t' << table.total(cell) << '\t'
        << table.singletons(cell) << '\t' << text::format_double(cm.unseen)
        << '\t' << (cm.all_mass_unseen ? "all-unseen" : "seen") << '\n';
    records += table.counts(cell).size();
  }
  out << "records\t" << records << '\n';
  for (const Cell& cell : report_order()) {
    const CellModel& cm = model.cell(cell);
    for (const auto& [terminal, c] : table.counts(cell))
      out << cell.label() << '\t' << terminal_text(terminal) << '\t' << c
          << '\t' << text::format_double(cm.probabilities.at(terminal)) << '\n';
  }
  out << "end\n";
  return out.str();
}

namespace {

[[noreturn]] void corrupt(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Corrupt,
              "model line " + std::to_string(line) + ": " + what);
}

std::uint64_t read_uint(std::string_view s, std::size_t line) {
  if (s.empty()) corrupt(line, "missing integer");
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') corrupt(line, "bad integer '" + std::string(s) + "'");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

double read_double(std::string_view s, std::size_t line) {
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size() || !std::isfinite(v))
    corrupt(line, "bad number '" + buf + "'");
  return v;
}

class LineReader {
 public:
  explicit LineReader(std::string_view doc) : lines_(text::split_lines(doc)) {}

  std::vector<std::string_view> fields(std::string_view key,
                                       std::size_t arity) {
    if (pos_ >= lines_.size()) corrupt(pos_ + 1, "truncated, expected " +
                                                     std::string(key));
    auto f = text::split(lines_[pos_++], '\t');
    if (f.size() != arity + 1 || f[0] != key)
      corrupt(pos_, "expected '" + std::string(key) + "' record");
    f.erase(f.begin());
    return f;
  }
  std::vector<std::string_view> raw(std::size_t arity) {
    if (pos_ >= lines_.size()) corrupt(pos_ + 1, "truncated");
    auto f = text::split(lines_[pos_++], '\t');
    if (f.size() != arity) corrupt(pos_, "wrong field count");
    return f;
  }
  std::string_view next() {
    if (pos_ >= lines_.size()) corrupt(pos_ + 1, "truncated");
    return lines_[pos_++];
  }
  bool done() const { return pos_ >= lines_.size(); }
  std::size_t line() const { return pos_; }

 private:
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

TrainedModel load_model(std::string_view document) {
  LineReader in(document);
  if (document.empty()) corrupt(1, "empty document");
  const std::string_view header = in.next();
  if (header != kModelHeader) {
    if (header.rfind("phonotax-model ", 0) == 0)
      throw Error(ErrorCode::VersionMismatch,
                  "unsupported model version '" + std::string(header) + "'");
    corrupt(1, "not a phonotax model");
  }
  ModelConfig cfg;
  {
    auto f = in.fields("inventory", 1);
    if (f[0].size() != 16) corrupt(in.line(), "bad inventory fingerprint");
    cfg.inventory_fingerprint =
        std::strtoull(std::string(f[0]).c_str(), nullptr, 16);
  }
  try {
    cfg.medial_split = medial_split_from_name(in.fields("medial-split", 1)[0]);
    cfg.good_turing = good_turing_mode_from_name(in.fields("good-turing", 1)[0]);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Corrupt) throw;
    corrupt(in.line(), e.what());
  }
  cfg.epsilon = read_double(in.fields("epsilon", 1)[0], in.line());
  const std::uint64_t total_paths =
      read_uint(in.fields("paths", 1)[0], in.line());

  std::array<CellModel, kCellCount> cells;
  std::array<std::uint64_t, kCellCount> declared_n{}, declared_n1{};
  for (const Cell& cell : report_order()) {
    auto f = in.fields("cell", 5);
    if (f[0] != cell.label()) corrupt(in.line(), "cells out of order");
    const std::size_t i = cell.index();
    declared_n[i] = read_uint(f[1], in.line());
    declared_n1[i] = read_uint(f[2], in.line());
    cells[i].unseen = read_double(f[3], in.line());
    if (f[4] == "seen")
      cells[i].all_mass_unseen = false;
    else if (f[4] == "all-unseen")
      cells[i].all_mass_unseen = true;
    else
      corrupt(in.line(), "bad cell state");
  }
  const std::uint64_t records = read_uint(in.fields("records", 1)[0], in.line());
  PathTable table;
  for (std::uint64_t r = 0; r < records; ++r) {
    auto f = in.raw(4);
    auto cell = Cell::from_label(f[0]);
    if (!cell) corrupt(in.line(), "bad cell label");
    Terminal terminal;
    try {
      terminal = terminal_from_text(f[1]);
    } catch (const Error& e) {
      corrupt(in.line(), e.what());
    }
    const std::uint64_t c = read_uint(f[2], in.line());
    if (c == 0) corrupt(in.line(), "zero count");
    if (table.count(*cell, terminal) != 0) corrupt(in.line(), "duplicate record");
    table.add(PathType{cell->syllable, cell->kind, terminal}, c);
    cells[cell->index()].probabilities[terminal] = read_double(f[3], in.line());
  }
  if (in.next() != "end") corrupt(in.line(), "missing end marker");
  if (!in.done()) corrupt(in.line() + 1, "trailing data");

  if (table.total() != total_paths) corrupt(in.line(), "path total mismatch");
  for (std::size_t i = 0; i < kCellCount; ++i) {
    const Cell cell = Cell::from_index(i);
    if (table.total(cell) != declared_n[i] ||
        table.singletons(cell) != declared_n1[i])
      corrupt(in.line(), cell.label() + " totals disagree with records");
    if (cells[i].all_mass_unseen != (declared_n[i] == 0))
      corrupt(in.line(), cell.label() + " state disagrees with records");
    if (!cells[i].all_mass_unseen) {
      double mass = cells[i].unseen;
      for (const auto& [t, p] : cells[i].probabilities) mass += p;
      if (std::fabs(mass - 1.0) > 1e-9)
        corrupt(in.line(), cell.label() + " probabilities do not sum to one");
    }
  }
  return TrainedModel(std::move(table), std::move(cells), cfg);
}

// ---------------------------------------------------------------------------
// Pipeline

TrainingResult train(std::string_view lexicon_document,
                     const PhonemeInventory& inventory, ModelConfig config) {
  config.inventory_fingerprint = inventory.fingerprint();
  IngestResult ingest = ingest_lexicon(lexicon_document, inventory);

  std::vector<Transcription> corpus;
  corpus.reserve(ingest.entries.size());
  for (const auto& e : ingest.entries) corpus.push_back(e.transcription);
  OnsetCollection onsets = collect_word_onsets(corpus);

  TrainingReport report;
  report.skipped = std::move(ingest.skipped);
  report.onset_pass_skipped = onsets.skipped;
  report.attested_onsets = onsets.onsets.size();

  std::vector<PathType> paths;
  for (const auto& entry : ingest.entries) {
    try {
      auto p = extract_paths(entry, onsets.onsets, config.medial_split);
      paths.insert(paths.end(), p.begin(), p.end());
      ++report.lines_retained;
    } catch (const Error& e) {
      report.skipped.push_back({entry.line, reason_for(e.code()), e.what()});
    }
  }
  std::sort(report.skipped.begin(), report.skipped.end(),
            [](const SkippedLine& a, const SkippedLine& b) { return a.line < b.line; });
  if (paths.empty())
    throw Error(ErrorCode::EmptyCorpus, "no entry produced any paths");
  report.path_instances = paths.size();

  TrainedModel model = good_turing(tabulate(paths), config);
  for (const Cell& cell : report_order()) {
    const CellModel& cm = model.cell(cell);
    if (cm.all_mass_unseen) continue;
    double mass = cm.unseen;
    for (const auto& [t, p] : cm.probabilities) mass += p;
    if (std::fabs(mass - 1.0) > 1e-9)
      throw Error(ErrorCode::Corrupt, cell.label() + " is not normalized");
  }
  return {std::move(model), std::move(report)};
}

std::string format_training_report(const TrainingResult& result) {
  const TrainingReport& r = result.report;
  const PathTable& table = result.model.table();
  std::ostringstream out;
  out << "retained entries: " << r.lines_retained << '\n'
      << "skipped entries: " << r.skipped.size() << '\n';
  for (const auto& [reason, n] : r.skip_counts())
    out << "  " << skip_reason_name(reason) << ": " << n << '\n';
  out << "attested word onsets: " << r.attested_onsets << '\n'
      << "path instances: " << r.path_instances << '\n'
      << "per-category totals:\n";
  for (const Cell& cell : report_order()) {
    const CellModel& cm = result.model.cell(cell);
    out << "  " << cell.label() << "\tN=" << table.total(cell)
        << "\ttypes=" << table.counts(cell).size()
        << "\tN1=" << table.singletons(cell) << "\tp0="
        << (cm.all_mass_unseen ? std::string("all-unseen")
                               : text::format_double(cm.unseen))
        << '\n';
  }
  return out.str();
}

std::string format_top_table(const TrainedModel& model, std::size_t k) {
  std::ostringstream out;
  const auto& order = report_order();
  for (std::size_t block = 0; block < 2; ++block) {
    std::vector<std::vector<std::string>> columns;
    for (std::size_t c = 0; c < 6; ++c) {
      const Cell cell = order[block * 6 + c];
      std::vector<std::string> col{cell.label()};
      for (const auto& row : top_k(model, cell, k))
        col.push_back(terminal_display(row.terminal) + " " +
                      std::to_string(row.count));
      columns.push_back(std::move(col));
    }
    std::size_t rows = 0;
    std::vector<std::size_t> widths;
    for (const auto& col : columns) {
      rows = std::max(rows, col.size());
      std::size_t w = 0;
      for (const auto& s : col) w = std::max(w, text::display_width(s));
      widths.push_back(w);
    }
    if (block) out << '\n';
    for (std::size_t r = 0; r < rows; ++r) {
      std::string line;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        const std::string cell_text = r < columns[c].size() ? columns[c][r] : "";
        line += cell_text;
        if (c + 1 < columns.size())
          line.append(widths[c] - text::display_width(cell_text) + 2, ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out << line << '\n';
    }
  }
  return out.str();
}

}  // namespace phonotax
