// train.hpp
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

#ifndef PHONOTAX_TRAIN_HPP_
#define PHONOTAX_TRAIN_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonotax/grammar.hpp"
#include "phonotax/phonology.hpp"
#include "phonotax/syllabify.hpp"

namespace phonotax {

struct LexiconEntry {
  std::string orthography;
  Transcription transcription;
  StressPattern stress;  // training-time stress, after the conventions below
  std::size_t line = 0;
};

enum class SkipReason {
  Malformed,
  InvalidTranscription,
  NoNucleus,
  OutOfScope,
  MissingStress,
  UnsupportedStressPattern,
};

std::string_view skip_reason_name(SkipReason reason);

struct SkippedLine {
  std::size_t line = 0;
  SkipReason reason = SkipReason::Malformed;
  std::string detail;
};

struct IngestResult {
  std::vector<LexiconEntry> entries;
  std::vector<SkippedLine> skipped;

  std::map<SkipReason, std::size_t> skip_counts() const;
};

// Stress as tabulated in training:
//  - an undigited monosyllable is Strong (main word stress);
//  - each half of a `+` compound is a monosyllabic word, hence Strong;
//  - in a disyllable, digit 2 next to digit 1 counts as Weak, other 2s Strong.
// Throws NoNucleus / OutOfScope / MissingStress.
StressPattern training_stress(const Transcription& t);

// Reads `orthography<TAB>transcription` lines. Bad lines are skipped and
// reported; throws EmptyCorpus only when nothing survives.
IngestResult ingest_lexicon(std::string_view document,
                            const PhonemeInventory& inventory);

// Onset and rhyme paths for one entry, tagged by the entry's unique template.
std::vector<PathType> extract_paths(const LexiconEntry& entry,
                                    const WordOnsetSet& onsets,
                                    MedialSplit policy = MedialSplit::MaxOnset);

// Exact path counts per cell.
class PathTable {
 public:
  void add(const PathType& path, std::uint64_t count = 1);

  std::uint64_t count(const Cell& cell, const Terminal& terminal) const;
  std::uint64_t total(const Cell& cell) const {
    return totals_[cell.index()];
  }
  std::uint64_t total() const { return total_; }
  // N_r(c): number of terminals seen exactly r times in the cell.
  std::map<std::uint64_t, std::uint64_t> frequency_of_frequencies(
      const Cell& cell) const;
  std::uint64_t singletons(const Cell& cell) const;

  const std::map<Terminal, std::uint64_t>& counts(const Cell& cell) const {
    return counts_[cell.index()];
  }

  friend bool operator==(const PathTable&, const PathTable&) = default;

 private:
  std::array<std::map<Terminal, std::uint64_t>, kCellCount> counts_;
  std::array<std::uint64_t, kCellCount> totals_{};
  std::uint64_t total_ = 0;
};

PathTable tabulate(std::span<const PathType> paths);

enum class GoodTuringMode { Simple, Full };

std::string_view good_turing_mode_name(GoodTuringMode mode);
GoodTuringMode good_turing_mode_from_name(std::string_view name);

struct ModelConfig {
  std::uint64_t inventory_fingerprint = 0;
  MedialSplit medial_split = MedialSplit::MaxOnset;
  GoodTuringMode good_turing = GoodTuringMode::Simple;
  double epsilon = 1e-9;  // query value for a cell with no observations

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

struct CellModel {
  std::map<Terminal, double> probabilities;
  double unseen = 1.0;  // p0(c)
  bool all_mass_unseen = true;

  friend bool operator==(const CellModel&, const CellModel&) = default;
};

struct Lookup {
  double probability = 0.0;
  bool seen = false;
};

class TrainedModel {
 public:
  TrainedModel(PathTable table, std::array<CellModel, kCellCount> cells,
               ModelConfig config)
      : table_(std::move(table)), cells_(std::move(cells)), config_(config) {}

  // Seen terminals get their smoothed probability; an unseen terminal gets
  // p0(c) itself, or epsilon when the cell was never observed.
  Lookup lookup(const Cell& cell, const Terminal& terminal) const;
  Lookup lookup(const PathType& path) const {
    return lookup(path.cell(), path.terminal);
  }

  const PathTable& table() const { return table_; }
  const CellModel& cell(const Cell& c) const { return cells_[c.index()]; }
  const ModelConfig& config() const { return config_; }

  friend bool operator==(const TrainedModel&, const TrainedModel&) = default;

 private:
  PathTable table_;
  std::array<CellModel, kCellCount> cells_;
  ModelConfig config_;
};

// Unseen mass p0(c) = N1(c)/N(c), clamped to [1/(2N(c)), 1/2]. Seen terminals
// share the remaining 1 - p0(c): in proportion to their counts (Simple), or
// to per-r Good-Turing adjusted counts (Full).
TrainedModel good_turing(const PathTable& table, ModelConfig config = {});

struct TopRow {
  Terminal terminal;
  std::uint64_t count = 0;

  friend bool operator==(const TopRow&, const TopRow&) = default;
};

// Most frequent terminals of a cell: count descending, then terminal text.
std::vector<TopRow> top_k(const TrainedModel& model, const Cell& cell,
                          std::size_t k);

inline constexpr std::string_view kModelHeader = "phonotax-model v1";

std::string save_model(const TrainedModel& model);
TrainedModel load_model(std::string_view document);

// Whole training pipeline.
struct TrainingReport {
  std::size_t lines_retained = 0;  // entries that produced paths
  std::vector<SkippedLine> skipped;
  std::vector<std::size_t> onset_pass_skipped;
  std::size_t attested_onsets = 0;
  std::uint64_t path_instances = 0;

  std::map<SkipReason, std::size_t> skip_counts() const;
};

struct TrainingResult {
  TrainedModel model;
  TrainingReport report;
};

TrainingResult train(std::string_view lexicon_document,
                     const PhonemeInventory& inventory, ModelConfig config);

// Human-readable summary: retained/skipped counts, totals, per-cell N(c).
std::string format_training_report(const TrainingResult& result);

// Side-by-side onset and rhyme columns of the k most frequent terminals.
std::string format_top_table(const TrainedModel& model, std::size_t k);

}  // namespace phonotax

#endif  // PHONOTAX_TRAIN_HPP_
