// syllabify.hpp
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

#ifndef PHONOTAX_SYLLABIFY_HPP_
#define PHONOTAX_SYLLABIFY_HPP_

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonotax/grammar.hpp"
#include "phonotax/phonology.hpp"

namespace phonotax {

// Consonant clusters attested word-initially in a lexicon, including the
// empty cluster when some word starts with a vowel.
class WordOnsetSet {
 public:
  void insert(Terminal cluster) { clusters_.insert(std::move(cluster)); }
  bool contains(const Terminal& cluster) const {
    return clusters_.count(cluster) != 0;
  }
  std::size_t size() const { return clusters_.size(); }
  const std::set<Terminal>& clusters() const { return clusters_; }

 private:
  std::set<Terminal> clusters_;
};

struct OnsetCollection {
  WordOnsetSet onsets;
  std::vector<std::size_t> skipped;  // corpus indices with a vowelless word
};

// First pass over a training corpus. Each phonological word (both halves of
// a compound) contributes its maximal consonant prefix.
OnsetCollection collect_word_onsets(std::span<const Transcription> corpus);

enum class MedialSplit {
  // Onset of syllable 2 = longest attested suffix of the medial cluster.
  MaxOnset,
  // As MaxOnset, but suffixes of two or more consonants qualify only when
  // they begin with /s/; other clusters split with at most one consonant
  // going rightward.
  AlwaysSplitCC,
};

std::string_view medial_split_name(MedialSplit policy);
MedialSplit medial_split_from_name(std::string_view name);

struct Syllable {
  Terminal onset;
  Terminal rhyme;
  Stress stress = Stress::Strong;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

struct Syllabification {
  std::vector<std::vector<Syllable>> words;

  std::size_t syllable_count() const;
};

// Number of consonants (counted from the end of `cluster`) that start the
// next syllable under `policy`.
std::size_t medial_onset_length(std::span<const Token> cluster,
                                const WordOnsetSet& onsets, MedialSplit policy);

Syllabification syllabify(const Transcription& t, const WordOnsetSet& onsets,
                          MedialSplit policy = MedialSplit::MaxOnset);

}  // namespace phonotax

#endif  // PHONOTAX_SYLLABIFY_HPP_
