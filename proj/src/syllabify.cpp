// syllabify.cpp
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

#include "phonotax/syllabify.hpp"

#include "phonotax/error.hpp"

namespace phonotax {

namespace {

Terminal symbols_of(std::span<const Token> tokens) {
  Terminal out;
  out.reserve(tokens.size());
  for (const Token& tok : tokens) out.push_back(tok.symbol);
  return out;
}

std::size_t first_vowel(std::span<const Token> word) {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i].is_vowel()) return i;
  return word.size();
}

Stress stress_of(const Token& vowel) {
  return vowel.stress && *vowel.stress == 0 ? Stress::Weak : Stress::Strong;
}

}  // namespace

OnsetCollection collect_word_onsets(std::span<const Transcription> corpus) {
  if (corpus.empty()) throw Error(ErrorCode::EmptyCorpus, "no transcriptions");
  OnsetCollection out;
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const auto words = corpus[n].words();
    bool ok = true;
    for (auto word : words) ok = ok && first_vowel(word) < word.size();
    if (!ok) {
      out.skipped.push_back(n);
      continue;
    }
    for (auto word : words)
      out.onsets.insert(symbols_of(word.first(first_vowel(word))));
  }
  return out;
}

std::string_view medial_split_name(MedialSplit policy) {
  return policy == MedialSplit::MaxOnset ? "max-onset" : "always-split-cc";
}

MedialSplit medial_split_from_name(std::string_view name) {
  if (name == "max-onset") return MedialSplit::MaxOnset;
  if (name == "always-split-cc") return MedialSplit::AlwaysSplitCC;
  throw Error(ErrorCode::InvalidArgument,
              "unknown medial split policy '" + std::string(name) + "'");
}

std::size_t Syllabification::syllable_count() const {
  std::size_t n = 0;
  for (const auto& w : words) n += w.size();
  return n;
}

std::size_t medial_onset_length(std::span<const Token> cluster,
                                const WordOnsetSet& onsets, MedialSplit policy) {
  for (std::size_t len = cluster.size(); len > 0; --len) {
    auto suffix = cluster.last(len);
    if (policy == MedialSplit::AlwaysSplitCC && len >= 2 &&
        suffix.front().symbol != "s")
      continue;
    if (onsets.contains(symbols_of(suffix))) return len;
  }
  return 0;
}

Syllabification syllabify(const Transcription& t, const WordOnsetSet& onsets,
                          MedialSplit policy) {
  Syllabification out;
  for (auto word : t.words()) {
    std::vector<std::size_t> nuclei;
    for (std::size_t i = 0; i < word.size(); ++i)
      if (word[i].is_vowel()) nuclei.push_back(i);
    if (nuclei.empty()) throw Error(ErrorCode::NoNucleus, format(t));
    if (nuclei.size() > 2) throw Error(ErrorCode::ThreePlusNuclei, format(t));

    std::vector<Syllable> syllables;
    if (nuclei.size() == 1) {
      syllables.push_back(Syllable{symbols_of(word.first(nuclei[0])),
                                   symbols_of(word.subspan(nuclei[0])),
                                   stress_of(word[nuclei[0]])});
    } else {
      const std::size_t v1 = nuclei[0], v2 = nuclei[1];
      auto cluster = word.subspan(v1 + 1, v2 - v1 - 1);
      const std::size_t split =
          v2 - medial_onset_length(cluster, onsets, policy);
      syllables.push_back(Syllable{symbols_of(word.first(v1)),
                                   symbols_of(word.subspan(v1, split - v1)),
                                   stress_of(word[v1])});
      syllables.push_back(Syllable{symbols_of(word.subspan(split, v2 - split)),
                                   symbols_of(word.subspan(v2)),
                                   stress_of(word[v2])});
    }
    out.words.push_back(std::move(syllables));
  }
  return out;
}

}  // namespace phonotax
