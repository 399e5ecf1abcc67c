// grammar.cpp
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

#include "phonotax/grammar.hpp"

#include "phonotax/error.hpp"
#include "phonotax/text.hpp"

namespace phonotax {

namespace {

std::string_view position_tag(Position p) {
  switch (p) {
    case Position::Initial: return "i";
    case Position::Final: return "f";
    case Position::InitialFinal: return "if";
  }
  return "";
}

std::optional<Position> position_from_tag(std::string_view tag) {
  if (tag == "i") return Position::Initial;
  if (tag == "f") return Position::Final;
  if (tag == "if") return Position::InitialFinal;
  return std::nullopt;
}

std::optional<std::pair<Stress, Position>> read_tags(std::string_view tags) {
  if (tags.empty()) return std::nullopt;
  Stress s;
  if (tags.front() == 's')
    s = Stress::Strong;
  else if (tags.front() == 'w')
    s = Stress::Weak;
  else
    return std::nullopt;
  auto p = position_from_tag(tags.substr(1));
  if (!p) return std::nullopt;
  return std::pair{s, *p};
}

std::string tags(const SyllableCategory& c) {
  return std::string(c.stress == Stress::Strong ? "s" : "w") +
         std::string(position_tag(c.position));
}

}  // namespace

std::string SyllableCategory::label() const { return "S" + tags(*this); }

std::string Cell::label() const {
  return (kind == ConstituentKind::Onset ? "O" : "R") + tags(syllable);
}

std::size_t Cell::index() const {
  const std::size_t s = syllable.stress == Stress::Strong ? 0 : 1;
  const std::size_t p = static_cast<std::size_t>(syllable.position);
  const std::size_t k = kind == ConstituentKind::Onset ? 0 : 1;
  return (k * 2 + s) * 3 + p;
}

Cell Cell::from_index(std::size_t index) {
  if (index >= kCellCount)
    throw Error(ErrorCode::InvalidArgument, "cell index out of range");
  Cell c;
  c.syllable.position = static_cast<Position>(index % 3);
  c.syllable.stress = (index / 3) % 2 == 0 ? Stress::Strong : Stress::Weak;
  c.kind = index / 6 == 0 ? ConstituentKind::Onset : ConstituentKind::Rhyme;
  return c;
}

std::optional<Cell> Cell::from_label(std::string_view label) {
  if (label.empty()) return std::nullopt;
  ConstituentKind kind;
  if (label.front() == 'O')
    kind = ConstituentKind::Onset;
  else if (label.front() == 'R')
    kind = ConstituentKind::Rhyme;
  else
    return std::nullopt;
  auto t = read_tags(label.substr(1));
  if (!t) return std::nullopt;
  return Cell{SyllableCategory{t->first, t->second}, kind};
}

std::optional<SyllableCategory> syllable_from_label(std::string_view label) {
  if (label.empty() || label.front() != 'S') return std::nullopt;
  auto t = read_tags(label.substr(1));
  if (!t) return std::nullopt;
  return SyllableCategory{t->first, t->second};
}

const std::array<Cell, kCellCount>& report_order() {
  static const std::array<Cell, kCellCount> order = [] {
    std::array<Cell, kCellCount> out;
    const std::pair<Stress, Position> seq[] = {
        {Stress::Strong, Position::Final},   {Stress::Strong, Position::InitialFinal},
        {Stress::Strong, Position::Initial}, {Stress::Weak, Position::Final},
        {Stress::Weak, Position::Initial},   {Stress::Weak, Position::InitialFinal}};
    std::size_t i = 0;
    for (ConstituentKind k : {ConstituentKind::Onset, ConstituentKind::Rhyme})
      for (auto [s, p] : seq) out[i++] = Cell{SyllableCategory{s, p}, k};
    return out;
  }();
  return order;
}

std::size_t WordTemplate::syllable_count() const {
  std::size_t n = 0;
  for (const auto& w : words) n += w.size();
  return n;
}

std::vector<SyllableCategory> WordTemplate::syllables() const {
  std::vector<SyllableCategory> out;
  for (const auto& w : words) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::string WordTemplate::label() const {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += ' ';
    out += "W[";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += ' ';
      out += w[i].label();
    }
    out += ']';
  }
  return out;
}

std::vector<WordTemplate> templates_for(const StressPattern& pattern) {
  using S = SyllableCategory;
  constexpr auto kS = Stress::Strong;
  constexpr auto kW = Stress::Weak;
  if (pattern.empty())
    throw Error(ErrorCode::NoNucleus, "empty stress pattern");
  if (pattern.size() > 2)
    throw Error(ErrorCode::OutOfScope,
                std::to_string(pattern.size()) + " syllables");
  if (pattern.size() == 1)
    return {WordTemplate{{{S{pattern[0], Position::InitialFinal}}}}};
  const Stress a = pattern[0], b = pattern[1];
  if (a == kW && b == kW)
    throw Error(ErrorCode::UnsupportedStressPattern, "no rule expands to Sw Sw");
  std::vector<WordTemplate> out;
  out.push_back(
      WordTemplate{{{S{a, Position::Initial}, S{b, Position::Final}}}});
  if (a == kS && b == kS)
    out.push_back(WordTemplate{{{S{kS, Position::InitialFinal}},
                                {S{kS, Position::InitialFinal}}}});
  return out;
}

std::string terminal_text(const Terminal& terminal) {
  if (terminal.empty()) return std::string(kNullTerminal);
  return text::join(terminal, " ");
}

std::string terminal_display(const Terminal& terminal) {
  if (terminal.empty()) return std::string(kNullTerminal);
  return text::join(terminal, "");
}

Terminal terminal_from_text(std::string_view s) {
  s = text::trim(s);
  if (s == kNullTerminal) return {};
  Terminal out;
  for (auto piece : text::split_whitespace(s)) {
    if (piece == kNullTerminal)
      throw Error(ErrorCode::MalformedPath, "null marker inside a terminal");
    out.emplace_back(piece);
  }
  if (out.empty()) throw Error(ErrorCode::MalformedPath, "missing terminal");
  return out;
}

std::string format_path(const PathType& path) {
  return "U : W : " + path.syllable.label() + " : " + path.cell().label() +
         " : " + terminal_text(path.terminal);
}

PathType parse_path(std::string_view s) {
  std::vector<std::string_view> parts;
  std::string_view rest = s;
  for (int i = 0; i < 4; ++i) {
    std::size_t pos = rest.find(" : ");
    if (pos == std::string_view::npos)
      throw Error(ErrorCode::MalformedPath, "'" + std::string(s) + "'");
    parts.push_back(rest.substr(0, pos));
    rest = rest.substr(pos + 3);
  }
  parts.push_back(rest);
  if (parts[0] != "U" || parts[1] != "W")
    throw Error(ErrorCode::MalformedPath,
                "path must start 'U : W : ' in '" + std::string(s) + "'");
  auto syllable = syllable_from_label(parts[2]);
  auto cell = Cell::from_label(parts[3]);
  if (!syllable || !cell)
    throw Error(ErrorCode::MalformedPath, "bad label in '" + std::string(s) + "'");
  if (!(cell->syllable == *syllable))
    throw Error(ErrorCode::TagMismatch, syllable->label() +
                                            " cannot dominate " + cell->label());
  return PathType{*syllable, cell->kind, terminal_from_text(parts[4])};
}

UnifyResult sequential_unify(const WordTemplate& word_template,
                             const std::vector<PathType>& paths) {
  std::vector<Cell> expected;
  for (const auto& syl : word_template.syllables()) {
    expected.push_back(Cell{syl, ConstituentKind::Onset});
    expected.push_back(Cell{syl, ConstituentKind::Rhyme});
  }
  auto fail = [&](std::size_t i, std::string message) {
    UnifyFailure f;
    f.index = i;
    if (i > 0) f.left = paths[i - 1].cell();
    if (i < paths.size()) f.right = paths[i].cell();
    if (i < expected.size()) f.expected = expected[i];
    f.message = std::move(message);
    return f;
  };
  if (paths.empty()) return fail(0, "no paths to unify");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i >= expected.size())
      return fail(i, "template " + word_template.label() + " is complete; " +
                         paths[i].cell().label() + " has nowhere to attach");
    const Cell got = paths[i].cell();
    if (!(got == expected[i])) {
      std::string msg = i == 0 ? got.label() + " cannot begin "
                                 : paths[i - 1].cell().label() +
                                       " is not followed by " + got.label() +
                                       " in ";
      msg += word_template.label() + "; requires " + expected[i].label();
      return fail(i, std::move(msg));
    }
  }
  if (paths.size() < expected.size())
    return fail(paths.size(), paths.back().cell().label() +
                                  " is not followed by " +
                                  expected[paths.size()].label() +
                                  " as it requires");
  return UnifiedParse{word_template, paths};
}

}  // namespace phonotax
