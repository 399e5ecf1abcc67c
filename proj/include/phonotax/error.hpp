// error.hpp
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

#ifndef PHONOTAX_ERROR_HPP_
#define PHONOTAX_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace phonotax {

enum class ErrorCode {
  // phonology
  EmptyDocument,
  DuplicateSymbol,
  UnknownClass,
  MissingClass,
  IncompleteInventory,
  UnknownSymbol,
  BadStressDigit,
  StressOnConsonant,
  MultipleBoundaries,
  MisplacedBoundary,
  EmptyInput,
  NoNucleus,
  MissingStress,
  // grammar
  UnsupportedStressPattern,
  OutOfScope,
  TagMismatch,
  MalformedPath,
  // syllabify / train
  ThreePlusNuclei,
  EmptyCorpus,
  EmptyPathList,
  Corrupt,
  VersionMismatch,
  InventoryMismatch,
  // stats
  LengthMismatch,
  TooFewSamples,
  DegenerateVariance,
  JoinEmpty,
  DuplicateId,
  MalformedJudgment,
  // io
  Io,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

// All library failures surface as this exception; `code()` is stable and is
// what tests and the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phonotax

#endif  // PHONOTAX_ERROR_HPP_
