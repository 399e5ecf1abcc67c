// error.cpp
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

#include "phonotax/error.hpp"

namespace phonotax {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyDocument: return "EmptyDocument";
    case ErrorCode::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorCode::UnknownClass: return "UnknownClass";
    case ErrorCode::MissingClass: return "MissingClass";
    case ErrorCode::IncompleteInventory: return "IncompleteInventory";
    case ErrorCode::UnknownSymbol: return "UnknownSymbol";
    case ErrorCode::BadStressDigit: return "BadStressDigit";
    case ErrorCode::StressOnConsonant: return "StressOnConsonant";
    case ErrorCode::MultipleBoundaries: return "MultipleBoundaries";
    case ErrorCode::MisplacedBoundary: return "MisplacedBoundary";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NoNucleus: return "NoNucleus";
    case ErrorCode::MissingStress: return "MissingStress";
    case ErrorCode::UnsupportedStressPattern: return "UnsupportedStressPattern";
    case ErrorCode::OutOfScope: return "OutOfScope";
    case ErrorCode::TagMismatch: return "TagMismatch";
    case ErrorCode::MalformedPath: return "MalformedPath";
    case ErrorCode::ThreePlusNuclei: return "ThreePlusNuclei";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::EmptyPathList: return "EmptyPathList";
    case ErrorCode::Corrupt: return "Corrupt";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::InventoryMismatch: return "InventoryMismatch";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::TooFewSamples: return "TooFewSamples";
    case ErrorCode::DegenerateVariance: return "DegenerateVariance";
    case ErrorCode::JoinEmpty: return "JoinEmpty";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::MalformedJudgment: return "MalformedJudgment";
    case ErrorCode::Io: return "Io";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace phonotax
