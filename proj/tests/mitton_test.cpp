// mitton_test.cpp
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

#include <cstdio>

#include "doctest.h"
#include "phonotax/error.hpp"
#include "phonotax/mitton.hpp"
#include "phonotax/train.hpp"
#include "test_support.hpp"

using namespace phonotax;

namespace {

// Spelling padded to 23 columns, pronunciation in the next 23.
std::string record(const std::string& spelling, const std::string& pron) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%-23s%-23s", spelling.c_str(), pron.c_str());
  return std::string(buf) + "J1%  4\n";
}

}  // namespace

TEST_CASE("convert_mitton_pronunciation") {
  CHECK(convert_mitton_pronunciation("k&t") == "k æ t");
  CHECK(convert_mitton_pronunciation("'k&nd@l") == "k æ1 n d ə0 l");
  CHECK(convert_mitton_pronunciation("@'baUt") == "ə0 b aʊ1 t");
  CHECK(convert_mitton_pronunciation(",k&n'tin") == "k æ2 n t iː1 n");
  CHECK(convert_mitton_pronunciation("'bVs-'boI") == "b ʌ1 s + b ɔɪ1");
  CHECK(convert_mitton_pronunciation("tSIp") == "tʃ ɪ p");
  CHECK(convert_mitton_pronunciation("'sIN@") == "s ɪ1 ŋ ə0");
  CHECK(convert_mitton_pronunciation("'T@UD0") == "θ əʊ1 ð ɒ0");
  try {
    convert_mitton_pronunciation("k&#t");
    FAIL("expected UnknownSymbol");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSymbol);
  }
}

TEST_CASE("import_mitton reads the fixed-column layout") {
  const std::string doc = record("cat", "k&t") + record("candle", "'k&nd@l") +
                          record("bus-boy", "'bVs-'boI") + "short\n" +
                          record("oddity", "'0d#tI") + "\n";
  const MittonImport got = import_mitton(doc);
  CHECK(got.converted == 3);
  REQUIRE(got.issues.size() == 2);
  CHECK(got.issues[0].line == 4);
  CHECK(got.issues[1].line == 5);
  CHECK(got.lexicon ==
        "cat\tk æ t\ncandle\tk æ1 n d ə0 l\nbus-boy\tb ʌ1 s + b ɔɪ1\n");

  // The output is a valid lexicon over the default inventory.
  const IngestResult ingested = ingest_lexicon(got.lexicon, phonotax::testing::ipa());
  CHECK(ingested.entries.size() == 3);
  CHECK(ingested.skipped.empty());
  CHECK(kMittonMappingVersion == "mitton-v1");
}
