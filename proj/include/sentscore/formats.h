// Copyright 2026 The sentscore Authors.
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

// Tab-separated gold, prediction and vote files.
//
// One record per line; TAB is the only separator, so topic ids may contain
// spaces. Lines starting with '#' and empty lines are skipped. A trailing
// newline is optional and a trailing CR is stripped. Label words are
// case-insensitive on input and lowercase on output.
//
//   gold / predictions
//     A   item_id  label            label in {positive, neutral, negative}
//     B   item_id  topic_id  label  label in {positive, negative}
//     C   item_id  topic_id  label  label in {-2, -1, 0, 1, 2}
//   gold
//     D   C layout; collapsed on read (neutral items dropped)
//     E   C layout
//   predictions
//     D   topic_id  p_positive  p_negative
//     E   topic_id  p(-2)  p(-1)  p(0)  p(1)  p(2)
//   votes
//         item_id  v1  v2  v3  v4  v5      each in {-2..2}
//
// Probabilities must lie in [0,1] and each row must sum to 1 within 1e-6.

#ifndef SENTSCORE_FORMATS_H_
#define SENTSCORE_FORMATS_H_

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentscore/consolidation.h"
#include "sentscore/core.h"
#include "sentscore/error.h"
#include "sentscore/subtask.h"

namespace sentscore::io {

// Records from the well-formed lines plus one diagnostic per malformed line.
template <class T>
struct Parsed {
  T value;
  std::vector<Diagnostic> diagnostics;
};

Parsed<std::vector<LabeledItem>> ParseGoldText(std::string_view text,
                                               Subtask subtask);
Parsed<Predictions> ParsePredictionsText(std::string_view text,
                                         Subtask subtask);
Parsed<std::vector<consolidation::VoteSet>> ParseVotesText(
    std::string_view text);

// Strict forms: throw ParseError if any line is malformed, Error(kIo) if the
// file cannot be read.
std::vector<LabeledItem> ParseGold(const std::filesystem::path& path,
                                   Subtask subtask);
Predictions ParsePredictions(const std::filesystem::path& path,
                             Subtask subtask);
std::vector<consolidation::VoteSet> ParseVotes(
    const std::filesystem::path& path);

// Strict parse of in-memory text; `source` names it in the error.
std::vector<LabeledItem> ParseGold(std::string_view text, Subtask subtask,
                                   std::string_view source);
Predictions ParsePredictions(std::string_view text, Subtask subtask,
                             std::string_view source);
std::vector<consolidation::VoteSet> ParseVotes(std::string_view text,
                                               std::string_view source);

std::string ReadFile(const std::filesystem::path& path);

// A single label in file spelling for `scale` (words on Two/Three, integers
// on Five).
std::optional<Label> ParseLabelField(std::string_view field, Scale scale);

// Emission in the same layouts. D gold is written in the C layout.
std::string EmitGold(std::span<const LabeledItem> items, Subtask subtask);
std::string EmitPredictions(const Predictions& predictions, Subtask subtask);
std::string EmitVotes(std::span<const consolidation::VoteSet> votes);
// item_id  label  case-tag
std::string EmitConsolidated(
    std::span<const consolidation::Consolidated> results);

// Collapsed five-point records: Three is written as A layout (no topic), Two
// as B layout.
std::string EmitCollapsed(std::span<const LabeledItem> items, Scale target);

}  // namespace sentscore::io

#endif  // SENTSCORE_FORMATS_H_
