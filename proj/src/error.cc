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

#include "sentscore/error.h"

#include <utility>

#include <fmt/format.h>

namespace sentscore {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kMissingPrediction: return "MissingPrediction";
    case ErrorCode::kUnknownItem: return "UnknownItem";
    case ErrorCode::kDuplicateItem: return "DuplicateItem";
    case ErrorCode::kOffScaleLabel: return "OffScaleLabel";
    case ErrorCode::kScaleMismatch: return "ScaleMismatch";
    case ErrorCode::kEmptyTopic: return "EmptyTopic";
    case ErrorCode::kMissingTopic: return "MissingTopic";
    case ErrorCode::kUnknownTopic: return "UnknownTopic";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kNonpositiveTestSize: return "NonpositiveTestSize";
    case ErrorCode::kMalformedVotes: return "MalformedVotes";
    case ErrorCode::kPolicySubtaskMismatch: return "PolicySubtaskMismatch";
    case ErrorCode::kAllItemsRemoved: return "AllItemsRemoved";
    case ErrorCode::kInvalidDriftSpec: return "InvalidDriftSpec";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(fmt::format("{}: {}", ErrorCodeName(code), message)),
      code_(code) {}

std::string_view ParseIssueName(ParseIssue issue) {
  switch (issue) {
    case ParseIssue::kBadFieldCount: return "BadFieldCount";
    case ParseIssue::kBadLabel: return "BadLabel";
    case ParseIssue::kBadProbability: return "BadProbability";
    case ParseIssue::kDuplicateKey: return "DuplicateKey";
  }
  return "Unknown";
}

std::string Diagnostic::ToString() const {
  return fmt::format("line {}: {}: {}", line, ParseIssueName(issue), message);
}

namespace {

std::string Summarize(const std::string& source,
                      const std::vector<Diagnostic>& diagnostics) {
  std::string out = fmt::format("{}: {} malformed line(s)", source,
                                diagnostics.size());
  for (const Diagnostic& d : diagnostics) {
    out += "\n  ";
    out += d.ToString();
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::string source, std::vector<Diagnostic> diagnostics)
    : Error(ErrorCode::kParse, Summarize(source, diagnostics)),
      source_(std::move(source)),
      diagnostics_(std::move(diagnostics)) {}

}  // namespace sentscore
