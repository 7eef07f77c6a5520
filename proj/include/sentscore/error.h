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

#ifndef SENTSCORE_ERROR_H_
#define SENTSCORE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sentscore {

enum class ErrorCode {
  // Coverage and scale errors.
  kEmptyDataset,
  kMissingPrediction,
  kUnknownItem,
  kDuplicateItem,
  kOffScaleLabel,
  kScaleMismatch,
  kEmptyTopic,
  kMissingTopic,
  kUnknownTopic,
  kInvalidDistribution,
  kNonpositiveTestSize,
  // Consolidation.
  kMalformedVotes,
  // Baselines.
  kPolicySubtaskMismatch,
  // Drift generation.
  kAllItemsRemoved,
  kInvalidDriftSpec,
  // File-level parse errors.
  kParse,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base exception for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

enum class ParseIssue {
  kBadFieldCount,
  kBadLabel,
  kBadProbability,
  kDuplicateKey,
};

std::string_view ParseIssueName(ParseIssue issue);

// One problem found on one input line. `line` is 1-based.
struct Diagnostic {
  std::size_t line = 0;
  ParseIssue issue = ParseIssue::kBadFieldCount;
  std::string message;

  std::string ToString() const;
};

// Raised when a file contains malformed lines; carries one diagnostic per
// malformed line, in line order.
class ParseError : public Error {
 public:
  ParseError(std::string source, std::vector<Diagnostic> diagnostics);

  const std::string& source() const { return source_; }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::string source_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace sentscore

#endif  // SENTSCORE_ERROR_H_
