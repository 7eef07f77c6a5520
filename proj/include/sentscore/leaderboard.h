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

// Ranks several submissions for one subtask.

#ifndef SENTSCORE_LEADERBOARD_H_
#define SENTSCORE_LEADERBOARD_H_

#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sentscore/harness.h"
#include "sentscore/report.h"

namespace sentscore::io {

// Scores are compared after rounding to this many decimals, the precision
// at which results are published. Pass a negative value to compare exactly.
inline constexpr int kRankingDecimals = 3;

// Competition ranking ("1224"): rank = 1 + number of strictly better values.
std::vector<int> CompetitionRanks(std::span<const double> values,
                                  bool higher_is_better,
                                  int decimals = kRankingDecimals);

struct LeaderboardRow {
  std::string system_name;
  Measure official;
  std::vector<Measure> secondary;
  int rank = 0;
  std::map<std::string, int> rank_by_measure;
};

struct SubmissionFailure {
  std::string system_name;
  std::string message;
};

struct Leaderboard {
  Subtask subtask = Subtask::kA;
  // Sorted by official rank; equal ranks keep submission order.
  std::vector<LeaderboardRow> rows;
  std::vector<SubmissionFailure> failures;
};

struct ScoredSubmission {
  std::string system_name;
  ScoreReport report;
};

Leaderboard RankSubmissions(Subtask subtask,
                            std::vector<ScoredSubmission> scored);

struct Submission {
  std::string system_name;
  std::filesystem::path predictions;
};

// Parses and scores every submission concurrently. A submission that fails
// to parse or score is listed in `failures` and left out of the ranking.
Leaderboard RunLeaderboard(Subtask subtask, std::span<const LabeledItem> gold,
                           std::span<const Submission> submissions);

// text: rank, name, then each measure as "0.580(12)". json: full precision.
// tsv: same columns as text without the rank annotations.
std::string EmitLeaderboard(const Leaderboard& board, ReportFormat format);

}  // namespace sentscore::io

#endif  // SENTSCORE_LEADERBOARD_H_
