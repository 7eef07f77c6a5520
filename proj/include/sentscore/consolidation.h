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

// Fuses five crowd annotations on the five-point scale into a single label.
//
// A label chosen by at least three annotators wins outright. Otherwise the
// votes are averaged and the mean m is binned with cut points at 0.4 and 1.4
// instead of the usual 0.5 and 1.5:
//
//   |m| >= 1.4        -> sign(m) * 2
//   0.4 <= |m| < 1.4  -> sign(m) * 1
//   |m| < 0.4         -> 0
//
// A mean that lands exactly on a cut point belongs to the outer bin. Means of
// five integer votes are multiples of 0.2, so binning is done on the vote sum
// (cut points 2 and 7) to stay exact.

#ifndef SENTSCORE_CONSOLIDATION_H_
#define SENTSCORE_CONSOLIDATION_H_

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentscore/core.h"

namespace sentscore::consolidation {

inline constexpr std::size_t kAnnotators = 5;

struct VoteSet {
  std::string item_id;
  std::array<Label, kAnnotators> votes;
};

enum class CaseTag { kUnanimous, kMajority, kAveraged };

std::string_view CaseTagName(CaseTag tag);

struct Consolidated {
  std::string item_id;
  Label label;
  CaseTag tag = CaseTag::kAveraged;
};

// Bins the mean of five votes given their sum.
Label RoundVoteSum(int sum);

Label Consolidate(const VoteSet& votes);
Consolidated ConsolidateTagged(const VoteSet& votes);

// Input order is preserved. Errors carry the offending item id.
std::vector<Consolidated> ConsolidateBatch(std::span<const VoteSet> batch);

struct CaseCounts {
  std::size_t unanimous = 0;
  std::size_t majority = 0;  // excludes unanimous
  std::size_t averaged = 0;
};

CaseCounts CountCases(std::span<const Consolidated> results);

}  // namespace sentscore::consolidation

#endif  // SENTSCORE_CONSOLIDATION_H_
