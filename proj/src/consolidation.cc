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

#include "sentscore/consolidation.h"

#include <cstdlib>

#include <fmt/format.h>

#include "sentscore/error.h"

namespace sentscore::consolidation {

std::string_view CaseTagName(CaseTag tag) {
  switch (tag) {
    case CaseTag::kUnanimous: return "unanimous";
    case CaseTag::kMajority: return "majority";
    case CaseTag::kAveraged: return "averaged";
  }
  return "";
}

Label RoundVoteSum(int sum) {
  const int magnitude = std::abs(sum);
  const int sign = sum < 0 ? -1 : 1;
  if (magnitude >= 7) return Label(2 * sign);
  if (magnitude >= 2) return Label(sign);
  return kNeutral;
}

Consolidated ConsolidateTagged(const VoteSet& votes) {
  std::array<int, 5> count{};
  int sum = 0;
  for (Label v : votes.votes) {
    if (!Scale::Five().Contains(v)) {
      throw Error(ErrorCode::kMalformedVotes,
                  fmt::format("item '{}': vote {} is off the five-point scale",
                              votes.item_id, v.value()));
    }
    ++count[static_cast<std::size_t>(v.value() + 2)];
    sum += v.value();
  }
  for (std::size_t i = 0; i < count.size(); ++i) {
    if (count[i] >= 3) {
      return Consolidated{
          votes.item_id, Label(static_cast<int>(i) - 2),
          count[i] == static_cast<int>(kAnnotators) ? CaseTag::kUnanimous
                                                    : CaseTag::kMajority};
    }
  }
  return Consolidated{votes.item_id, RoundVoteSum(sum), CaseTag::kAveraged};
}

Label Consolidate(const VoteSet& votes) { return ConsolidateTagged(votes).label; }

std::vector<Consolidated> ConsolidateBatch(std::span<const VoteSet> batch) {
  if (batch.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "no vote sets to consolidate");
  }
  std::vector<Consolidated> out;
  out.reserve(batch.size());
  for (const VoteSet& v : batch) out.push_back(ConsolidateTagged(v));
  return out;
}

CaseCounts CountCases(std::span<const Consolidated> results) {
  CaseCounts c;
  for (const Consolidated& r : results) {
    switch (r.tag) {
      case CaseTag::kUnanimous: ++c.unanimous; break;
      case CaseTag::kMajority: ++c.majority; break;
      case CaseTag::kAveraged: ++c.averaged; break;
    }
  }
  return c;
}

}  // namespace sentscore::consolidation
