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

#include "sentscore/leaderboard.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <optional>
#include <variant>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "sentscore/formats.h"

namespace sentscore::io {
namespace {

double Quantize(double v, int decimals) {
  if (decimals < 0) return v;
  const double scale = std::pow(10.0, decimals);
  return std::round(v * scale);
}

}  // namespace

std::vector<int> CompetitionRanks(std::span<const double> values,
                                  bool higher_is_better, int decimals) {
  std::vector<double> keys;
  keys.reserve(values.size());
  for (double v : values) {
    const double q = Quantize(v, decimals);
    keys.push_back(higher_is_better ? -q : q);
  }
  // Sorting lets each rank be found by binary search: the number of strictly
  // better keys is the lower bound position.
  std::vector<double> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> ranks;
  ranks.reserve(keys.size());
  for (double k : keys) {
    const auto better = std::lower_bound(sorted.begin(), sorted.end(), k);
    ranks.push_back(1 + static_cast<int>(better - sorted.begin()));
  }
  return ranks;
}

Leaderboard RankSubmissions(Subtask subtask,
                            std::vector<ScoredSubmission> scored) {
  Leaderboard board;
  board.subtask = subtask;
  std::vector<LeaderboardRow> rows;
  for (ScoredSubmission& s : scored) {
    rows.push_back(LeaderboardRow{std::move(s.system_name), s.report.official,
                                  std::move(s.report.secondary), 0, {}});
  }
  if (rows.empty()) return board;

  const std::size_t n_measures = 1 + rows.front().secondary.size();
  for (std::size_t m = 0; m < n_measures; ++m) {
    std::vector<double> values;
    for (const LeaderboardRow& r : rows) {
      values.push_back(m == 0 ? r.official.value : r.secondary[m - 1].value);
    }
    const std::string& name =
        m == 0 ? rows.front().official.name : rows.front().secondary[m - 1].name;
    const std::vector<int> ranks =
        CompetitionRanks(values, HigherIsBetter(name));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rows[i].rank_by_measure[name] = ranks[i];
      if (m == 0) rows[i].rank = ranks[i];
    }
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const LeaderboardRow& a, const LeaderboardRow& b) {
                     return a.rank < b.rank;
                   });
  board.rows = std::move(rows);
  return board;
}

Leaderboard RunLeaderboard(Subtask subtask, std::span<const LabeledItem> gold,
                           std::span<const Submission> submissions) {
  struct Outcome {
    std::optional<ScoreReport> report;
    std::string error;
  };
  std::vector<std::future<Outcome>> pending;
  pending.reserve(submissions.size());
  for (const Submission& s : submissions) {
    pending.push_back(std::async(std::launch::async, [&gold, &s, subtask] {
      try {
        return Outcome{Score(subtask, gold, ParsePredictions(s.predictions,
                                                             subtask)),
                       {}};
      } catch (const std::exception& e) {
        return Outcome{std::nullopt, e.what()};
      }
    }));
  }
  std::vector<ScoredSubmission> scored;
  std::vector<SubmissionFailure> failures;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    Outcome outcome = pending[i].get();
    if (outcome.report) {
      scored.push_back({submissions[i].system_name, std::move(*outcome.report)});
    } else {
      failures.push_back({submissions[i].system_name, std::move(outcome.error)});
    }
  }
  Leaderboard board = RankSubmissions(subtask, std::move(scored));
  board.failures = std::move(failures);
  return board;
}

namespace {

std::vector<Measure> MeasuresOf(const LeaderboardRow& row) {
  std::vector<Measure> out{row.official};
  out.insert(out.end(), row.secondary.begin(), row.secondary.end());
  return out;
}

}  // namespace

std::string EmitLeaderboard(const Leaderboard& board, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json j;
    j["subtask"] = std::string(SubtaskName(board.subtask));
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const LeaderboardRow& r : board.rows) {
      nlohmann::ordered_json row;
      row["rank"] = r.rank;
      row["system"] = r.system_name;
      nlohmann::ordered_json measures = nlohmann::ordered_json::object();
      for (const Measure& m : MeasuresOf(r)) {
        measures[m.name] = {{"value", m.value},
                            {"rank", r.rank_by_measure.at(m.name)}};
      }
      row["measures"] = measures;
      rows.push_back(row);
    }
    j["rows"] = rows;
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    for (const SubmissionFailure& f : board.failures) {
      failures.push_back({{"system", f.system_name}, {"error", f.message}});
    }
    j["failures"] = failures;
    return j.dump(2) + "\n";
  }

  std::string out = "#rank\tsystem";
  for (std::string_view name : MeasuresFor(board.subtask)) {
    out += fmt::format("\t{}", name);
  }
  out += "\n";
  for (const LeaderboardRow& r : board.rows) {
    out += fmt::format("{}\t{}", r.rank, r.system_name);
    for (const Measure& m : MeasuresOf(r)) {
      if (format == ReportFormat::kText) {
        out += fmt::format("\t{:.3f}({})", m.value, r.rank_by_measure.at(m.name));
      } else {
        out += fmt::format("\t{}", m.value);
      }
    }
    out += "\n";
  }
  for (const SubmissionFailure& f : board.failures) {
    std::string message = f.message;
    std::replace(message.begin(), message.end(), '\n', ' ');
    out += fmt::format("#failed\t{}\t{}\n", f.system_name, message);
  }
  return out;
}

}  // namespace sentscore::io
