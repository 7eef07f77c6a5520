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

// Batch scorer for sentiment classification and quantification subtasks.
//
// Exit status: 0 success, 2 unreadable or malformed input, 3 coverage or
// scale error, 1 anything else.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <iostream>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "sentscore/baselines.h"
#include "sentscore/consolidation.h"
#include "sentscore/error.h"
#include "sentscore/formats.h"
#include "sentscore/harness.h"
#include "sentscore/leaderboard.h"
#include "sentscore/report.h"

namespace {

using namespace sentscore;

constexpr int kExitParse = 2;
constexpr int kExitCoverage = 3;

struct GlobalOptions {
  std::string format = "text";
  bool per_topic = false;

  io::ReportFormat report_format() const {
    return *io::ParseReportFormat(format);
  }
};

Subtask RequireSubtask(const std::string& text) {
  const auto subtask = ParseSubtask(text);
  if (!subtask) {
    throw CLI::ValidationError("subtask", "expected one of a, b, c, d, e");
  }
  return *subtask;
}

Label RequireLabel(const std::string& text, Scale scale) {
  const auto label = io::ParseLabelField(text, scale);
  if (!label) {
    throw CLI::ValidationError(
        "label", fmt::format("'{}' is not a {} label", text, scale.name()));
  }
  return *label;
}

std::vector<double> SplitProbabilities(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    try {
      out.push_back(std::stod(text.substr(start, comma - start)));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--dist", "expected comma-separated numbers");
    }
    start = comma + 1;
  }
  return out;
}

int CmdScore(Subtask subtask, const std::string& gold_path,
             const std::string& pred_path, const GlobalOptions& opts) {
  const auto gold = io::ParseGold(gold_path, subtask);
  const auto pred = io::ParsePredictions(pred_path, subtask);
  const ScoreReport report = Score(subtask, gold, pred);
  std::cout << io::EmitReport(report, opts.report_format(),
                              {.per_topic = opts.per_topic});
  return 0;
}

int CmdConsolidate(const std::string& votes_path, const GlobalOptions& opts) {
  const auto votes = io::ParseVotes(votes_path);
  const auto results = consolidation::ConsolidateBatch(votes);
  const auto counts = consolidation::CountCases(results);
  if (opts.report_format() == io::ReportFormat::kJson) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const auto& r : results) {
      items.push_back({{"item_id", r.item_id},
                       {"label", r.label.value()},
                       {"case", consolidation::CaseTagName(r.tag)}});
    }
    j["items"] = items;
    j["counts"] = {{"unanimous", counts.unanimous},
                   {"majority", counts.majority},
                   {"averaged", counts.averaged}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << io::EmitConsolidated(results);
    std::cerr << fmt::format("unanimous\t{}\nmajority\t{}\naveraged\t{}\n",
                             counts.unanimous, counts.majority,
                             counts.averaged);
  }
  return 0;
}

struct BaselineArgs {
  std::string subtask;
  std::string policy;
  std::string gold;
  std::string label;
  std::string dist;
  std::vector<std::string> train_gold;
  bool score = false;
};

int CmdBaseline(const BaselineArgs& args, const GlobalOptions& opts) {
  const Subtask subtask = RequireSubtask(args.subtask);
  const Scale scale = ScaleFor(subtask);
  const auto gold = io::ParseGold(args.gold, subtask);

  baselines::Policy policy;
  if (args.policy == "constant") {
    // Positive for A/B, the middle class for C.
    const Label fallback = subtask == Subtask::kC ? kNeutral : kPositive;
    policy = baselines::ConstantClass{
        args.label.empty() ? fallback : RequireLabel(args.label, scale)};
  } else if (args.policy == "majority") {
    policy = baselines::MajorityPrevalence{
        args.label.empty() ? kPositive : RequireLabel(args.label, scale)};
  } else if (args.policy == "train") {
    if (!args.dist.empty()) {
      std::vector<double> values = SplitProbabilities(args.dist);
      // Same column order as a prediction row.
      if (subtask == Subtask::kD) std::reverse(values.begin(), values.end());
      policy = baselines::TrainPrevalence{
          Distribution::Make(scale, std::move(values))};
    } else if (!args.train_gold.empty()) {
      std::vector<LabeledItem> train;
      for (const std::string& path : args.train_gold) {
        auto items = io::ParseGold(path, subtask);
        train.insert(train.end(), items.begin(), items.end());
      }
      policy = baselines::TrainPrevalence{Prevalence(train, scale)};
    } else {
      throw CLI::ValidationError("train", "needs --dist or --train-gold");
    }
  } else {
    throw CLI::ValidationError("policy",
                               "expected constant, train or majority");
  }

  const Predictions pred = baselines::RunBaseline({subtask, policy}, gold);
  if (args.score) {
    std::cout << io::EmitReport(Score(subtask, gold, pred),
                                opts.report_format(),
                                {.per_topic = opts.per_topic});
  } else {
    std::cout << io::EmitPredictions(pred, subtask);
  }
  return 0;
}

struct DriftArgs {
  std::string gold;
  std::string subtask = "c";
  std::vector<std::string> remove;
  int variants = 1;
  std::uint64_t seed = 0;
};

int CmdDrift(const DriftArgs& args) {
  const Subtask subtask = RequireSubtask(args.subtask);
  if (subtask != Subtask::kB && subtask != Subtask::kC) {
    throw CLI::ValidationError("--subtask", "drift reads B or C gold files");
  }
  const Scale scale = ScaleFor(subtask);
  std::map<Label, double> removals;
  for (const std::string& spec : args.remove) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos) {
      throw CLI::ValidationError("--remove", "expected class=fraction");
    }
    double fraction = 0.0;
    try {
      fraction = std::stod(spec.substr(eq + 1));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--remove", "fraction is not a number");
    }
    removals[RequireLabel(spec.substr(0, eq), scale)] = fraction;
  }

  const auto gold = io::ParseGold(args.gold, subtask);
  std::vector<LabeledItem> out;
  for (TopicSet& topic : GroupByTopic(gold, scale)) {
    DriftSpec spec{std::move(topic), removals, args.seed, args.variants};
    for (const TopicSet& variant : GenerateDrift(spec)) {
      out.insert(out.end(), variant.items.begin(), variant.items.end());
    }
  }
  std::cout << io::EmitGold(out, subtask);
  return 0;
}

int CmdCollapse(const std::string& gold_path, int to) {
  const auto gold = io::ParseGold(gold_path, Subtask::kC);
  const Scale target = to == 3 ? Scale::Three() : Scale::Two();
  std::cout << io::EmitCollapsed(CollapseItems(gold, target), target);
  return 0;
}

int CmdLeaderboard(const std::string& subtask_text, const std::string& gold_path,
                   const std::vector<std::string>& entries,
                   const GlobalOptions& opts) {
  const Subtask subtask = RequireSubtask(subtask_text);
  std::vector<io::Submission> submissions;
  for (const std::string& entry : entries) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("submission", "expected name=path");
    }
    submissions.push_back({entry.substr(0, eq), entry.substr(eq + 1)});
  }
  const auto gold = io::ParseGold(gold_path, subtask);
  const io::Leaderboard board = io::RunLeaderboard(subtask, gold, submissions);
  std::cout << io::EmitLeaderboard(board, opts.report_format());
  for (const auto& f : board.failures) {
    std::cerr << fmt::format("{}: {}\n", f.system_name, f.message);
  }
  return board.rows.empty() ? kExitParse : 0;
}

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kIo:
      return kExitParse;
    case ErrorCode::kEmptyDataset:
    case ErrorCode::kMissingPrediction:
    case ErrorCode::kUnknownItem:
    case ErrorCode::kDuplicateItem:
    case ErrorCode::kOffScaleLabel:
    case ErrorCode::kScaleMismatch:
    case ErrorCode::kEmptyTopic:
    case ErrorCode::kMissingTopic:
    case ErrorCode::kUnknownTopic:
    case ErrorCode::kInvalidDistribution:
    case ErrorCode::kNonpositiveTestSize:
      return kExitCoverage;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scores sentiment classification and quantification runs."};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "tsv"}));
  app.add_flag("--per-topic", opts.per_topic,
               "Include per-topic scores in text output");

  int status = 0;

  struct ScoreArgs {
    std::string gold, pred;
  };
  std::vector<ScoreArgs> score_args(std::size(kAllSubtasks));
  for (std::size_t i = 0; i < std::size(kAllSubtasks); ++i) {
    const Subtask subtask = kAllSubtasks[i];
    const std::string name =
        fmt::format("score-{}", static_cast<char>('a' + static_cast<int>(i)));
    CLI::App* cmd = app.add_subcommand(
        name, fmt::format("Score subtask {} predictions", SubtaskName(subtask)));
    cmd->add_option("gold", score_args[i].gold)->required();
    cmd->add_option("pred", score_args[i].pred)->required();
    cmd->callback([&, i, subtask] {
      status = CmdScore(subtask, score_args[i].gold, score_args[i].pred, opts);
    });
  }

  std::string votes_path;
  CLI::App* consolidate =
      app.add_subcommand("consolidate", "Fuse five crowd votes per item");
  consolidate->add_option("votes", votes_path)->required();
  consolidate->callback([&] { status = CmdConsolidate(votes_path, opts); });

  BaselineArgs baseline_args;
  CLI::App* baseline =
      app.add_subcommand("baseline", "Run a trivial-policy baseline");
  baseline->add_option("subtask", baseline_args.subtask)->required();
  baseline->add_option("policy", baseline_args.policy,
                       "constant | train | majority")
      ->required();
  baseline->add_option("gold", baseline_args.gold)->required();
  baseline->add_option("--label", baseline_args.label,
                       "Class for constant/majority policies");
  baseline->add_option("--dist", baseline_args.dist,
                       "Training distribution, prediction-row column order");
  baseline->add_option("--train-gold", baseline_args.train_gold,
                       "Gold files whose union gives the training distribution");
  baseline->add_flag("--score", baseline_args.score,
                     "Print the score report instead of predictions");
  baseline->callback([&] { status = CmdBaseline(baseline_args, opts); });

  DriftArgs drift_args;
  CLI::App* drift = app.add_subcommand(
      "drift", "Write prevalence-drifted copies of each gold topic");
  drift->add_option("gold", drift_args.gold)->required();
  drift->add_option("--subtask", drift_args.subtask, "b or c (default c)");
  drift->add_option("--remove", drift_args.remove, "class=fraction")
      ->required();
  drift->add_option("--variants", drift_args.variants)
      ->check(CLI::PositiveNumber);
  drift->add_option("--seed", drift_args.seed);
  drift->callback([&] { status = CmdDrift(drift_args); });

  std::string collapse_path;
  int collapse_to = 3;
  CLI::App* collapse = app.add_subcommand(
      "collapse", "Collapse five-point gold to three or two points");
  collapse->add_option("gold", collapse_path)->required();
  collapse->add_option("--to", collapse_to)
      ->required()
      ->check(CLI::IsMember({3, 2}));
  collapse->callback([&] { status = CmdCollapse(collapse_path, collapse_to); });

  std::string lb_subtask, lb_gold;
  std::vector<std::string> lb_entries;
  CLI::App* leaderboard =
      app.add_subcommand("leaderboard", "Rank several submissions");
  leaderboard->add_option("subtask", lb_subtask)->required();
  leaderboard->add_option("gold", lb_gold)->required();
  leaderboard->add_option("submissions", lb_entries, "name=path")->required();
  leaderboard->callback([&] {
    status = CmdLeaderboard(lb_subtask, lb_gold, lb_entries, opts);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version exit 0; usage errors share the parse-error code.
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return ExitCodeFor(e.code());
  }
  return status;
}
