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

#include "sentscore/metrics_classification.h"

#include <cstdint>
#include <cstdlib>

#include <fmt/format.h>

#include "sentscore/error.h"

namespace sentscore::classification {
namespace {

double Ratio(std::int64_t num, std::int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double Harmonic(double precision, double recall) {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

void RequirePolar(const ConfusionMatrix& cm, const char* measure) {
  if (cm.scale().kind() == ScaleKind::kFive) {
    throw Error(ErrorCode::kScaleMismatch,
                fmt::format("{} is defined on the two- and three-point scales",
                            measure));
  }
}

ClassScore ScoreFor(const ConfusionMatrix& cm, Label label) {
  const std::int64_t hit = cm.at(label, label);
  ClassScore s;
  s.label = label;
  s.precision = Ratio(hit, cm.RowSum(label));
  s.recall = Ratio(hit, cm.ColumnSum(label));
  s.f1 = Harmonic(s.precision, s.recall);
  return s;
}

}  // namespace

std::vector<ClassScore> PerClassScores(const ConfusionMatrix& cm) {
  std::vector<ClassScore> out;
  for (Label c : cm.scale().classes()) out.push_back(ScoreFor(cm, c));
  return out;
}

double F1PN(const ConfusionMatrix& cm) {
  RequirePolar(cm, "F1_PN");
  return 0.5 * (ScoreFor(cm, kPositive).f1 + ScoreFor(cm, kNegative).f1);
}

double MacroRecall(const ConfusionMatrix& cm) {
  RequirePolar(cm, "RHO_PN");
  double sum = 0.0;
  for (Label c : cm.scale().classes()) sum += ScoreFor(cm, c).recall;
  return sum / static_cast<double>(cm.scale().size());
}

double Accuracy(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw Error(ErrorCode::kEmptyDataset, "empty matrix");
  return Ratio(cm.Trace(), cm.total());
}

double MaeMicro(std::span<const LabelPair> pairs) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyDataset, "no items");
  std::int64_t sum = 0;
  for (const LabelPair& p : pairs) {
    sum += std::abs(p.predicted.value() - p.gold.value());
  }
  return Ratio(sum, static_cast<std::int64_t>(pairs.size()));
}

double MaeMacro(std::span<const LabelPair> pairs, Scale scale) {
  if (pairs.empty()) throw Error(ErrorCode::kEmptyDataset, "no items");
  std::vector<std::int64_t> distance(scale.size(), 0);
  std::vector<std::int64_t> count(scale.size(), 0);
  for (const LabelPair& p : pairs) {
    const std::size_t j = scale.IndexOf(p.gold);
    scale.IndexOf(p.predicted);
    distance[j] += std::abs(p.predicted.value() - p.gold.value());
    ++count[j];
  }
  double sum = 0.0;
  int classes = 0;
  for (std::size_t j = 0; j < scale.size(); ++j) {
    if (count[j] == 0) continue;
    sum += Ratio(distance[j], count[j]);
    ++classes;
  }
  return sum / classes;
}

double MaeMicro(std::span<const LabeledItem> gold,
                std::span<const LabeledItem> pred, Scale scale) {
  return MaeMicro(AlignPredictions(gold, pred, scale));
}

double MaeMacro(std::span<const LabeledItem> gold,
                std::span<const LabeledItem> pred, Scale scale) {
  return MaeMacro(AlignPredictions(gold, pred, scale), scale);
}

}  // namespace sentscore::classification
