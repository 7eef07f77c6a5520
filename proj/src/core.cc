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

#include "sentscore/core.h"

#include <array>
#include <cmath>
#include <map>
#include <utility>

#include <fmt/format.h>

#include "sentscore/error.h"

namespace sentscore {
namespace {

constexpr std::array<Label, 2> kTwoClasses = {kNegative, kPositive};
constexpr std::array<Label, 3> kThreeClasses = {kNegative, kNeutral,
                                                kPositive};
constexpr std::array<Label, 5> kFiveClasses = {
    kHighlyNegative, kNegative, kNeutral, kPositive, kHighlyPositive};

}  // namespace

std::span<const Label> Scale::classes() const {
  switch (kind_) {
    case ScaleKind::kTwo: return kTwoClasses;
    case ScaleKind::kThree: return kThreeClasses;
    case ScaleKind::kFive: return kFiveClasses;
  }
  return {};
}

bool Scale::Contains(Label label) const {
  switch (kind_) {
    case ScaleKind::kTwo: return label == kNegative || label == kPositive;
    case ScaleKind::kThree: return label.value() >= -1 && label.value() <= 1;
    case ScaleKind::kFive: return label.value() >= -2 && label.value() <= 2;
  }
  return false;
}

std::size_t Scale::IndexOf(Label label) const {
  if (!Contains(label)) {
    throw Error(ErrorCode::kOffScaleLabel,
                fmt::format("label {} is not on the {} scale", label.value(),
                            name()));
  }
  switch (kind_) {
    case ScaleKind::kTwo: return label == kNegative ? 0 : 1;
    case ScaleKind::kThree: return static_cast<std::size_t>(label.value() + 1);
    case ScaleKind::kFive: return static_cast<std::size_t>(label.value() + 2);
  }
  return 0;
}

std::string_view Scale::name() const {
  switch (kind_) {
    case ScaleKind::kTwo: return "two-point";
    case ScaleKind::kThree: return "three-point";
    case ScaleKind::kFive: return "five-point";
  }
  return "";
}

std::string LabelName(Label label, Scale scale) {
  scale.IndexOf(label);
  if (scale.kind() == ScaleKind::kFive) return std::to_string(label.value());
  if (label == kPositive) return "positive";
  if (label == kNegative) return "negative";
  return "neutral";
}

ItemKey KeyOf(const LabeledItem& item) {
  return ItemKey{item.item_id, item.topic_id};
}

std::string DescribeKey(const ItemKey& key) {
  if (key.topic_id) {
    return fmt::format("item '{}' in topic '{}'", key.item_id, *key.topic_id);
  }
  return fmt::format("item '{}'", key.item_id);
}

std::vector<TopicSet> GroupByTopic(std::span<const LabeledItem> items,
                                   Scale scale) {
  std::map<std::string, std::vector<LabeledItem>> by_topic;
  for (const LabeledItem& item : items) {
    if (!item.topic_id) {
      throw Error(ErrorCode::kMissingTopic,
                  fmt::format("{} has no topic", DescribeKey(KeyOf(item))));
    }
    scale.IndexOf(item.label);
    by_topic[*item.topic_id].push_back(item);
  }
  std::vector<TopicSet> topics;
  topics.reserve(by_topic.size());
  for (auto& [id, members] : by_topic) {
    topics.push_back(TopicSet{id, scale, std::move(members)});
  }
  return topics;
}

ConfusionMatrix::ConfusionMatrix(Scale scale)
    : scale_(scale), counts_(scale.size() * scale.size(), 0) {}

void ConfusionMatrix::Add(Label predicted, Label gold, std::int64_t count) {
  const std::size_t n = scale_.size();
  counts_[scale_.IndexOf(predicted) * n + scale_.IndexOf(gold)] += count;
  total_ += count;
}

std::int64_t ConfusionMatrix::at(Label predicted, Label gold) const {
  return at_index(scale_.IndexOf(predicted), scale_.IndexOf(gold));
}

std::int64_t ConfusionMatrix::RowSum(Label predicted) const {
  const std::size_t row = scale_.IndexOf(predicted);
  std::int64_t sum = 0;
  for (std::size_t g = 0; g < scale_.size(); ++g) sum += at_index(row, g);
  return sum;
}

std::int64_t ConfusionMatrix::ColumnSum(Label gold) const {
  const std::size_t col = scale_.IndexOf(gold);
  std::int64_t sum = 0;
  for (std::size_t p = 0; p < scale_.size(); ++p) sum += at_index(p, col);
  return sum;
}

std::int64_t ConfusionMatrix::Trace() const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < scale_.size(); ++i) sum += at_index(i, i);
  return sum;
}

std::vector<LabelPair> AlignPredictions(std::span<const LabeledItem> gold,
                                        std::span<const LabeledItem> pred,
                                        Scale scale) {
  if (gold.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "gold set is empty");
  }
  std::map<ItemKey, Label> predicted;
  for (const LabeledItem& item : pred) {
    scale.IndexOf(item.label);
    auto [it, inserted] = predicted.emplace(KeyOf(item), item.label);
    if (!inserted) {
      throw Error(ErrorCode::kDuplicateItem,
                  fmt::format("{} predicted more than once",
                              DescribeKey(it->first)));
    }
  }
  std::map<ItemKey, bool> seen;
  std::vector<LabelPair> pairs;
  pairs.reserve(gold.size());
  for (const LabeledItem& item : gold) {
    scale.IndexOf(item.label);
    ItemKey key = KeyOf(item);
    auto it = predicted.find(key);
    if (it == predicted.end()) {
      throw Error(ErrorCode::kMissingPrediction,
                  fmt::format("no prediction for {}", DescribeKey(key)));
    }
    if (!seen.emplace(std::move(key), true).second) {
      throw Error(ErrorCode::kDuplicateItem,
                  fmt::format("{} appears more than once in gold",
                              DescribeKey(it->first)));
    }
    pairs.push_back(LabelPair{item.label, it->second});
  }
  if (predicted.size() != seen.size()) {
    for (const auto& [key, label] : predicted) {
      if (!seen.contains(key)) {
        throw Error(ErrorCode::kUnknownItem,
                    fmt::format("prediction for {} which is not in gold",
                                DescribeKey(key)));
      }
    }
  }
  return pairs;
}

ConfusionMatrix ConfusionFromPairs(std::span<const LabelPair> pairs,
                                   Scale scale) {
  ConfusionMatrix cm(scale);
  for (const LabelPair& p : pairs) cm.Add(p.predicted, p.gold);
  return cm;
}

ConfusionMatrix BuildConfusion(std::span<const LabeledItem> gold,
                               std::span<const LabeledItem> pred,
                               Scale scale) {
  return ConfusionFromPairs(AlignPredictions(gold, pred, scale), scale);
}

std::optional<Label> CollapseScale(Label label, Scale target) {
  Scale::Five().IndexOf(label);
  const int v = label.value();
  switch (target.kind()) {
    case ScaleKind::kFive: return label;
    case ScaleKind::kThree:
      return v > 0 ? kPositive : (v < 0 ? kNegative : kNeutral);
    case ScaleKind::kTwo:
      if (v == 0) return std::nullopt;
      return v > 0 ? kPositive : kNegative;
  }
  return std::nullopt;
}

std::vector<LabeledItem> CollapseItems(std::span<const LabeledItem> items,
                                       Scale target) {
  std::vector<LabeledItem> out;
  out.reserve(items.size());
  for (const LabeledItem& item : items) {
    if (auto label = CollapseScale(item.label, target)) {
      out.push_back(LabeledItem{item.item_id, item.topic_id, *label});
    }
  }
  return out;
}

Distribution Distribution::Make(Scale scale, std::vector<double> prevalences,
                                double tolerance) {
  if (prevalences.size() != scale.size()) {
    throw Error(ErrorCode::kScaleMismatch,
                fmt::format("{} prevalences given for the {} scale",
                            prevalences.size(), scale.name()));
  }
  double sum = 0.0;
  for (double v : prevalences) {
    if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
      throw Error(ErrorCode::kInvalidDistribution,
                  fmt::format("prevalence {} outside [0,1]", v));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw Error(ErrorCode::kInvalidDistribution,
                fmt::format("prevalences sum to {}, not 1", sum));
  }
  return Distribution(scale, std::move(prevalences));
}

Distribution Distribution::FromCounts(Scale scale,
                                      std::span<const std::int64_t> counts) {
  if (counts.size() != scale.size()) {
    throw Error(ErrorCode::kScaleMismatch, "count vector size mismatch");
  }
  std::int64_t total = 0;
  for (std::int64_t c : counts) total += c;
  if (total <= 0) throw Error(ErrorCode::kEmptyDataset, "no items counted");
  std::vector<double> prevalences;
  prevalences.reserve(counts.size());
  for (std::int64_t c : counts) {
    prevalences.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  return Distribution(scale, std::move(prevalences));
}

Distribution Distribution::Degenerate(Scale scale, Label label) {
  std::vector<double> prevalences(scale.size(), 0.0);
  prevalences[scale.IndexOf(label)] = 1.0;
  return Distribution(scale, std::move(prevalences));
}

Distribution Prevalence(std::span<const LabeledItem> items, Scale scale) {
  if (items.empty()) throw Error(ErrorCode::kEmptyDataset, "no items");
  std::vector<std::int64_t> counts(scale.size(), 0);
  for (const LabeledItem& item : items) ++counts[scale.IndexOf(item.label)];
  return Distribution::FromCounts(scale, counts);
}

}  // namespace sentscore
