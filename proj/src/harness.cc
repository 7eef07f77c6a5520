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

#include "sentscore/harness.h"

#include <cmath>
#include <random>
#include <utility>

#include <fmt/format.h>

#include "sentscore/error.h"
#include "sentscore/metrics_classification.h"
#include "sentscore/metrics_quantification.h"

namespace sentscore {
namespace {

using MeasureValues = std::vector<Measure>;

MeasureValues ClassificationMeasures(Subtask subtask,
                                     std::span<const LabelPair> pairs,
                                     Scale scale) {
  namespace cls = classification;
  if (subtask == Subtask::kC) {
    return {{std::string(measure::kMaeMacro), cls::MaeMacro(pairs, scale)},
            {std::string(measure::kMaeMicro), cls::MaeMicro(pairs)}};
  }
  const ConfusionMatrix cm = ConfusionFromPairs(pairs, scale);
  const double f1 = cls::F1PN(cm);
  const double rho = cls::MacroRecall(cm);
  const double acc = cls::Accuracy(cm);
  if (subtask == Subtask::kA) {
    return {{std::string(measure::kF1PN), f1},
            {std::string(measure::kRhoPN), rho},
            {std::string(measure::kAccuracy), acc}};
  }
  return {{std::string(measure::kRhoPN), rho},
          {std::string(measure::kF1PN), f1},
          {std::string(measure::kAccuracy), acc}};
}

MeasureValues QuantificationMeasures(Subtask subtask, const Distribution& p,
                                     const Distribution& phat,
                                     std::int64_t test_size) {
  namespace q = quantification;
  if (subtask == Subtask::kD) {
    return {{std::string(measure::kKld), q::Kld(p, phat, test_size)},
            {std::string(measure::kAe), q::AbsoluteError(p, phat)},
            {std::string(measure::kRae),
             q::RelativeAbsoluteError(p, phat, test_size)}};
  }
  return {{std::string(measure::kEmd), q::Emd(p, phat)}};
}

// Averages per-topic measure vectors, summing in map (sorted) order.
ScoreReport Macroaverage(Subtask subtask,
                         std::map<std::string, MeasureValues> per_topic,
                         std::size_t n_items) {
  const std::vector<std::string_view> names = MeasuresFor(subtask);
  std::vector<double> sums(names.size(), 0.0);
  for (const auto& [topic, values] : per_topic) {
    for (std::size_t m = 0; m < names.size(); ++m) sums[m] += values[m].value;
  }
  const double n = static_cast<double>(per_topic.size());
  ScoreReport report;
  report.subtask = subtask;
  report.official = {std::string(names[0]), sums[0] / n};
  for (std::size_t m = 1; m < names.size(); ++m) {
    report.secondary.push_back({std::string(names[m]), sums[m] / n});
  }
  report.n_topics = per_topic.size();
  report.n_items = n_items;
  report.per_topic = std::move(per_topic);
  return report;
}

ScoreReport ScoreClassification(Subtask subtask,
                                std::span<const LabeledItem> gold,
                                std::span<const LabeledItem> pred) {
  const Scale scale = ScaleFor(subtask);
  const std::vector<LabelPair> pairs = AlignPredictions(gold, pred, scale);

  if (subtask == Subtask::kA) {
    MeasureValues values = ClassificationMeasures(subtask, pairs, scale);
    ScoreReport report;
    report.subtask = subtask;
    report.official = values.front();
    report.secondary.assign(values.begin() + 1, values.end());
    report.n_items = pairs.size();
    return report;
  }

  std::map<std::string, std::vector<LabelPair>> by_topic;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (!gold[i].topic_id) {
      throw Error(ErrorCode::kMissingTopic,
                  fmt::format("{} has no topic", DescribeKey(KeyOf(gold[i]))));
    }
    by_topic[*gold[i].topic_id].push_back(pairs[i]);
  }
  std::map<std::string, MeasureValues> per_topic;
  for (const auto& [topic, topic_pairs] : by_topic) {
    per_topic.emplace(topic,
                      ClassificationMeasures(subtask, topic_pairs, scale));
  }
  return Macroaverage(subtask, std::move(per_topic), pairs.size());
}

ScoreReport ScoreQuantification(Subtask subtask,
                                std::span<const LabeledItem> gold,
                                const TopicDistributions& pred) {
  const Scale scale = ScaleFor(subtask);
  const std::vector<TopicSet> topics = GroupByTopic(gold, scale);
  std::map<std::string, MeasureValues> per_topic;
  for (const TopicSet& topic : topics) {
    auto it = pred.find(topic.topic_id);
    if (it == pred.end()) {
      throw Error(ErrorCode::kMissingPrediction,
                  fmt::format("no distribution for topic '{}'",
                              topic.topic_id));
    }
    if (it->second.scale() != scale) {
      throw Error(ErrorCode::kScaleMismatch,
                  fmt::format("distribution for topic '{}' is {}, expected {}",
                              topic.topic_id, it->second.scale().name(),
                              scale.name()));
    }
    const Distribution p = Prevalence(topic.items, scale);
    per_topic.emplace(
        topic.topic_id,
        QuantificationMeasures(subtask, p, it->second,
                               static_cast<std::int64_t>(topic.items.size())));
  }
  for (const auto& [topic, d] : pred) {
    if (!per_topic.contains(topic)) {
      throw Error(ErrorCode::kUnknownTopic,
                  fmt::format("distribution for topic '{}' which is not in "
                              "gold",
                              topic));
    }
  }
  return Macroaverage(subtask, std::move(per_topic), gold.size());
}

// Uniform draw in [0, bound) by rejection; avoids the implementation-defined
// std::uniform_int_distribution so output is identical across toolchains.
std::uint64_t Bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit =
      std::mt19937_64::max() - (std::mt19937_64::max() % bound + 1) % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x > limit);
  return x % bound;
}

}  // namespace

std::vector<Measure> ScoreReport::AllMeasures() const {
  std::vector<Measure> out{official};
  out.insert(out.end(), secondary.begin(), secondary.end());
  return out;
}

ScoreReport Score(Subtask subtask, std::span<const LabeledItem> gold,
                  const Predictions& predictions) {
  if (gold.empty()) throw Error(ErrorCode::kEmptyDataset, "gold set is empty");
  if (IsQuantification(subtask)) {
    const auto* pred = std::get_if<TopicDistributions>(&predictions);
    if (pred == nullptr) {
      throw Error(ErrorCode::kScaleMismatch,
                  fmt::format("subtask {} expects per-topic distributions",
                              SubtaskName(subtask)));
    }
    return ScoreQuantification(subtask, gold, *pred);
  }
  const auto* pred = std::get_if<std::vector<LabeledItem>>(&predictions);
  if (pred == nullptr) {
    throw Error(ErrorCode::kScaleMismatch,
                fmt::format("subtask {} expects per-item labels",
                            SubtaskName(subtask)));
  }
  return ScoreClassification(subtask, gold, *pred);
}

std::vector<TopicSet> GenerateDrift(const DriftSpec& spec) {
  const TopicSet& source = spec.source;
  if (source.items.empty()) {
    throw Error(ErrorCode::kEmptyTopic,
                fmt::format("topic '{}' has no items", source.topic_id));
  }
  if (spec.variants < 1) {
    throw Error(ErrorCode::kInvalidDriftSpec, "variants must be positive");
  }
  for (const auto& [label, fraction] : spec.removals) {
    source.scale.IndexOf(label);
    if (!(fraction >= 0.0 && fraction < 1.0)) {
      throw Error(ErrorCode::kInvalidDriftSpec,
                  fmt::format("removal fraction {} for class {} outside [0,1)",
                              fraction, LabelName(label, source.scale)));
    }
  }

  std::map<Label, std::vector<std::size_t>> members;
  for (std::size_t i = 0; i < source.items.size(); ++i) {
    members[source.items[i].label].push_back(i);
  }
  std::map<Label, std::size_t> to_remove;
  std::size_t total_removed = 0;
  for (const auto& [label, fraction] : spec.removals) {
    auto it = members.find(label);
    if (it == members.end()) continue;
    const auto n = static_cast<std::size_t>(
        std::round(fraction * static_cast<double>(it->second.size())));
    to_remove[label] = n;
    total_removed += n;
  }
  if (total_removed >= source.items.size()) {
    throw Error(ErrorCode::kAllItemsRemoved,
                fmt::format("removals empty topic '{}'", source.topic_id));
  }

  std::mt19937_64 rng(spec.seed);
  std::vector<TopicSet> out;
  out.reserve(static_cast<std::size_t>(spec.variants));
  for (int k = 1; k <= spec.variants; ++k) {
    std::vector<bool> removed(source.items.size(), false);
    for (const auto& [label, n] : to_remove) {
      // Partial Fisher-Yates: the first n slots become the removed sample.
      std::vector<std::size_t> pool = members.at(label);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + Bounded(rng, pool.size() - i);
        std::swap(pool[i], pool[j]);
        removed[pool[i]] = true;
      }
    }
    TopicSet variant{fmt::format("{}#{}", source.topic_id, k), source.scale,
                     {}};
    for (std::size_t i = 0; i < source.items.size(); ++i) {
      if (removed[i]) continue;
      LabeledItem item = source.items[i];
      item.topic_id = variant.topic_id;
      variant.items.push_back(std::move(item));
    }
    out.push_back(std::move(variant));
  }
  return out;
}

}  // namespace sentscore
