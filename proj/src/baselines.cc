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

#include "sentscore/baselines.h"

#include <fmt/format.h>

#include "sentscore/error.h"

namespace sentscore::baselines {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

[[noreturn]] void Mismatch(Subtask subtask, std::string_view policy) {
  throw Error(ErrorCode::kPolicySubtaskMismatch,
              fmt::format("policy {} does not apply to subtask {}", policy,
                          SubtaskName(subtask)));
}

TopicDistributions PerTopic(std::span<const LabeledItem> gold_shape,
                            const Distribution& d) {
  if (gold_shape.empty()) throw Error(ErrorCode::kEmptyDataset, "no items");
  TopicDistributions out;
  for (const LabeledItem& item : gold_shape) {
    if (!item.topic_id) {
      throw Error(ErrorCode::kMissingTopic,
                  fmt::format("{} has no topic", DescribeKey(KeyOf(item))));
    }
    out.try_emplace(*item.topic_id, d);
  }
  return out;
}

}  // namespace

Predictions RunBaseline(const BaselineSpec& spec,
                        std::span<const LabeledItem> gold_shape) {
  const Scale scale = ScaleFor(spec.subtask);
  const bool quantification = IsQuantification(spec.subtask);
  return std::visit(
      Overloaded{
          [&](const ConstantClass& p) -> Predictions {
            if (quantification) Mismatch(spec.subtask, "ConstantClass");
            scale.IndexOf(p.label);
            if (gold_shape.empty()) {
              throw Error(ErrorCode::kEmptyDataset, "no items");
            }
            std::vector<LabeledItem> out;
            out.reserve(gold_shape.size());
            for (const LabeledItem& item : gold_shape) {
              out.push_back(LabeledItem{item.item_id, item.topic_id, p.label});
            }
            return out;
          },
          [&](const TrainPrevalence& p) -> Predictions {
            if (!quantification) Mismatch(spec.subtask, "TrainPrevalence");
            if (p.distribution.scale() != scale) {
              throw Error(ErrorCode::kScaleMismatch,
                          fmt::format("training distribution is {}, subtask "
                                      "{} is {}",
                                      p.distribution.scale().name(),
                                      SubtaskName(spec.subtask), scale.name()));
            }
            return PerTopic(gold_shape, p.distribution);
          },
          [&](const MajorityPrevalence& p) -> Predictions {
            if (!quantification) Mismatch(spec.subtask, "MajorityPrevalence");
            return PerTopic(gold_shape, Distribution::Degenerate(scale, p.label));
          },
      },
      spec.policy);
}

}  // namespace sentscore::baselines
