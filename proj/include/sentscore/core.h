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

// Shared vocabulary: ordinal scales, labels, labeled items grouped by topic,
// confusion matrices and class-prevalence distributions.

#ifndef SENTSCORE_CORE_H_
#define SENTSCORE_CORE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sentscore {

// An ordinal sentiment value. Every scale is coded on the same integer axis:
// Five uses -2..+2, Three uses -1/0/+1 and Two uses -1/+1.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(int value) : value_(value) {}

  constexpr int value() const { return value_; }

  friend constexpr auto operator<=>(Label, Label) = default;

 private:
  int value_ = 0;
};

inline constexpr Label kHighlyNegative{-2};
inline constexpr Label kNegative{-1};
inline constexpr Label kNeutral{0};
inline constexpr Label kPositive{1};
inline constexpr Label kHighlyPositive{2};

enum class ScaleKind { kTwo, kThree, kFive };

// A totally ordered class set. classes() is ascending.
class Scale {
 public:
  static constexpr Scale Two() { return Scale(ScaleKind::kTwo); }
  static constexpr Scale Three() { return Scale(ScaleKind::kThree); }
  static constexpr Scale Five() { return Scale(ScaleKind::kFive); }

  constexpr explicit Scale(ScaleKind kind) : kind_(kind) {}

  constexpr ScaleKind kind() const { return kind_; }
  std::span<const Label> classes() const;
  std::size_t size() const { return classes().size(); }

  bool Contains(Label label) const;
  // Position of `label` in classes(); throws kOffScaleLabel.
  std::size_t IndexOf(Label label) const;
  std::string_view name() const;

  friend constexpr bool operator==(Scale, Scale) = default;

 private:
  ScaleKind kind_;
};

// Canonical lowercase spelling: words on Two/Three, signed integers on Five.
std::string LabelName(Label label, Scale scale);

struct LabeledItem {
  std::string item_id;
  std::optional<std::string> topic_id;
  Label label;

  friend bool operator==(const LabeledItem&, const LabeledItem&) = default;
};

// Identity of an item: (item_id, topic_id). Flat datasets have no topic.
struct ItemKey {
  std::string item_id;
  std::optional<std::string> topic_id;

  friend auto operator<=>(const ItemKey&, const ItemKey&) = default;
  friend bool operator==(const ItemKey&, const ItemKey&) = default;
};

ItemKey KeyOf(const LabeledItem& item);
std::string DescribeKey(const ItemKey& key);

struct TopicSet {
  std::string topic_id;
  Scale scale = Scale::Five();
  std::vector<LabeledItem> items;
};

// Splits items by topic_id. Output is sorted by topic_id; items keep their
// input order. Throws if an item has no topic or a label is off `scale`.
std::vector<TopicSet> GroupByTopic(std::span<const LabeledItem> items,
                                   Scale scale);

// Counts indexed (predicted, gold).
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(Scale scale);

  Scale scale() const { return scale_; }

  void Add(Label predicted, Label gold, std::int64_t count = 1);
  std::int64_t at(Label predicted, Label gold) const;
  std::int64_t at_index(std::size_t predicted, std::size_t gold) const {
    return counts_[predicted * scale_.size() + gold];
  }

  std::int64_t total() const { return total_; }
  std::int64_t RowSum(Label predicted) const;
  std::int64_t ColumnSum(Label gold) const;
  std::int64_t Trace() const;

 private:
  Scale scale_;
  std::vector<std::int64_t> counts_;
  std::int64_t total_ = 0;
};

struct LabelPair {
  Label gold;
  Label predicted;
};

// Matches every gold item with its prediction by exact key. Result follows
// gold order.
std::vector<LabelPair> AlignPredictions(std::span<const LabeledItem> gold,
                                        std::span<const LabeledItem> pred,
                                        Scale scale);

ConfusionMatrix ConfusionFromPairs(std::span<const LabelPair> pairs,
                                   Scale scale);

ConfusionMatrix BuildConfusion(std::span<const LabeledItem> gold,
                               std::span<const LabeledItem> pred, Scale scale);

// Maps a five-point label onto `target`. Neutral has no image on Two.
std::optional<Label> CollapseScale(Label label, Scale target);

// Collapses every item, dropping those without an image on `target`.
std::vector<LabeledItem> CollapseItems(std::span<const LabeledItem> items,
                                       Scale target);

inline constexpr double kDistributionTolerance = 1e-6;

// Class prevalences over a scale, indexed like Scale::classes().
class Distribution {
 public:
  // Validates entries in [0,1] and a sum within `tolerance` of 1. Input is
  // never renormalized.
  static Distribution Make(Scale scale, std::vector<double> prevalences,
                           double tolerance = kDistributionTolerance);
  static Distribution FromCounts(Scale scale,
                                 std::span<const std::int64_t> counts);
  // All mass on `label`.
  static Distribution Degenerate(Scale scale, Label label);

  Scale scale() const { return scale_; }
  std::span<const double> values() const { return prevalences_; }
  double operator[](Label label) const {
    return prevalences_[scale_.IndexOf(label)];
  }
  double at_index(std::size_t i) const { return prevalences_[i]; }
  std::size_t size() const { return prevalences_.size(); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  Distribution(Scale scale, std::vector<double> prevalences)
      : scale_(scale), prevalences_(std::move(prevalences)) {}

  Scale scale_;
  std::vector<double> prevalences_;
};

Distribution Prevalence(std::span<const LabeledItem> items, Scale scale);

}  // namespace sentscore

#endif  // SENTSCORE_CORE_H_
