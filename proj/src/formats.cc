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

#include "sentscore/formats.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include <fmt/format.h>

namespace sentscore::io {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> fields;
};

// Splits into non-comment, non-empty lines and their TAB-separated fields.
std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    Line out{number, {}};
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      if (tab == std::string_view::npos) {
        out.fields.push_back(line.substr(start));
        break;
      }
      out.fields.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    lines.push_back(std::move(out));
  }
  return lines;
}

std::string Lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  });
  return out;
}

std::optional<int> ParseInt(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty() || s.front() == '+') return std::nullopt;
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<Label> ParseLabel(std::string_view field, Scale scale) {
  if (scale.kind() == ScaleKind::kFive) {
    const auto v = ParseInt(field);
    if (!v || !scale.Contains(Label(*v))) return std::nullopt;
    return Label(*v);
  }
  const std::string word = Lower(field);
  if (word == "positive") return kPositive;
  if (word == "negative") return kNegative;
  if (word == "neutral" && scale.kind() == ScaleKind::kThree) return kNeutral;
  return std::nullopt;
}

std::optional<double> ParseProbability(std::string_view s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    return std::nullopt;
  }
  if (!std::isfinite(v) || v < 0.0 || v > 1.0) return std::nullopt;
  return v;
}

// Collects the diagnostics of one parse pass.
class Checker {
 public:
  bool FieldCount(const Line& line, std::size_t expected) {
    if (line.fields.size() != expected) {
      return Fail(line, ParseIssue::kBadFieldCount,
                  fmt::format("expected {} tab-separated fields, found {}",
                              expected, line.fields.size()));
    }
    for (std::size_t i = 0; i < line.fields.size(); ++i) {
      if (line.fields[i].empty()) {
        return Fail(line, ParseIssue::kBadFieldCount,
                    fmt::format("field {} is empty", i + 1));
      }
    }
    return true;
  }

  bool Fail(const Line& line, ParseIssue issue, std::string message) {
    diagnostics_.push_back(Diagnostic{line.number, issue, std::move(message)});
    return false;
  }

  std::vector<Diagnostic> Take() { return std::move(diagnostics_); }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Scale the label column of a gold/prediction file is written on.
Scale FileScale(Subtask subtask) {
  return subtask == Subtask::kD ? Scale::Five() : ScaleFor(subtask);
}

Parsed<std::vector<LabeledItem>> ParseItems(std::string_view text,
                                            Subtask subtask) {
  const bool topical = IsTopical(subtask);
  const Scale file_scale = FileScale(subtask);
  const std::size_t fields = topical ? 3 : 2;
  Checker check;
  std::set<ItemKey> seen;
  std::vector<LabeledItem> items;
  for (const Line& line : SplitLines(text)) {
    if (!check.FieldCount(line, fields)) continue;
    const std::string_view label_field = line.fields.back();
    const auto label = ParseLabel(label_field, file_scale);
    if (!label) {
      check.Fail(line, ParseIssue::kBadLabel,
                 fmt::format("'{}' is not a {} label", label_field,
                             file_scale.name()));
      continue;
    }
    LabeledItem item{std::string(line.fields[0]), std::nullopt, *label};
    if (topical) item.topic_id = std::string(line.fields[1]);
    if (!seen.insert(KeyOf(item)).second) {
      check.Fail(line, ParseIssue::kDuplicateKey,
                 fmt::format("{} already listed", DescribeKey(KeyOf(item))));
      continue;
    }
    items.push_back(std::move(item));
  }
  return {std::move(items), check.Take()};
}

Parsed<TopicDistributions> ParseDistributions(std::string_view text,
                                              Subtask subtask) {
  const Scale scale = ScaleFor(subtask);
  Checker check;
  TopicDistributions out;
  for (const Line& line : SplitLines(text)) {
    if (!check.FieldCount(line, 1 + scale.size())) continue;
    std::vector<double> values;
    bool ok = true;
    for (std::size_t i = 1; i < line.fields.size(); ++i) {
      const auto v = ParseProbability(line.fields[i]);
      if (!v) {
        ok = check.Fail(line, ParseIssue::kBadProbability,
                        fmt::format("'{}' is not a probability in [0,1]",
                                    line.fields[i]));
        break;
      }
      values.push_back(*v);
    }
    if (!ok) continue;
    // D rows list positive first; the scale's class order is ascending.
    if (subtask == Subtask::kD) std::reverse(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) sum += v;
    if (std::abs(sum - 1.0) > kDistributionTolerance) {
      check.Fail(line, ParseIssue::kBadProbability,
                 fmt::format("probabilities sum to {}", sum));
      continue;
    }
    std::string topic(line.fields[0]);
    if (out.contains(topic)) {
      check.Fail(line, ParseIssue::kDuplicateKey,
                 fmt::format("topic '{}' already listed", topic));
      continue;
    }
    out.emplace(std::move(topic), Distribution::Make(scale, std::move(values)));
  }
  return {std::move(out), check.Take()};
}

template <class T>
T Strict(Parsed<T> parsed, std::string_view source) {
  if (!parsed.diagnostics.empty()) {
    throw ParseError(std::string(source), std::move(parsed.diagnostics));
  }
  return std::move(parsed.value);
}

std::string Fmt(double v) { return fmt::format("{}", v); }

}  // namespace

Parsed<std::vector<LabeledItem>> ParseGoldText(std::string_view text,
                                               Subtask subtask) {
  Parsed<std::vector<LabeledItem>> parsed = ParseItems(text, subtask);
  if (subtask == Subtask::kD) {
    parsed.value = CollapseItems(parsed.value, Scale::Two());
  }
  return parsed;
}

Parsed<Predictions> ParsePredictionsText(std::string_view text,
                                         Subtask subtask) {
  if (IsQuantification(subtask)) {
    auto parsed = ParseDistributions(text, subtask);
    return {Predictions(std::move(parsed.value)),
            std::move(parsed.diagnostics)};
  }
  auto parsed = ParseItems(text, subtask);
  return {Predictions(std::move(parsed.value)), std::move(parsed.diagnostics)};
}

Parsed<std::vector<consolidation::VoteSet>> ParseVotesText(
    std::string_view text) {
  Checker check;
  std::set<std::string, std::less<>> seen;
  std::vector<consolidation::VoteSet> out;
  for (const Line& line : SplitLines(text)) {
    if (!check.FieldCount(line, 1 + consolidation::kAnnotators)) continue;
    consolidation::VoteSet votes{std::string(line.fields[0]), {}};
    bool ok = true;
    for (std::size_t i = 0; i < consolidation::kAnnotators; ++i) {
      const auto label = ParseLabel(line.fields[i + 1], Scale::Five());
      if (!label) {
        ok = check.Fail(line, ParseIssue::kBadLabel,
                        fmt::format("vote '{}' is not a five-point label",
                                    line.fields[i + 1]));
        break;
      }
      votes.votes[i] = *label;
    }
    if (!ok) continue;
    if (!seen.insert(votes.item_id).second) {
      check.Fail(line, ParseIssue::kDuplicateKey,
                 fmt::format("item '{}' already listed", votes.item_id));
      continue;
    }
    out.push_back(std::move(votes));
  }
  return {std::move(out), check.Take()};
}

std::optional<Label> ParseLabelField(std::string_view field, Scale scale) {
  return ParseLabel(field, scale);
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot open '{}'", path.string()));
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<LabeledItem> ParseGold(std::string_view text, Subtask subtask,
                                   std::string_view source) {
  return Strict(ParseGoldText(text, subtask), source);
}

Predictions ParsePredictions(std::string_view text, Subtask subtask,
                             std::string_view source) {
  return Strict(ParsePredictionsText(text, subtask), source);
}

std::vector<consolidation::VoteSet> ParseVotes(std::string_view text,
                                               std::string_view source) {
  return Strict(ParseVotesText(text), source);
}

std::vector<LabeledItem> ParseGold(const std::filesystem::path& path,
                                   Subtask subtask) {
  return ParseGold(ReadFile(path), subtask, path.string());
}

Predictions ParsePredictions(const std::filesystem::path& path,
                             Subtask subtask) {
  return ParsePredictions(ReadFile(path), subtask, path.string());
}

std::vector<consolidation::VoteSet> ParseVotes(
    const std::filesystem::path& path) {
  return ParseVotes(ReadFile(path), path.string());
}

std::string EmitGold(std::span<const LabeledItem> items, Subtask subtask) {
  const Scale scale = FileScale(subtask);
  std::string out;
  for (const LabeledItem& item : items) {
    out += item.item_id;
    out += '\t';
    if (IsTopical(subtask)) {
      out += item.topic_id.value_or("");
      out += '\t';
    }
    out += LabelName(item.label, scale);
    out += '\n';
  }
  return out;
}

std::string EmitPredictions(const Predictions& predictions, Subtask subtask) {
  if (const auto* items = std::get_if<std::vector<LabeledItem>>(&predictions)) {
    return EmitGold(*items, subtask);
  }
  std::string out;
  for (const auto& [topic, d] : std::get<TopicDistributions>(predictions)) {
    out += topic;
    std::vector<double> values(d.values().begin(), d.values().end());
    if (subtask == Subtask::kD) std::reverse(values.begin(), values.end());
    for (double v : values) {
      out += '\t';
      out += Fmt(v);
    }
    out += '\n';
  }
  return out;
}

std::string EmitVotes(std::span<const consolidation::VoteSet> votes) {
  std::string out;
  for (const auto& v : votes) {
    out += v.item_id;
    for (Label l : v.votes) {
      out += '\t';
      out += std::to_string(l.value());
    }
    out += '\n';
  }
  return out;
}

std::string EmitConsolidated(
    std::span<const consolidation::Consolidated> results) {
  std::string out;
  for (const auto& r : results) {
    out += fmt::format("{}\t{}\t{}\n", r.item_id, r.label.value(),
                       consolidation::CaseTagName(r.tag));
  }
  return out;
}

std::string EmitCollapsed(std::span<const LabeledItem> items, Scale target) {
  if (target.kind() == ScaleKind::kThree) return EmitGold(items, Subtask::kA);
  if (target.kind() == ScaleKind::kTwo) return EmitGold(items, Subtask::kB);
  return EmitGold(items, Subtask::kC);
}

}  // namespace sentscore::io
