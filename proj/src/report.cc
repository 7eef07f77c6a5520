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

#include "sentscore/report.h"

#include <fmt/format.h>
#include <nlohmann/json.hpp>

namespace sentscore::io {

std::optional<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "text") return ReportFormat::kText;
  if (name == "json") return ReportFormat::kJson;
  if (name == "tsv") return ReportFormat::kTsv;
  return std::nullopt;
}

namespace {

std::string TsvHeader(const ScoreReport& report) {
  std::string out = "#topic_id";
  for (const Measure& m : report.AllMeasures()) out += "\t" + m.name;
  return out + "\n";
}

std::string EmitText(const ScoreReport& report, EmitOptions options) {
  std::string out;
  for (const Measure& m : report.AllMeasures()) {
    out += fmt::format("{}\t{:.3f}\n", m.name, m.value);
  }
  if (options.per_topic && !report.per_topic.empty()) {
    out += "\n" + TsvHeader(report);
    for (const auto& [topic, values] : report.per_topic) {
      out += topic;
      for (const Measure& m : values) out += fmt::format("\t{:.3f}", m.value);
      out += "\n";
    }
  }
  return out;
}

std::string EmitJson(const ScoreReport& report) {
  nlohmann::ordered_json j;
  j["subtask"] = std::string(SubtaskName(report.subtask));
  j["official"] = {{"name", report.official.name},
                   {"value", report.official.value}};
  nlohmann::ordered_json secondary = nlohmann::ordered_json::object();
  for (const Measure& m : report.secondary) secondary[m.name] = m.value;
  j["secondary"] = secondary;
  nlohmann::ordered_json per_topic = nlohmann::ordered_json::object();
  for (const auto& [topic, values] : report.per_topic) {
    nlohmann::ordered_json row = nlohmann::ordered_json::object();
    for (const Measure& m : values) row[m.name] = m.value;
    per_topic[topic] = row;
  }
  j["per_topic"] = per_topic;
  j["n_topics"] = report.n_topics;
  j["n_items"] = report.n_items;
  return j.dump(2) + "\n";
}

std::string EmitTsv(const ScoreReport& report) {
  std::string out = TsvHeader(report);
  for (const auto& [topic, values] : report.per_topic) {
    out += topic;
    for (const Measure& m : values) out += fmt::format("\t{}", m.value);
    out += "\n";
  }
  return out;
}

}  // namespace

std::string EmitReport(const ScoreReport& report, ReportFormat format,
                       EmitOptions options) {
  switch (format) {
    case ReportFormat::kText: return EmitText(report, options);
    case ReportFormat::kJson: return EmitJson(report);
    case ReportFormat::kTsv: return EmitTsv(report);
  }
  return {};
}

}  // namespace sentscore::io
