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

#ifndef SENTSCORE_REPORT_H_
#define SENTSCORE_REPORT_H_

#include <optional>
#include <string>
#include <string_view>

#include "sentscore/harness.h"

namespace sentscore::io {

enum class ReportFormat { kText, kJson, kTsv };

std::optional<ReportFormat> ParseReportFormat(std::string_view name);

struct EmitOptions {
  // Appends the per-topic table to text output. JSON always carries it and
  // TSV is nothing but it.
  bool per_topic = false;
};

// text: one "NAME<TAB>value" line per measure, official first, 3 decimals.
// json: the whole report at full precision.
// tsv:  a '#'-prefixed header, then one row per topic at full precision.
std::string EmitReport(const ScoreReport& report, ReportFormat format,
                       EmitOptions options = {});

}  // namespace sentscore::io

#endif  // SENTSCORE_REPORT_H_
