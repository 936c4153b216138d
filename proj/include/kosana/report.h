// Copyright (c) 2026 The Kosana Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KOSANA_REPORT_H_
#define KOSANA_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kosana/lint.h"
#include "kosana/patterns.h"
#include "kosana/profile.h"

namespace kosana {

enum class OutputFormat { kJson, kCsv, kMarkdown };

std::optional<OutputFormat> parse_output_format(std::string_view name);

/// Profile rendering. The markdown layout lists entries/tokens/words and
/// the words-per-entry average, then the entity block, the relation block,
/// and basic adjectives; merged rows follow the reference layout (the three
/// entity pronoun kinds fold into one row, comparative and superlative
/// adjectives into another). JSON is lossless: parse_profile_json returns
/// an equal profile. CSV carries one row per tag.
std::string render_profile(const CorpusProfile& profile, OutputFormat format);
CorpusProfile parse_profile_json(const std::string& text);

/// Pattern table as markdown (pattern, count, rate, trailing coverage row)
/// or JSON.
std::string render_patterns(const PatternTable& table, OutputFormat format);

/// One corpus worth of analysis results, the unit `compare` consumes.
struct CorpusBundle {
  std::string name;
  Scheme scheme = Scheme::kGeneric;
  CorpusProfile profile;
  PatternTable patterns;
  ConceptDistribution dist;
};

std::string bundle_to_json(const CorpusBundle& bundle);
CorpusBundle bundle_from_json(const std::string& text);

struct ComparisonReport {
  std::vector<CorpusBundle> corpora;
  std::vector<std::string> notes;
};

/// Side-by-side comparison in input order. Requires at least two corpora
/// (TooFewCorpora) and a shared top-k across the pattern tables. The
/// profiling discrepancy notes are appended verbatim.
ComparisonReport compare(std::vector<CorpusBundle> bundles, std::int64_t k);

std::string render_comparison(const ComparisonReport& report,
                              OutputFormat format);

}  // namespace kosana

#endif  // KOSANA_REPORT_H_
