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

#ifndef KOSANA_PATTERNS_H_
#define KOSANA_PATTERNS_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "kosana/tags.h"

namespace kosana {

/// Coarse rendering of the tag set used for syntactic patterns. Common and
/// proper nouns merge into N; all adjective grades merge into Adj; all
/// pronoun kinds merge into Pn.
enum class RenderTag : std::uint8_t {
  kN,
  kAdj,
  kAdp,
  kArt,
  kConj,
  kV,
  kAdv,
  kAbr,
  kRes,
  kDig,
  kPn,
  kPt,
  kOPunct,
  kCPunct,
  kPunct,
};

std::string_view render_tag_name(RenderTag tag);
RenderTag render_tag(FineTag tag);

/// The POS-sequence pattern of one entry, displayed as tags joined with
/// " + ", e.g. "N + OPunct + N + CPunct".
struct PatternKey {
  std::vector<RenderTag> tags;

  std::string display() const;
  auto operator<=>(const PatternKey&) const = default;
};

PatternKey render_pattern(const TaggedEntry& entry);

struct PatternRow {
  PatternKey pattern;
  std::int64_t count = 0;
};

/// Pattern frequency table, sorted by count descending with ties broken by
/// lexicographic order of the display form.
struct PatternTable {
  std::vector<PatternRow> rows;
  std::int64_t entries = 0;
  std::int64_t top_k = 20;

  std::int64_t unique_patterns() const {
    return static_cast<std::int64_t>(rows.size());
  }
  /// Entries covered by the first min(top_k, unique) rows.
  std::int64_t covered() const;
  std::string coverage_pct() const;
  std::string entries_per_pattern_avg() const;
  std::string pct_of_entries(std::int64_t count) const;
  /// "Sum of 20", or plain "Sum" when every pattern fits in the top k.
  std::string coverage_label() const;
};

/// Exact pattern counts over the corpus. Throws EmptyCorpus; requires
/// k >= 1.
PatternTable mine_patterns(const TaggedCorpus& corpus, std::int64_t k = 20);

}  // namespace kosana

#endif  // KOSANA_PATTERNS_H_
