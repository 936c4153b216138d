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

#ifndef KOSANA_PROFILE_H_
#define KOSANA_PROFILE_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kosana/tags.h"

namespace kosana {

/// The entity/relation partition of the tag set. Entities indicate
/// concepts; relations indicate links between concepts; the rest stays
/// uncategorized.
enum class Role { kEntity, kRelation, kUncategorized };

std::string_view role_name(Role role);

inline constexpr std::array<FineTag, 7> kEntityTags = {
    FineTag::kNoCm, FineTag::kNoPr, FineTag::kAbbr, FineTag::kPnDm,
    FineTag::kPnPe, FineTag::kPnRi, FineTag::kRgf};

inline constexpr std::array<FineTag, 8> kRelationTags = {
    FineTag::kVb,   FineTag::kCj, FineTag::kAsPp, FineTag::kPtNg,
    FineTag::kAjCp, FineTag::kAjSp, FineTag::kAd, FineTag::kPnPo};

Role classify_role(FineTag tag);

/// Number of word tokens (everything but digits and punctuation).
std::int64_t word_count(const TaggedEntry& entry);

/// Per-corpus tag statistics. Only integer counts are stored; averages and
/// percentages are derived on demand so presentation rounding happens once,
/// at the formatting edge.
struct CorpusProfile {
  std::int64_t entries = 0;
  std::int64_t tokens = 0;
  std::int64_t words = 0;
  std::array<std::int64_t, kFineTagCount> tag_counts{};

  std::int64_t tag_count(FineTag tag) const {
    return tag_counts[static_cast<int>(tag)];
  }
  std::int64_t& tag_count(FineTag tag) {
    return tag_counts[static_cast<int>(tag)];
  }

  std::int64_t entity_sum() const;
  std::int64_t relation_sum() const;

  /// "2.19"-style average of words per entry.
  std::string words_per_entry() const;
  /// Average of a count over the entry total, 2 decimals.
  std::string avg_per_entry(std::int64_t count) const;
  /// Share of a count in the word total, e.g. "56.04%".
  std::string pct_of_words(std::int64_t count) const;

  friend bool operator==(const CorpusProfile&, const CorpusProfile&) = default;
};

/// Counts tags across the corpus. Pure function of the multiset of tag
/// sequences; entry text is never consulted. Throws EmptyCorpus.
CorpusProfile profile_corpus(const TaggedCorpus& corpus);

/// Annotations about known inconsistencies in the published reference
/// table this layout mirrors. Comparison reports carry them verbatim.
const std::vector<std::string>& reference_discrepancy_notes();

}  // namespace kosana

#endif  // KOSANA_PROFILE_H_
