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

#ifndef KOSANA_NORMALIZE_H_
#define KOSANA_NORMALIZE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "kosana/types.h"

namespace kosana {

/// One normalized, unique vocabulary entry. `provenance` lists the locators
/// of every raw occurrence that collapsed into it.
struct Entry {
  std::string text;
  std::vector<std::string> provenance;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// A named set of unique entries sharing one scheme.
struct Corpus {
  std::string name;
  Scheme scheme = Scheme::kGeneric;
  std::string language;  // BCP 47 tag when known, may be empty
  std::vector<Entry> entries;
  std::int64_t duplicate_count = 0;
  std::int64_t dropped_empty_count = 0;
};

struct NormalizeConfig {
  /// Code points deleted from entry text before whitespace collapsing.
  std::vector<char32_t> strip_set = {U'!', U'%', U'*'};
  /// Apply Unicode NFC first. Off by default so byte-level fixtures stay
  /// exact.
  bool nfc = false;
};

/// Deletes every occurrence of the given code points; everything else is
/// preserved verbatim.
std::string strip_symbols(std::string_view text,
                          const std::vector<char32_t>& symbols);

/// Trims leading/trailing whitespace and collapses internal runs to a single
/// space.
std::string normalize_whitespace(std::string_view text);

/// Full normalization pipeline: NFC (when enabled), symbol stripping, then
/// whitespace collapsing. Stripping runs before collapsing because deleting
/// a symbol can leave a whitespace run behind.
std::string normalize_text(std::string_view text, const NormalizeConfig& config);

/// Normalizes and deduplicates raw entries into a corpus. Comparison is
/// exact and case sensitive; first-occurrence order is preserved and
/// provenance accumulates onto the first occurrence. Entries that normalize
/// to the empty string are dropped and counted in dropped_empty_count.
/// Throws MixedSchemes when inputs disagree on scheme.
Corpus dedup_entries(const std::vector<RawEntry>& raw, std::string name,
                     const NormalizeConfig& config = {});

}  // namespace kosana

#endif  // KOSANA_NORMALIZE_H_
