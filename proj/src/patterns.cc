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

#include "kosana/patterns.h"

#include <algorithm>
#include <map>

#include "kosana/errors.h"
#include "kosana/stats.h"

namespace kosana {

namespace {
constexpr std::string_view kRenderNames[] = {
    "N",  "Adj", "Adp", "Art", "Conj",   "V",      "Adv",  "Abr",
    "Res", "Dig", "Pn",  "Pt",  "OPunct", "CPunct", "Punct"};
}

std::string_view render_tag_name(RenderTag tag) {
  return kRenderNames[static_cast<int>(tag)];
}

RenderTag render_tag(FineTag tag) {
  switch (tag) {
    case FineTag::kNoCm:
    case FineTag::kNoPr:
      return RenderTag::kN;
    case FineTag::kAjBa:
    case FineTag::kAjCp:
    case FineTag::kAjSp:
      return RenderTag::kAdj;
    case FineTag::kAsPp:
      return RenderTag::kAdp;
    case FineTag::kAt:
      return RenderTag::kArt;
    case FineTag::kCj:
      return RenderTag::kConj;
    case FineTag::kVb:
      return RenderTag::kV;
    case FineTag::kAd:
      return RenderTag::kAdv;
    case FineTag::kAbbr:
      return RenderTag::kAbr;
    case FineTag::kRgf:
      return RenderTag::kRes;
    case FineTag::kDig:
      return RenderTag::kDig;
    case FineTag::kPnDm:
    case FineTag::kPnPe:
    case FineTag::kPnRi:
    case FineTag::kPnPo:
      return RenderTag::kPn;
    case FineTag::kPtNg:
      return RenderTag::kPt;
    case FineTag::kPunctOpen:
      return RenderTag::kOPunct;
    case FineTag::kPunctClose:
      return RenderTag::kCPunct;
    case FineTag::kPunctOther:
      return RenderTag::kPunct;
  }
  return RenderTag::kN;
}

std::string PatternKey::display() const {
  std::string out;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    if (i > 0) out += " + ";
    out += render_tag_name(tags[i]);
  }
  return out;
}

PatternKey render_pattern(const TaggedEntry& entry) {
  PatternKey key;
  key.tags.reserve(entry.tokens.size());
  for (const Token& token : entry.tokens) {
    key.tags.push_back(render_tag(token.tag));
  }
  return key;
}

std::int64_t PatternTable::covered() const {
  const std::size_t take =
      std::min(rows.size(), static_cast<std::size_t>(top_k));
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < take; ++i) sum += rows[i].count;
  return sum;
}

std::string PatternTable::coverage_pct() const {
  return stats::format_pct(covered(), entries);
}

std::string PatternTable::entries_per_pattern_avg() const {
  return stats::format_fixed(entries, unique_patterns());
}

std::string PatternTable::pct_of_entries(std::int64_t count) const {
  return stats::format_pct(count, entries);
}

std::string PatternTable::coverage_label() const {
  if (unique_patterns() <= top_k) return "Sum";
  return "Sum of " + std::to_string(top_k);
}

PatternTable mine_patterns(const TaggedCorpus& corpus, std::int64_t k) {
  if (corpus.entries.empty()) throw EmptyCorpus();
  if (k < 1) throw Error("top-k must be at least 1");

  std::map<std::string, PatternRow> counts;
  for (const TaggedEntry& entry : corpus.entries) {
    PatternKey key = render_pattern(entry);
    std::string display = key.display();
    auto [it, inserted] = counts.try_emplace(std::move(display));
    if (inserted) it->second.pattern = std::move(key);
    ++it->second.count;
  }

  PatternTable table;
  table.entries = static_cast<std::int64_t>(corpus.entries.size());
  table.top_k = k;
  table.rows.reserve(counts.size());
  // std::map iteration is already in display order, so a stable sort by
  // descending count leaves ties lexicographic.
  for (auto& [display, row] : counts) table.rows.push_back(std::move(row));
  std::stable_sort(table.rows.begin(), table.rows.end(),
                   [](const PatternRow& a, const PatternRow& b) {
                     return a.count > b.count;
                   });
  return table;
}

}  // namespace kosana
