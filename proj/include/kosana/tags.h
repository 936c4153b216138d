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

#ifndef KOSANA_TAGS_H_
#define KOSANA_TAGS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kosana/normalize.h"

namespace kosana {

/// Closed fine-grained part-of-speech tag set. Importers reject anything
/// outside it.
enum class FineTag : std::uint8_t {
  kNoCm,        // common noun
  kNoPr,        // proper noun
  kAbbr,        // all-capitals abbreviation
  kAjBa,        // basic adjective
  kAjCp,        // comparative adjective
  kAjSp,        // superlative adjective
  kVb,          // verb
  kCj,          // conjunction
  kAsPp,        // adposition
  kPtNg,        // negative particle
  kAd,          // adverb
  kAt,          // article
  kPnDm,        // demonstrative pronoun
  kPnPe,        // personal pronoun
  kPnRi,        // relative-indefinite pronoun
  kPnPo,        // possessive pronoun
  kRgf,         // residual / foreign word
  kDig,         // digit sequence
  kPunctOpen,   // ( [ { «
  kPunctClose,  // ) ] } »
  kPunctOther,  // , . ; : ' " / em-dash hyphen
};

inline constexpr int kFineTagCount = 21;

constexpr std::array<FineTag, kFineTagCount> all_fine_tags() {
  return {FineTag::kNoCm, FineTag::kNoPr, FineTag::kAbbr,  FineTag::kAjBa,
          FineTag::kAjCp, FineTag::kAjSp, FineTag::kVb,    FineTag::kCj,
          FineTag::kAsPp, FineTag::kPtNg, FineTag::kAd,    FineTag::kAt,
          FineTag::kPnDm, FineTag::kPnPe, FineTag::kPnRi,  FineTag::kPnPo,
          FineTag::kRgf,  FineTag::kDig,  FineTag::kPunctOpen,
          FineTag::kPunctClose, FineTag::kPunctOther};
}

std::string_view fine_tag_name(FineTag tag);
std::optional<FineTag> parse_fine_tag(std::string_view name);

inline bool is_punct_tag(FineTag tag) {
  return tag == FineTag::kPunctOpen || tag == FineTag::kPunctClose ||
         tag == FineTag::kPunctOther;
}

/// Words are the tokens left after digits and punctuation are excluded.
inline bool is_word_tag(FineTag tag) {
  return tag != FineTag::kDig && !is_punct_tag(tag);
}

/// One tagged surface form. Spans are code point offsets into the entry
/// text, end exclusive; they are strictly increasing and non-overlapping.
struct Token {
  std::string surface;
  FineTag tag = FineTag::kNoCm;
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Token&, const Token&) = default;
};

struct TaggedEntry {
  Entry entry;
  std::vector<Token> tokens;

  friend bool operator==(const TaggedEntry&, const TaggedEntry&) = default;
};

struct TaggedCorpus {
  std::string name;
  Scheme scheme = Scheme::kGeneric;
  std::string language;
  std::vector<TaggedEntry> entries;
};

}  // namespace kosana

#endif  // KOSANA_TAGS_H_
