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

#include "kosana/normalize.h"

#include <algorithm>
#include <unordered_map>

#include "kosana/errors.h"
#include "kosana/unicode_norm.h"
#include "kosana/utf8.h"

namespace kosana {

std::string strip_symbols(std::string_view text,
                          const std::vector<char32_t>& symbols) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::decode(text)) {
    if (std::find(symbols.begin(), symbols.end(), cp) != symbols.end()) {
      continue;
    }
    utf8::append(cp, out);
  }
  return out;
}

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool seen_nonspace = false;
  for (char32_t cp : utf8::decode(text)) {
    if (uni::is_ascii_space(cp)) {
      pending_space = true;
      continue;
    }
    if (pending_space && seen_nonspace) out.push_back(' ');
    pending_space = false;
    seen_nonspace = true;
    utf8::append(cp, out);
  }
  return out;
}

std::string normalize_text(std::string_view text,
                           const NormalizeConfig& config) {
  std::string stage = config.nfc ? nfc(text) : std::string(text);
  stage = strip_symbols(stage, config.strip_set);
  return normalize_whitespace(stage);
}

Corpus dedup_entries(const std::vector<RawEntry>& raw, std::string name,
                     const NormalizeConfig& config) {
  Corpus corpus;
  corpus.name = std::move(name);
  if (!raw.empty()) corpus.scheme = raw.front().scheme;

  std::unordered_map<std::string, std::size_t> index_by_text;
  for (const RawEntry& entry : raw) {
    if (entry.scheme != corpus.scheme) {
      throw MixedSchemes(std::string(scheme_name(corpus.scheme)),
                         std::string(scheme_name(entry.scheme)));
    }
    std::string text = normalize_text(entry.text, config);
    if (text.empty()) {
      ++corpus.dropped_empty_count;
      continue;
    }
    auto [it, inserted] =
        index_by_text.try_emplace(std::move(text), corpus.entries.size());
    if (inserted) {
      corpus.entries.push_back(Entry{it->first, {entry.locator}});
    } else {
      ++corpus.duplicate_count;
      corpus.entries[it->second].provenance.push_back(entry.locator);
    }
  }
  return corpus;
}

}  // namespace kosana
