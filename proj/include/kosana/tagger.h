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

#ifndef KOSANA_TAGGER_H_
#define KOSANA_TAGGER_H_

#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kosana/tags.h"
#include "kosana/tokenize.h"
#include "kosana/utf8.h"

namespace kosana {

/// Exact, case-sensitive surface-form lookup table. Stands in for an
/// external tagger's model on small corpora and in tests.
class Lexicon {
 public:
  Lexicon() = default;

  /// TSV `surface<TAB>fine-tag`. Blank lines are skipped; a repeated
  /// surface form throws DuplicateSurface.
  static Lexicon load(std::istream& in);

  void add(std::string surface, FineTag tag);
  std::optional<FineTag> lookup(std::string_view surface) const;
  std::size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, FineTag> map_;
};

Lexicon load_lexicon_file(const std::string& path);

/// Picks the script the corpus language implies ("el" and "grc" map to
/// Greek, everything else to Latin).
uni::Script script_for_language(std::string_view language_tag);

/// Tags pre-tokenized text. Punctuation and digit hints map directly; words
/// take an exact lexicon hit, then fall back in order: all-capitals of
/// length >= 2 -> Abbr; capitalized and not the first word of the entry ->
/// NoPr; any letter outside the primary script -> Rgf; otherwise NoCm.
TaggedEntry tag_with_lexicon(const Entry& entry,
                             const std::vector<RawToken>& tokens,
                             const Lexicon& lexicon,
                             uni::Script primary_script = uni::Script::kLatin);

/// Tokenizes and tags one entry.
TaggedEntry tag_entry(const Entry& entry, const Lexicon& lexicon,
                      uni::Script primary_script = uni::Script::kLatin);

/// Tags a whole corpus. The script defaults to what the corpus language
/// implies.
TaggedCorpus tag_corpus(const Corpus& corpus, const Lexicon& lexicon,
                        std::optional<uni::Script> script = std::nullopt);

// Vertical pre-tagged format: one `surface<TAB>fine-tag` line per token, a
// blank line terminates an entry, `#` starts a comment line. Entry text is
// reconstructed by joining surfaces with single spaces, except no space
// before a PunctClose/PunctOther token and none after a PunctOpen token.

std::vector<TaggedEntry> import_pretagged(std::istream& in);
void export_pretagged(const std::vector<TaggedEntry>& entries,
                      std::ostream& out);

/// The canonical entry text for a token sequence under the vertical-format
/// spacing rule.
std::string reconstruct_text(const std::vector<Token>& tokens);

/// Pairs imported pre-tagged entries with corpus entries by position.
/// Throws CountMismatch or TextMismatch.
TaggedCorpus align_pretagged(const Corpus& corpus,
                             std::vector<TaggedEntry> tagged);

}  // namespace kosana

#endif  // KOSANA_TAGGER_H_
