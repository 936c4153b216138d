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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kosana/errors.h"
#include "kosana/profile.h"
#include "kosana/stats.h"

using namespace kosana;

namespace {

TaggedEntry entry_with(const std::vector<FineTag>& tags) {
  TaggedEntry entry;
  std::size_t pos = 0;
  for (FineTag tag : tags) {
    entry.tokens.push_back({"x", tag, pos, pos + 1});
    pos += 2;
  }
  return entry;
}

TaggedCorpus corpus_of(const std::vector<std::vector<FineTag>>& sequences) {
  TaggedCorpus corpus;
  for (const auto& tags : sequences) corpus.entries.push_back(entry_with(tags));
  return corpus;
}

}  // namespace

TEST_CASE("role map matches the entity/relation partition") {
  CHECK(classify_role(FineTag::kAsPp) == Role::kRelation);
  CHECK(classify_role(FineTag::kAjBa) == Role::kUncategorized);
  CHECK(classify_role(FineTag::kRgf) == Role::kEntity);

  const struct {
    FineTag tag;
    Role role;
  } table[] = {
      {FineTag::kNoCm, Role::kEntity},
      {FineTag::kNoPr, Role::kEntity},
      {FineTag::kAbbr, Role::kEntity},
      {FineTag::kPnDm, Role::kEntity},
      {FineTag::kPnPe, Role::kEntity},
      {FineTag::kPnRi, Role::kEntity},
      {FineTag::kRgf, Role::kEntity},
      {FineTag::kVb, Role::kRelation},
      {FineTag::kCj, Role::kRelation},
      {FineTag::kAsPp, Role::kRelation},
      {FineTag::kPtNg, Role::kRelation},
      {FineTag::kAjCp, Role::kRelation},
      {FineTag::kAjSp, Role::kRelation},
      {FineTag::kAd, Role::kRelation},
      {FineTag::kPnPo, Role::kRelation},
      {FineTag::kAjBa, Role::kUncategorized},
      {FineTag::kAt, Role::kUncategorized},
      {FineTag::kDig, Role::kUncategorized},
      {FineTag::kPunctOpen, Role::kUncategorized},
      {FineTag::kPunctClose, Role::kUncategorized},
      {FineTag::kPunctOther, Role::kUncategorized},
  };
  static_assert(std::size(table) == kFineTagCount);
  for (const auto& row : table) {
    CHECK(classify_role(row.tag) == row.role);
  }
}

TEST_CASE("word_count excludes digits and punctuation") {
  CHECK(word_count(entry_with({FineTag::kNoCm, FineTag::kPunctOpen,
                               FineTag::kNoCm, FineTag::kPunctClose})) == 2);
  CHECK(word_count(entry_with({FineTag::kDig, FineTag::kPunctOther})) == 0);
  CHECK(word_count(entry_with({FineTag::kNoCm, FineTag::kNoCm})) == 2);
}

TEST_CASE("profile arithmetic on a tiny corpus") {
  const TaggedCorpus corpus = corpus_of({
      {FineTag::kAjBa, FineTag::kNoCm},  // "red car"
      {FineTag::kNoCm},                  // "dog"
  });
  const CorpusProfile profile = profile_corpus(corpus);
  CHECK(profile.entries == 2);
  CHECK(profile.tokens == 3);
  CHECK(profile.words == 3);
  CHECK(profile.words_per_entry() == "1.50");
  CHECK(profile.tag_count(FineTag::kNoCm) == 2);
  CHECK(profile.avg_per_entry(profile.tag_count(FineTag::kNoCm)) == "1.00");
  CHECK(profile.pct_of_words(profile.tag_count(FineTag::kNoCm)) == "66.67%");
  CHECK(profile.tag_count(FineTag::kAjBa) == 1);
  CHECK(profile.avg_per_entry(profile.tag_count(FineTag::kAjBa)) == "0.50");
  CHECK(profile.pct_of_words(profile.tag_count(FineTag::kAjBa)) == "33.33%");
}

TEST_CASE("profile of an empty corpus throws") {
  CHECK_THROWS_AS(profile_corpus(TaggedCorpus{}), EmptyCorpus);
}

TEST_CASE("rounding is half away from zero at two decimals") {
  CHECK(stats::format_fixed(8443, 6882) == "1.23");
  CHECK(stats::format_fixed(15067, 6882) == "2.19");
  CHECK(stats::format_fixed(81, 8) == "10.13");  // exactly 10.125
  CHECK(stats::format_fixed(1, 8) == "0.13");    // exactly 0.125
  CHECK(stats::format_fixed(0, 5) == "0.00");
  CHECK(stats::format_fixed(5, 0) == "0.00");
  CHECK(stats::format_pct(8443, 15067) == "56.04%");
  CHECK(stats::format_pct(0, 0) == "0.00%");
  CHECK(stats::format_pct(3, 3) == "100.00%");
}

TEST_CASE("profile counts equal a naive per-token scan") {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> tag_pick(0, kFineTagCount - 1);
  std::uniform_int_distribution<int> len_pick(1, 8);
  std::uniform_int_distribution<int> entries_pick(1, 200);

  for (int round = 0; round < 50; ++round) {
    TaggedCorpus corpus;
    const int n = entries_pick(rng);
    for (int i = 0; i < n; ++i) {
      std::vector<FineTag> tags;
      for (int k = 0, len = len_pick(rng); k < len; ++k) {
        tags.push_back(static_cast<FineTag>(tag_pick(rng)));
      }
      corpus.entries.push_back(entry_with(tags));
    }

    // Independent oracle: flat scan over every token.
    std::array<std::int64_t, kFineTagCount> expected{};
    std::int64_t expected_tokens = 0;
    std::int64_t expected_words = 0;
    for (const auto& entry : corpus.entries) {
      for (const auto& token : entry.tokens) {
        ++expected[static_cast<int>(token.tag)];
        ++expected_tokens;
        const bool punct = token.tag == FineTag::kPunctOpen ||
                           token.tag == FineTag::kPunctClose ||
                           token.tag == FineTag::kPunctOther;
        if (!punct && token.tag != FineTag::kDig) ++expected_words;
      }
    }

    const CorpusProfile profile = profile_corpus(corpus);
    CHECK(profile.entries == n);
    CHECK(profile.tokens == expected_tokens);
    CHECK(profile.words == expected_words);
    CHECK(profile.tag_counts == expected);
  }
}

TEST_CASE("percentages are scale invariant, counts scale") {
  const TaggedCorpus base = corpus_of({
      {FineTag::kNoCm, FineTag::kAsPp, FineTag::kNoCm},
      {FineTag::kAjBa, FineTag::kNoCm},
      {FineTag::kDig},
  });
  TaggedCorpus tripled;
  for (int k = 0; k < 3; ++k) {
    for (const auto& entry : base.entries) tripled.entries.push_back(entry);
  }
  const CorpusProfile small = profile_corpus(base);
  const CorpusProfile big = profile_corpus(tripled);
  for (FineTag tag : all_fine_tags()) {
    CHECK(big.tag_count(tag) == 3 * small.tag_count(tag));
    CHECK(big.pct_of_words(big.tag_count(tag)) ==
          small.pct_of_words(small.tag_count(tag)));
    CHECK(big.avg_per_entry(big.tag_count(tag)) ==
          small.avg_per_entry(small.tag_count(tag)));
  }
  CHECK(big.words_per_entry() == small.words_per_entry());
}

TEST_CASE("profile depends only on tag sequences, never on text") {
  TaggedCorpus plain = corpus_of({{FineTag::kNoCm, FineTag::kAsPp},
                                  {FineTag::kAjBa}});
  TaggedCorpus renamed = plain;
  for (auto& entry : renamed.entries) {
    entry.entry.text = "completely different";
    for (auto& token : entry.tokens) token.surface = "zzz";
  }
  CHECK(profile_corpus(plain) == profile_corpus(renamed));
}

TEST_CASE("entity and relation sums aggregate their components") {
  CorpusProfile profile;
  profile.entries = 10;
  profile.words = 100;
  profile.tag_count(FineTag::kNoCm) = 40;
  profile.tag_count(FineTag::kNoPr) = 5;
  profile.tag_count(FineTag::kRgf) = 3;
  profile.tag_count(FineTag::kVb) = 7;
  profile.tag_count(FineTag::kCj) = 2;
  CHECK(profile.entity_sum() == 48);
  CHECK(profile.relation_sum() == 9);
}

TEST_CASE("reference discrepancy notes are available for reports") {
  const auto& notes = reference_discrepancy_notes();
  REQUIRE(notes.size() == 2);
  CHECK(notes[0].find("637") != std::string::npos);
  CHECK(notes[0].find("2277") != std::string::npos);
  CHECK(notes[1].find("2.44%") != std::string::npos);
}
