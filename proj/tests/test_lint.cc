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
#include <sstream>

#include "kosana/errors.h"
#include "kosana/lint.h"
#include "kosana/tagger.h"

using namespace kosana;

namespace {

Lexicon test_lexicon() {
  Lexicon lexicon;
  lexicon.add("against", FineTag::kAsPp);
  lexicon.add("of", FineTag::kAsPp);
  lexicon.add("and", FineTag::kCj);
  lexicon.add("thermal", FineTag::kAjBa);
  lexicon.add("Byzantine", FineTag::kAjBa);
  return lexicon;
}

TaggedEntry tagged(const std::string& text) {
  return tag_entry(Entry{text, {}}, test_lexicon());
}

TaggedCorpus corpus_of(const std::vector<std::string>& texts,
                       Scheme scheme = Scheme::kGeneric) {
  TaggedCorpus corpus;
  corpus.scheme = scheme;
  for (const auto& text : texts) corpus.entries.push_back(tagged(text));
  return corpus;
}

bool has_rule(const std::vector<Finding>& findings, std::string_view rule) {
  for (const auto& finding : findings) {
    if (finding.rule_id == rule) return true;
  }
  return false;
}

TaggedEntry entry_with(const std::vector<FineTag>& tags) {
  TaggedEntry entry;
  std::size_t pos = 0;
  for (FineTag tag : tags) {
    entry.tokens.push_back({tag == FineTag::kPunctOther ? "," : "x", tag, pos,
                            pos + 1});
    pos += 2;
  }
  return entry;
}

}  // namespace

TEST_CASE("composite: adpositions join concepts") {
  const ConceptClass result =
      classify_concept(tagged("Crimes against peace"), {});
  CHECK(result.kind == ConceptKind::kComplexComposite);
  REQUIRE(result.evidence.size() == 1);
  CHECK(result.evidence[0] == Span{7, 14});  // "against"
}

TEST_CASE("enumeration: commas and conjunction") {
  const ConceptClass result = classify_concept(
      tagged("Volcanoes, earthquakes, thermal waters and gases"), {});
  CHECK(result.kind == ConceptKind::kComplexEnumeration);
  CHECK(result.evidence.size() >= 1);
}

TEST_CASE("atomic: compound of two nouns") {
  const ConceptClass result = classify_concept(tagged("copper mines"), {});
  CHECK(result.kind == ConceptKind::kAtomic);
  CHECK(result.evidence.empty());
}

TEST_CASE("whitelist forces atomic") {
  ClassifierConfig config;
  config.compound_whitelist.insert("Hours of labor");
  CHECK(classify_concept(tagged("Hours of labor"), config).kind ==
        ConceptKind::kAtomic);
  CHECK(classify_concept(tagged("Hours of labor"), {}).kind ==
        ConceptKind::kComplexComposite);
  // Case sensitive: a different casing is not whitelisted.
  CHECK(classify_concept(tagged("hours of labor"), config).kind ==
        ConceptKind::kComplexComposite);
}

TEST_CASE("parenthetical qualifier is composite by default") {
  const TaggedEntry entry = tagged("Cooking (Apricots)");
  CHECK(classify_concept(entry, {}).kind == ConceptKind::kComplexComposite);

  ClassifierConfig no_qualifier;
  no_qualifier.qualifier_as_composite = false;
  CHECK(classify_concept(entry, no_qualifier).kind == ConceptKind::kAtomic);
}

TEST_CASE("empty parentheses are not a qualifier") {
  const TaggedEntry entry = tagged("Cooking ()");
  CHECK(classify_concept(entry, {}).kind == ConceptKind::kAtomic);
}

TEST_CASE("open-class markers signal enumeration") {
  ClassifierConfig config;
  CHECK(classify_concept(tagged("other sciences"), config).kind ==
        ConceptKind::kComplexEnumeration);
  config.open_class_markers.clear();
  CHECK(classify_concept(tagged("other sciences"), config).kind ==
        ConceptKind::kAtomic);
}

TEST_CASE("composite outranks enumeration") {
  // Both an adposition and a conjunction: the relation token wins.
  const ConceptClass result =
      classify_concept(tagged("Crimes against war and peace"), {});
  CHECK(result.kind == ConceptKind::kComplexComposite);
}

TEST_CASE("comma needs entities on both sides") {
  // Digits on one side only: no enumeration signal from the comma.
  const TaggedEntry entry = entry_with(
      {FineTag::kDig, FineTag::kPunctOther, FineTag::kDig});
  CHECK(classify_concept(entry, {}).kind == ConceptKind::kAtomic);
}

TEST_CASE("distribution of the three exemplars") {
  const TaggedCorpus corpus = corpus_of({
      "Crimes against peace",
      "Volcanoes, earthquakes, thermal waters and gases",
      "copper mines",
  });
  const ConceptDistribution dist = distribution(corpus, {});
  CHECK(dist.atomic == 1);
  CHECK(dist.enumeration == 1);
  CHECK(dist.composite == 1);
  CHECK(dist.atomic_pct() == "33.33%");
  CHECK(dist.enumeration_pct() == "33.33%");
  CHECK(dist.composite_pct() == "33.33%");
}

TEST_CASE("all-atomic distribution") {
  const ConceptDistribution dist =
      distribution(corpus_of({"dog", "copper mines"}), {});
  CHECK(dist.atomic_pct() == "100.00%");
  CHECK(dist.enumeration_pct() == "0.00%");
  CHECK(dist.composite_pct() == "0.00%");
}

TEST_CASE("distribution of empty corpus throws") {
  CHECK_THROWS_AS(distribution(TaggedCorpus{}, {}), EmptyCorpus);
}

TEST_CASE("lint: ambiguous conjunction fires on Sex and law") {
  const auto findings = lint_corpus(corpus_of({"Sex and law"}), {});
  CHECK(has_rule(findings, kRuleAmbiguousConjunction));
  for (const auto& finding : findings) {
    if (finding.rule_id == kRuleAmbiguousConjunction) {
      CHECK(finding.severity == Severity::kWarning);
      REQUIRE(finding.evidence.size() == 1);
      CHECK(finding.evidence[0].surface == "and");
    }
  }
}

TEST_CASE("lint: parenthetical qualifier fires on Cooking (Apricots)") {
  const auto findings = lint_corpus(corpus_of({"Cooking (Apricots)"}), {});
  CHECK(has_rule(findings, kRuleParentheticalQualifier));
  CHECK(has_rule(findings, kRuleCompositeConcept));
  for (const auto& finding : findings) {
    if (finding.rule_id == kRuleParentheticalQualifier) {
      CHECK(finding.severity == Severity::kInfo);
      REQUIRE(finding.evidence.size() == 1);
      CHECK(finding.evidence[0].surface == "(Apricots)");
    }
  }
}

TEST_CASE("lint: single atomic noun is clean") {
  CHECK(lint_corpus(corpus_of({"dog"}), {}).empty());
}

TEST_CASE("lint: inverted heading (noun, comma, adjective)") {
  const auto findings = lint_corpus(corpus_of({"Art, Byzantine"}), {});
  CHECK(has_rule(findings, kRuleInvertedHeading));
}

TEST_CASE("lint: instance mixing only in concept schemes") {
  const auto thesaurus =
      lint_corpus(corpus_of({"ancient Athens"}, Scheme::kThesaurus), {});
  CHECK(has_rule(thesaurus, kRuleInstanceClassMixing));

  const auto generic =
      lint_corpus(corpus_of({"ancient Athens"}, Scheme::kGeneric), {});
  CHECK(!has_rule(generic, kRuleInstanceClassMixing));
}

TEST_CASE("lint: chronology digits") {
  const auto findings = lint_corpus(corpus_of({"1866-"}), {});
  CHECK(has_rule(findings, kRuleChronologyDigits));
  CHECK(!has_rule(findings, kRuleCompositeConcept));
}

TEST_CASE("lint: whitelist suppresses composite/enumeration findings") {
  ClassifierConfig config;
  config.compound_whitelist.insert("Hours of labor");
  const auto findings = lint_corpus(corpus_of({"Hours of labor"}), config);
  CHECK(!has_rule(findings, kRuleCompositeConcept));
  CHECK(!has_rule(findings, kRuleEnumeration));
}

TEST_CASE("lint: findings are ordered by entry then rule") {
  const TaggedCorpus corpus =
      corpus_of({"Cooking (Apricots)", "Sex and law"}, Scheme::kThesaurus);
  const auto findings = lint_corpus(corpus, {});
  REQUIRE(findings.size() >= 3);
  // Entry 0 findings come first, each entry's findings in rule order.
  std::size_t previous_entry = 0;
  int previous_rule = -1;
  for (const auto& finding : findings) {
    const std::size_t entry = finding.entry_locator == "#0" ? 0 : 1;
    if (entry != previous_entry) {
      CHECK(entry > previous_entry);
      previous_entry = entry;
      previous_rule = -1;
    }
    int rule_ordinal = 0;
    for (std::string_view id :
         {kRuleCompositeConcept, kRuleEnumeration, kRuleAmbiguousConjunction,
          kRuleInvertedHeading, kRuleParentheticalQualifier,
          kRuleInstanceClassMixing, kRuleChronologyDigits}) {
      if (finding.rule_id == id) break;
      ++rule_ordinal;
    }
    CHECK(rule_ordinal > previous_rule);
    previous_rule = rule_ordinal;
  }
}

TEST_CASE("rules file: severity and enablement overrides") {
  std::istringstream in(R"({
    "AMBIGUOUS_CONJUNCTION": {"severity": "error"},
    "CHRONOLOGY_DIGITS": {"enabled": false}
  })");
  const RuleSet rules = RuleSet::load(in);
  CHECK(rules.severity(kRuleAmbiguousConjunction) == Severity::kError);
  CHECK(!rules.enabled(kRuleChronologyDigits));
  CHECK(rules.enabled(kRuleCompositeConcept));

  const auto findings =
      lint_corpus(corpus_of({"Sex and law", "1866-"}), {}, rules);
  CHECK(!has_rule(findings, kRuleChronologyDigits));
  for (const auto& finding : findings) {
    if (finding.rule_id == kRuleAmbiguousConjunction) {
      CHECK(finding.severity == Severity::kError);
    }
  }
}

TEST_CASE("rules file: unknown rule id is rejected") {
  std::istringstream in(R"({"NO_SUCH_RULE": {"enabled": true}})");
  CHECK_THROWS_AS(RuleSet::load(in), UnknownRule);
}

TEST_CASE("R3 requires a conjunction, R7 fires iff digits exist") {
  std::mt19937 rng(1312);
  std::uniform_int_distribution<int> tag_pick(0, kFineTagCount - 1);
  std::uniform_int_distribution<int> len_pick(1, 8);

  TaggedCorpus corpus;
  for (int i = 0; i < 400; ++i) {
    std::vector<FineTag> tags;
    for (int k = 0, len = len_pick(rng); k < len; ++k) {
      tags.push_back(static_cast<FineTag>(tag_pick(rng)));
    }
    corpus.entries.push_back(entry_with(tags));
  }

  const auto findings = lint_corpus(corpus, {});
  std::vector<bool> has_r3(corpus.entries.size()),
      has_r7(corpus.entries.size());
  for (const auto& finding : findings) {
    const std::size_t index = std::stoul(finding.entry_locator.substr(1));
    if (finding.rule_id == kRuleAmbiguousConjunction) has_r3[index] = true;
    if (finding.rule_id == kRuleChronologyDigits) has_r7[index] = true;
  }
  for (std::size_t i = 0; i < corpus.entries.size(); ++i) {
    bool any_cj = false;
    bool any_dig = false;
    for (const auto& token : corpus.entries[i].tokens) {
      any_cj = any_cj || token.tag == FineTag::kCj;
      any_dig = any_dig || token.tag == FineTag::kDig;
    }
    if (!any_cj) CHECK(!has_r3[i]);
    CHECK(has_r7[i] == any_dig);
  }
}

TEST_CASE("evidence spans lie inside the entry") {
  const TaggedCorpus corpus = corpus_of(
      {"Cooking (Apricots)", "Sex and law", "Art, Byzantine", "1866-"});
  for (const auto& finding : lint_corpus(corpus, {})) {
    for (const auto& item : finding.evidence) {
      CHECK(item.span.begin < item.span.end);
    }
  }
}
