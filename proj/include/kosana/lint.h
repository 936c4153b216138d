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

#ifndef KOSANA_LINT_H_
#define KOSANA_LINT_H_

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "kosana/tags.h"

namespace kosana {

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

enum class ConceptKind { kAtomic, kComplexEnumeration, kComplexComposite };

std::string_view concept_kind_name(ConceptKind kind);

/// Classification result. Atomic carries no evidence; the complex kinds
/// carry the token spans that triggered the decision.
struct ConceptClass {
  ConceptKind kind = ConceptKind::kAtomic;
  std::vector<Span> evidence;
};

struct ClassifierConfig {
  /// Exact entry texts forced Atomic (case sensitive). Catches compounds
  /// whose parts split morphologically but mean one concept.
  std::set<std::string> compound_whitelist;
  /// Words that signal an open class and hence an enumeration. Matched
  /// exactly against token surfaces.
  std::set<std::string> open_class_markers = {"other", "etc"};
  /// Treat a parenthetical qualifier as a composite signal.
  bool qualifier_as_composite = true;
};

/// Decision procedure, in order: whitelist hit -> Atomic; any relation-role
/// token (AsPp, Vb, PnPo, PtNg, AjCp, AjSp) -> ComplexComposite; a
/// parenthetical qualifier enclosing an entity token (when configured) ->
/// ComplexComposite; any conjunction, entity-separating comma, or open-class
/// marker -> ComplexEnumeration; otherwise Atomic.
ConceptClass classify_concept(const TaggedEntry& entry,
                              const ClassifierConfig& config);

struct ConceptDistribution {
  std::int64_t atomic = 0;
  std::int64_t enumeration = 0;
  std::int64_t composite = 0;

  std::int64_t total() const { return atomic + enumeration + composite; }
  std::string atomic_pct() const;
  std::string enumeration_pct() const;
  std::string composite_pct() const;
};

/// Per-corpus share of atomic/enumeration/composite entries. Throws
/// EmptyCorpus.
ConceptDistribution distribution(const TaggedCorpus& corpus,
                                 const ClassifierConfig& config);

// ---------------------------------------------------------------------------
// Lint rules
// ---------------------------------------------------------------------------

enum class Severity { kInfo, kWarning, kError };

std::string_view severity_name(Severity severity);
std::optional<Severity> parse_severity(std::string_view name);

inline constexpr std::string_view kRuleCompositeConcept = "COMPOSITE_CONCEPT";
inline constexpr std::string_view kRuleEnumeration = "ENUMERATION";
inline constexpr std::string_view kRuleAmbiguousConjunction =
    "AMBIGUOUS_CONJUNCTION";
inline constexpr std::string_view kRuleInvertedHeading = "INVERTED_HEADING";
inline constexpr std::string_view kRuleParentheticalQualifier =
    "PARENTHETICAL_QUALIFIER";
inline constexpr std::string_view kRuleInstanceClassMixing =
    "INSTANCE_CLASS_MIXING";
inline constexpr std::string_view kRuleChronologyDigits = "CHRONOLOGY_DIGITS";

inline constexpr int kRuleCount = 7;

/// Enablement and severity per registered rule. Unregistered ids are
/// rejected with UnknownRule.
class RuleSet {
 public:
  /// All rules enabled at their default severities (composite,
  /// enumeration, and ambiguous-conjunction warn; the rest inform).
  RuleSet();

  /// JSON map rule_id -> {"enabled": bool, "severity": "info|warning|error"}.
  /// Missing keys keep their defaults.
  static RuleSet load(std::istream& in);

  bool enabled(std::string_view rule_id) const;
  Severity severity(std::string_view rule_id) const;
  void set_enabled(std::string_view rule_id, bool enabled);
  void set_severity(std::string_view rule_id, Severity severity);

 private:
  static int index_of(std::string_view rule_id);
  std::array<bool, kRuleCount> enabled_;
  std::array<Severity, kRuleCount> severity_;
};

struct FindingEvidence {
  Span span;
  std::string surface;

  friend bool operator==(const FindingEvidence&,
                         const FindingEvidence&) = default;
};

struct Finding {
  std::string rule_id;
  Severity severity = Severity::kInfo;
  std::string entry_locator;
  std::string message;
  std::vector<FindingEvidence> evidence;
};

/// Deterministic rule sweep: at most one finding per rule per entry,
/// ordered by (entry order, rule registration order).
std::vector<Finding> lint_corpus(const TaggedCorpus& corpus,
                                 const ClassifierConfig& config,
                                 const RuleSet& rules = RuleSet());

/// Published complex-concept shares quoted when a comparison spans a
/// subject-headings corpus and a thesaurus.
std::string_view distribution_reference_note();

}  // namespace kosana

#endif  // KOSANA_LINT_H_
