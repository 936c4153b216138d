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

#ifndef KOSANA_TYPES_H_
#define KOSANA_TYPES_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace kosana {

/// The kind of vocabulary a corpus was drawn from.
enum class Scheme {
  kThesaurus,
  kSubjectHeadings,
  kClassification,
  kOntologyClasses,
  kOntologyProperties,
  kGeneric,
};

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> parse_scheme(std::string_view name);

/// One candidate vocabulary entry as extracted from a source file, before
/// normalization. `locator` identifies the entry's origin within
/// `source_file`: a concept IRI, "tag$code@recordIndex/subfieldIndex" for
/// MARC, a notation for classification rows, or a line number.
struct RawEntry {
  std::string text;
  Scheme scheme = Scheme::kGeneric;
  std::string locator;
  std::string source_file;

  friend bool operator==(const RawEntry&, const RawEntry&) = default;
};

struct IngestConfig {
  std::string language_tag = "en";
  std::set<char> marc_include_subfields = {'a', 'x'};
  std::set<char> marc_exclude_subfields = {'z', 'y'};
  std::set<std::string> marc_include_tags = {"150"};
  std::string skos_label_predicate =
      "http://www.w3.org/2004/02/skos/core#prefLabel";
  std::string skos_concept_type = "http://www.w3.org/2004/02/skos/core#Concept";

  /// Throws Error if the include and exclude subfield sets overlap.
  void validate() const;
};

enum class ParseMode { kStrict, kLenient };

struct SkippedLine {
  std::size_t line = 0;
  std::string reason;
};

/// Collects the lines a lenient parse skipped.
struct ParseLog {
  std::vector<SkippedLine> skipped;
};

}  // namespace kosana

#endif  // KOSANA_TYPES_H_
