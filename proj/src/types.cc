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

#include "kosana/types.h"

#include "kosana/errors.h"

namespace kosana {

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::kThesaurus:
      return "thesaurus";
    case Scheme::kSubjectHeadings:
      return "subject-headings";
    case Scheme::kClassification:
      return "classification";
    case Scheme::kOntologyClasses:
      return "ontology-classes";
    case Scheme::kOntologyProperties:
      return "ontology-properties";
    case Scheme::kGeneric:
      return "generic";
  }
  return "generic";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  if (name == "thesaurus") return Scheme::kThesaurus;
  if (name == "subject-headings") return Scheme::kSubjectHeadings;
  if (name == "classification") return Scheme::kClassification;
  if (name == "ontology-classes") return Scheme::kOntologyClasses;
  if (name == "ontology-properties") return Scheme::kOntologyProperties;
  if (name == "generic") return Scheme::kGeneric;
  return std::nullopt;
}

void IngestConfig::validate() const {
  for (char c : marc_include_subfields) {
    if (marc_exclude_subfields.count(c) != 0) {
      throw Error(std::string("subfield code '") + c +
                  "' is both included and excluded");
    }
  }
}

}  // namespace kosana
