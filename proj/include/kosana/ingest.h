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

#ifndef KOSANA_INGEST_H_
#define KOSANA_INGEST_H_

#include <istream>
#include <string_view>
#include <vector>

#include "kosana/types.h"

namespace kosana {

inline constexpr std::string_view kRdfTypeIri =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

// Each parser reads one stream in a single pass and emits raw entries in
// first-appearance order. In strict mode any malformed unit throws; in
// lenient mode line- or row-level problems are recorded in `log` (when
// given) and the unit is skipped. Structural failures (broken XML, an
// unexpected header) throw in both modes.

/// N-Triples subset: one triple per line, `#` comments, blank lines. Emits
/// one entry per (concept, preferred-label) pair where the subject carries
/// an rdf:type triple for `config.skos_concept_type` and the label literal's
/// language tag equals `config.language_tag`. Entries follow label order in
/// the stream; repeated identical triples collapse. Blank-node subjects are
/// ignored. Scheme: thesaurus; locator: the concept IRI.
std::vector<RawEntry> parse_skos_ntriples(std::istream& in,
                                          std::string_view source_name,
                                          const IngestConfig& config,
                                          ParseMode mode = ParseMode::kStrict,
                                          ParseLog* log = nullptr);

/// MARCXML (elements collection/record/datafield/subfield, attributes
/// tag/code; namespace prefixes are accepted and ignored). For each record,
/// each subfield of an included datafield tag whose code is in
/// `marc_include_subfields` yields one entry; excluded or unlisted codes and
/// unlisted tags are skipped silently. Scheme: subject-headings; locator:
/// "tag$code@recordIndex/subfieldIndex" with a 0-based record index and the
/// 0-based position of the subfield among all subfields of its record.
std::vector<RawEntry> parse_marc_authorities(std::istream& in,
                                             std::string_view source_name,
                                             const IngestConfig& config,
                                             ParseMode mode = ParseMode::kStrict,
                                             ParseLog* log = nullptr);

/// CSV with header `notation,caption` (RFC 4180 quoting). One entry per
/// row. Scheme: classification; locator: the notation.
std::vector<RawEntry> parse_ddc_captions(std::istream& in,
                                         std::string_view source_name,
                                         ParseMode mode = ParseMode::kStrict,
                                         ParseLog* log = nullptr);

/// TSV with header `kind<TAB>label`, kind one of class|property|generic.
/// Scheme: ontology-classes, ontology-properties, or generic respectively;
/// locator: the 1-based file line number.
std::vector<RawEntry> parse_label_table(std::istream& in,
                                        std::string_view source_name,
                                        ParseMode mode = ParseMode::kStrict,
                                        ParseLog* log = nullptr);

}  // namespace kosana

#endif  // KOSANA_INGEST_H_
