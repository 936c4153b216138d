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

#include <sstream>

#include "kosana/errors.h"
#include "kosana/ingest.h"

using namespace kosana;

namespace {

constexpr const char* kSkosPrefLabel =
    "http://www.w3.org/2004/02/skos/core#prefLabel";
constexpr const char* kSkosConcept =
    "http://www.w3.org/2004/02/skos/core#Concept";
constexpr const char* kRdfType =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";

std::vector<RawEntry> skos(const std::string& text,
                           const IngestConfig& config = {},
                           ParseMode mode = ParseMode::kStrict,
                           ParseLog* log = nullptr) {
  std::istringstream in(text);
  return parse_skos_ntriples(in, "test.nt", config, mode, log);
}

std::vector<RawEntry> marc(const std::string& text,
                           const IngestConfig& config = {}) {
  std::istringstream in(text);
  return parse_marc_authorities(in, "test.xml", config);
}

std::vector<RawEntry> ddc(const std::string& text,
                          ParseMode mode = ParseMode::kStrict,
                          ParseLog* log = nullptr) {
  std::istringstream in(text);
  return parse_ddc_captions(in, "test.csv", mode, log);
}

std::vector<RawEntry> labels(const std::string& text,
                             ParseMode mode = ParseMode::kStrict,
                             ParseLog* log = nullptr) {
  std::istringstream in(text);
  return parse_label_table(in, "test.tsv", mode, log);
}

}  // namespace

TEST_CASE("skos: empty input yields no entries") {
  CHECK(skos("").empty());
  CHECK(skos("# only a comment\n\n").empty());
}

TEST_CASE("skos: typed concept with matching language label") {
  IngestConfig config;
  config.language_tag = "en";
  const std::string input =
      std::string("<http://ex/c1> <") + kRdfType + "> <" + kSkosConcept +
      "> .\n" + "<http://ex/c1> <" + kSkosPrefLabel + "> \"Bird\"@en .\n";
  const auto entries = skos(input, config);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Bird");
  CHECK(entries[0].locator == "http://ex/c1");
  CHECK(entries[0].scheme == Scheme::kThesaurus);
  CHECK(entries[0].source_file == "test.nt");
}

TEST_CASE("skos: only preferred labels are emitted") {
  IngestConfig config;
  config.language_tag = "en";
  const std::string input =
      std::string("<http://ex/c1> <") + kRdfType + "> <" + kSkosConcept +
      "> .\n" + "<http://ex/c1> <" + kSkosPrefLabel + "> \"Bird\"@en .\n" +
      "<http://ex/c1> <http://www.w3.org/2004/02/skos/core#altLabel> "
      "\"Birds\"@en .\n" +
      "<http://ex/c1> <http://www.w3.org/2004/02/skos/core#note> "
      "\"a note\"@en .\n";
  const auto entries = skos(input, config);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Bird");
}

TEST_CASE("skos: language filter is exact") {
  IngestConfig config;
  config.language_tag = "el";
  const std::string input =
      std::string("<http://ex/c1> <") + kRdfType + "> <" + kSkosConcept +
      "> .\n" + "<http://ex/c1> <" + kSkosPrefLabel +
      "> \"Bird\"@en .\n" + "<http://ex/c1> <" + kSkosPrefLabel +
      "> \"\\u03a0\\u03bf\\u03c5\\u03bb\\u03af\"@el .\n";
  const auto entries = skos(input, config);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Πουλί");
}

TEST_CASE("skos: label order follows the stream; type may come later") {
  IngestConfig config;
  config.language_tag = "en";
  const std::string input =
      std::string("<http://ex/c2> <") + kSkosPrefLabel + "> \"Two\"@en .\n" +
      "<http://ex/c1> <" + kSkosPrefLabel + "> \"One\"@en .\n" +
      "<http://ex/c1> <" + kRdfType + "> <" + kSkosConcept + "> .\n" +
      "<http://ex/c2> <" + kRdfType + "> <" + kSkosConcept + "> .\n";
  const auto entries = skos(input, config);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].text == "Two");
  CHECK(entries[1].text == "One");
}

TEST_CASE("skos: untyped subjects and blank nodes are ignored") {
  IngestConfig config;
  config.language_tag = "en";
  const std::string input =
      std::string("<http://ex/c1> <") + kSkosPrefLabel + "> \"Bird\"@en .\n" +
      "_:b1 <" + kRdfType + "> <" + kSkosConcept + "> .\n" +
      "_:b1 <" + kSkosPrefLabel + "> \"Hidden\"@en .\n";
  CHECK(skos(input, config).empty());
}

TEST_CASE("skos: repeated identical triples collapse") {
  IngestConfig config;
  config.language_tag = "en";
  const std::string line = std::string("<http://ex/c1> <") + kSkosPrefLabel +
                           "> \"Bird\"@en .\n";
  const std::string type = std::string("<http://ex/c1> <") + kRdfType +
                           "> <" + kSkosConcept + "> .\n";
  CHECK(skos(type + line + line, config).size() == 1);
}

TEST_CASE("skos: malformed line aborts in strict mode, skips in lenient") {
  IngestConfig config;
  const std::string bad = "<http://ex/c1> nonsense .\n";
  CHECK_THROWS_AS(skos(bad, config), MalformedTriple);

  ParseLog log;
  CHECK(skos(bad, config, ParseMode::kLenient, &log).empty());
  REQUIRE(log.skipped.size() == 1);
  CHECK(log.skipped[0].line == 1);
}

TEST_CASE("skos: datatyped and untagged literals") {
  IngestConfig config;
  config.language_tag = "en";
  const std::string typed = std::string("<http://ex/c1> <") + kRdfType +
                            "> <" + kSkosConcept + "> .\n";
  // A datatyped literal carries no language tag, so it never matches "en".
  CHECK(skos(typed + "<http://ex/c1> <" + kSkosPrefLabel +
                 "> \"123\"^^<http://www.w3.org/2001/XMLSchema#int> .\n",
             config)
            .empty());
  CHECK(skos(typed + "<http://ex/c1> <" + kSkosPrefLabel + "> \"Bird\" .\n",
             config)
            .empty());
  // With an empty language filter, only untagged literals match.
  config.language_tag = "";
  const auto entries = skos(
      typed + "<http://ex/c1> <" + kSkosPrefLabel + "> \"Bird\" .\n" +
          "<http://ex/c1> <" + kSkosPrefLabel + "> \"Oiseau\"@fr .\n",
      config);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Bird");
}

TEST_CASE("skos: literal escapes decode") {
  IngestConfig config;
  config.language_tag = "en";
  const std::string input =
      std::string("<http://ex/c1> <") + kRdfType + "> <" + kSkosConcept +
      "> .\n" + "<http://ex/c1> <" + kSkosPrefLabel +
      "> \"Say \\\"hi\\\"\\t\\u0041\"@en .\n";
  const auto entries = skos(input, config);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Say \"hi\"\tA");
}

namespace {

const char* kMarcTwoSubfields = R"(<?xml version="1.0" encoding="UTF-8"?>
<collection xmlns="http://www.loc.gov/MARC21/slim">
  <record>
    <datafield tag="150" ind1=" " ind2=" ">
      <subfield code="a">Religion</subfield>
      <subfield code="x">Philosophy</subfield>
    </datafield>
  </record>
</collection>
)";

const char* kMarcGeographic = R"(<collection>
  <record>
    <datafield tag="150">
      <subfield code="a">Birds</subfield>
      <subfield code="z">Africa</subfield>
    </datafield>
  </record>
</collection>
)";

}  // namespace

TEST_CASE("marc: each included subfield is one entry") {
  const auto entries = marc(kMarcTwoSubfields);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].text == "Religion");
  CHECK(entries[0].locator == "150$a@0/0");
  CHECK(entries[1].text == "Philosophy");
  CHECK(entries[1].locator == "150$x@0/1");
  CHECK(entries[0].scheme == Scheme::kSubjectHeadings);
}

TEST_CASE("marc: excluded and unlisted subfield codes yield nothing") {
  const auto entries = marc(kMarcGeographic);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Birds");
}

TEST_CASE("marc: records without included tags yield zero entries") {
  const auto entries = marc(R"(<collection>
  <record>
    <datafield tag="550"><subfield code="a">Other</subfield></datafield>
  </record>
</collection>
)");
  CHECK(entries.empty());
}

TEST_CASE("marc: record index and subfield position make locators unique") {
  const auto entries = marc(R"(<collection>
  <record>
    <datafield tag="150"><subfield code="a">A</subfield></datafield>
    <datafield tag="150"><subfield code="a">B</subfield></datafield>
  </record>
  <record>
    <datafield tag="150"><subfield code="a">C</subfield></datafield>
  </record>
</collection>
)");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].locator == "150$a@0/0");
  CHECK(entries[1].locator == "150$a@0/1");
  CHECK(entries[2].locator == "150$a@1/0");
}

TEST_CASE("marc: namespace prefixes and entities are handled") {
  const auto entries = marc(R"(<marc:collection xmlns:marc="http://x">
  <marc:record>
    <marc:datafield tag="150">
      <marc:subfield code="a">Birds &amp; bees</marc:subfield>
    </marc:datafield>
  </marc:record>
</marc:collection>
)");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Birds & bees");
}

TEST_CASE("marc: configurable tags") {
  IngestConfig config;
  config.marc_include_tags = {"150", "151"};
  const auto entries = marc(R"(<collection>
  <record>
    <datafield tag="151"><subfield code="a">Athens</subfield></datafield>
  </record>
</collection>
)",
                            config);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Athens");
}

TEST_CASE("marc: broken xml throws MalformedXml") {
  CHECK_THROWS_AS(marc("<collection><record>"), MalformedXml);
}

TEST_CASE("marc: overlapping include/exclude sets are rejected") {
  IngestConfig config;
  config.marc_include_subfields = {'a', 'z'};
  CHECK_THROWS_AS(marc(kMarcGeographic, config), Error);
}

TEST_CASE("ddc: rows map to caption entries") {
  const auto entries =
      ddc("notation,caption\n"
          "\"025.39\",\"Recataloging, reclassification, re-indexing\"\n"
          "\"943.08\",\"1866-\"\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].text == "Recataloging, reclassification, re-indexing");
  CHECK(entries[0].locator == "025.39");
  CHECK(entries[0].scheme == Scheme::kClassification);
  CHECK(entries[1].text == "1866-");
  CHECK(entries[1].locator == "943.08");
}

TEST_CASE("ddc: header-only file is empty") {
  CHECK(ddc("notation,caption\n").empty());
}

TEST_CASE("ddc: quoting follows rfc 4180") {
  const auto entries =
      ddc("notation,caption\n"
          "100,\"say \"\"hi\"\"\"\n"
          "200,plain\n");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].text == "say \"hi\"");
  CHECK(entries[1].text == "plain");
}

TEST_CASE("ddc: quoted fields may contain newlines") {
  const auto entries =
      ddc("notation,caption\n"
          "100,\"line one\nline two\"\n");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "line one\nline two");
}

TEST_CASE("marc: a bare record without a collection element") {
  const auto entries = marc(
      R"(<record><datafield tag="150"><subfield code="a">Solo</subfield></datafield></record>)");
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Solo");
}

TEST_CASE("ddc: bad header and bad rows") {
  CHECK_THROWS_AS(ddc("wrong,header\n"), MalformedCsv);
  CHECK_THROWS_AS(ddc("notation,caption\nonlyone\n"), MalformedCsv);
  CHECK_THROWS_AS(ddc("notation,caption\n100,\n"), EmptyCaption);

  ParseLog log;
  const auto entries = ddc("notation,caption\n100,\n200,ok\n",
                           ParseMode::kLenient, &log);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "ok");
  REQUIRE(log.skipped.size() == 1);
  CHECK(log.skipped[0].line == 2);
}

TEST_CASE("labels: kinds route to schemes") {
  const auto entries =
      labels("kind\tlabel\n"
             "class\tPerson\n"
             "property\thas produced\n"
             "generic\tthing\n");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].scheme == Scheme::kOntologyClasses);
  CHECK(entries[0].text == "Person");
  CHECK(entries[0].locator == "2");
  CHECK(entries[1].scheme == Scheme::kOntologyProperties);
  CHECK(entries[1].text == "has produced");
  CHECK(entries[2].scheme == Scheme::kGeneric);
}

TEST_CASE("labels: order is preserved within each kind") {
  const auto entries =
      labels("kind\tlabel\n"
             "class\tA\nproperty\tp1\nclass\tB\nproperty\tp2\n");
  std::vector<std::string> classes, properties;
  for (const auto& entry : entries) {
    if (entry.scheme == Scheme::kOntologyClasses) classes.push_back(entry.text);
    if (entry.scheme == Scheme::kOntologyProperties) {
      properties.push_back(entry.text);
    }
  }
  CHECK(classes == std::vector<std::string>{"A", "B"});
  CHECK(properties == std::vector<std::string>{"p1", "p2"});
}

TEST_CASE("labels: unknown kind and malformed rows") {
  CHECK_THROWS_AS(labels("kind\tlabel\nbogus\tx\n"), UnknownKind);
  CHECK_THROWS_AS(labels("kind\tlabel\nclass\n"), MalformedRow);
  CHECK_THROWS_AS(labels("kind\tlabel\nclass\t\n"), MalformedRow);
  CHECK_THROWS_AS(labels("bad header\n"), MalformedRow);

  ParseLog log;
  const auto entries = labels("kind\tlabel\nbogus\tx\nclass\tY\n",
                              ParseMode::kLenient, &log);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].text == "Y");
  CHECK(log.skipped.size() == 1);
}

TEST_CASE("ingest is deterministic") {
  const std::string input =
      "kind\tlabel\nclass\tA\nproperty\tB\ngeneric\tC\n";
  const auto first = labels(input);
  const auto second = labels(input);
  CHECK(first == second);
}
