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

#include "kosana/ingest.h"

#include <optional>
#include <string>
#include <unordered_set>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "kosana/errors.h"
#include "kosana/utf8.h"

namespace kosana {

namespace {

void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

void strip_bom(std::istream& in) {
  if (in.peek() != 0xEF) return;
  const auto pos = in.tellg();
  char b[3] = {};
  in.read(b, 3);
  if (in.gcount() == 3 && static_cast<unsigned char>(b[1]) == 0xBB &&
      static_cast<unsigned char>(b[2]) == 0xBF) {
    return;
  }
  in.clear();
  in.seekg(pos);
}

bool report_or_throw(ParseMode mode, ParseLog* log, std::size_t line,
                     const Error& error) {
  if (mode == ParseMode::kStrict) return false;
  if (log != nullptr) log->skipped.push_back({line, error.what()});
  return true;
}

// ---------------------------------------------------------------------------
// N-Triples subset
// ---------------------------------------------------------------------------

struct Triple {
  std::string subject;  // empty for blank-node subjects
  std::string predicate;
  bool object_is_literal = false;
  std::string object;
  std::string lang;  // language tag of a literal object, "" if none
};

class TripleScanner {
 public:
  TripleScanner(std::string_view line, std::size_t line_no)
      : line_(line), line_no_(line_no) {}

  /// Empty result for blank and comment lines; throws MalformedTriple.
  std::optional<Triple> scan() {
    skip_ws();
    if (at_end() || peek() == '#') return std::nullopt;

    Triple t;
    if (peek() == '<') {
      t.subject = read_iri();
    } else if (starts_blank_node()) {
      read_blank_node();  // subject stays empty, the triple is kept as a
                          // placeholder so the line still validates
    } else {
      fail("expected IRI or blank node subject");
    }
    require_ws();
    if (peek() != '<') fail("expected predicate IRI");
    t.predicate = read_iri();
    require_ws();
    if (peek() == '<') {
      t.object = read_iri();
    } else if (peek() == '"') {
      t.object_is_literal = true;
      t.object = read_literal();
      if (!at_end() && peek() == '@') {
        ++pos_;
        t.lang = read_lang_tag();
      } else if (!at_end() && peek() == '^') {
        expect('^');
        expect('^');
        if (peek() != '<') fail("expected datatype IRI");
        read_iri();
      }
    } else if (starts_blank_node()) {
      read_blank_node();
      t.object_is_literal = false;
    } else {
      fail("expected IRI, literal, or blank node object");
    }
    skip_ws();
    expect('.');
    skip_ws();
    if (!at_end() && peek() != '#') fail("trailing characters after '.'");
    return t;
  }

 private:
  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return at_end() ? '\0' : line_[pos_]; }

  void skip_ws() {
    while (!at_end() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }

  void require_ws() {
    if (at_end() || (line_[pos_] != ' ' && line_[pos_] != '\t')) {
      fail("expected whitespace");
    }
    skip_ws();
  }

  void expect(char c) {
    if (at_end() || line_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  bool starts_blank_node() const {
    return pos_ + 1 < line_.size() && line_[pos_] == '_' &&
           line_[pos_ + 1] == ':';
  }

  void read_blank_node() {
    pos_ += 2;
    std::size_t start = pos_;
    while (!at_end() && line_[pos_] != ' ' && line_[pos_] != '\t') ++pos_;
    if (pos_ == start) fail("empty blank node label");
  }

  // IRIs are read verbatim up to the closing angle bracket.
  std::string read_iri() {
    expect('<');
    std::size_t start = pos_;
    while (!at_end() && line_[pos_] != '>') ++pos_;
    if (at_end()) fail("unterminated IRI");
    std::string iri(line_.substr(start, pos_ - start));
    ++pos_;
    if (iri.empty()) fail("empty IRI");
    return iri;
  }

  std::string read_literal() {
    expect('"');
    std::string out;
    while (true) {
      if (at_end()) fail("unterminated literal");
      char c = line_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        out.push_back(c);
        continue;
      }
      if (at_end()) fail("dangling escape");
      char esc = line_[pos_++];
      switch (esc) {
        case 't': out.push_back('\t'); break;
        case 'b': out.push_back('\b'); break;
        case 'n': out.push_back('\n'); break;
        case 'r': out.push_back('\r'); break;
        case 'f': out.push_back('\f'); break;
        case '"': out.push_back('"'); break;
        case '\'': out.push_back('\''); break;
        case '\\': out.push_back('\\'); break;
        case 'u': utf8::append(read_hex(4), out); break;
        case 'U': utf8::append(read_hex(8), out); break;
        default: fail(std::string("unknown escape \\") + esc);
      }
    }
    return out;
  }

  char32_t read_hex(int digits) {
    char32_t value = 0;
    for (int i = 0; i < digits; ++i) {
      if (at_end()) fail("truncated \\u escape");
      char c = line_[pos_++];
      value <<= 4;
      if (c >= '0' && c <= '9') value |= c - '0';
      else if (c >= 'a' && c <= 'f') value |= c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') value |= c - 'A' + 10;
      else fail("bad hex digit in escape");
    }
    return value;
  }

  std::string read_lang_tag() {
    std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                         line_[pos_] == '-')) {
      ++pos_;
    }
    if (pos_ == start) fail("empty language tag");
    return std::string(line_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw MalformedTriple(line_no_, why);
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<RawEntry> parse_skos_ntriples(std::istream& in,
                                          std::string_view source_name,
                                          const IngestConfig& config,
                                          ParseMode mode, ParseLog* log) {
  strip_bom(in);
  std::unordered_set<std::string> concepts;
  struct LabelRef {
    std::string subject;
    std::string text;
  };
  std::vector<LabelRef> labels;
  std::unordered_set<std::string> seen_pairs;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    std::optional<Triple> triple;
    try {
      triple = TripleScanner(line, line_no).scan();
    } catch (const MalformedTriple& e) {
      if (!report_or_throw(mode, log, line_no, e)) throw;
      continue;
    }
    if (!triple || triple->subject.empty()) continue;
    if (!triple->object_is_literal && triple->predicate == kRdfTypeIri &&
        triple->object == config.skos_concept_type) {
      concepts.insert(triple->subject);
    } else if (triple->object_is_literal &&
               triple->predicate == config.skos_label_predicate &&
               triple->lang == config.language_tag) {
      // Repeated identical triples count once.
      std::string key = triple->subject + '\x1f' + triple->object;
      if (seen_pairs.insert(std::move(key)).second) {
        labels.push_back({std::move(triple->subject), std::move(triple->object)});
      }
    }
  }

  std::vector<RawEntry> out;
  for (auto& label : labels) {
    if (concepts.count(label.subject) == 0) continue;
    out.push_back({std::move(label.text), Scheme::kThesaurus,
                   std::move(label.subject), std::string(source_name)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// MARCXML
// ---------------------------------------------------------------------------

namespace {

std::string_view local_name(std::string_view qualified) {
  auto pos = qualified.rfind(':');
  return pos == std::string_view::npos ? qualified : qualified.substr(pos + 1);
}

void collect_records(const boost::property_tree::ptree& node,
                     std::vector<const boost::property_tree::ptree*>& out) {
  for (const auto& [key, child] : node) {
    if (key == "<xmlattr>" || key == "<xmltext>") continue;
    if (local_name(key) == "record") {
      out.push_back(&child);
    } else {
      collect_records(child, out);
    }
  }
}

}  // namespace

std::vector<RawEntry> parse_marc_authorities(std::istream& in,
                                             std::string_view source_name,
                                             const IngestConfig& config,
                                             ParseMode mode, ParseLog* log) {
  (void)mode;
  (void)log;
  config.validate();

  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_xml(in, tree, pt::xml_parser::no_comments);
  } catch (const pt::xml_parser_error& e) {
    throw MalformedXml(e.line(), e.message());
  }

  std::vector<const pt::ptree*> records;
  collect_records(tree, records);

  std::vector<RawEntry> out;
  std::size_t record_idx = 0;
  for (const pt::ptree* record : records) {
    std::size_t subfield_idx = 0;
    for (const auto& [key, datafield] : *record) {
      if (local_name(key) != "datafield") continue;
      const std::string tag =
          datafield.get<std::string>("<xmlattr>.tag", std::string());
      const bool included = config.marc_include_tags.count(tag) != 0;
      for (const auto& [sub_key, subfield] : datafield) {
        if (local_name(sub_key) != "subfield") continue;
        const std::size_t position = subfield_idx++;
        if (!included) continue;
        const std::string code =
            subfield.get<std::string>("<xmlattr>.code", std::string());
        if (code.size() != 1 ||
            config.marc_include_subfields.count(code[0]) == 0) {
          continue;
        }
        out.push_back({subfield.data(), Scheme::kSubjectHeadings,
                       tag + "$" + code + "@" + std::to_string(record_idx) +
                           "/" + std::to_string(position),
                       std::string(source_name)});
      }
    }
    ++record_idx;
  }
  return out;
}

// ---------------------------------------------------------------------------
// DDC captions CSV
// ---------------------------------------------------------------------------

namespace {

bool all_space(std::string_view s) {
  for (char c : s) {
    if (!uni::is_ascii_space(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

/// Reads one RFC 4180 record. Returns false at end of input. Framing
/// problems (stray or unterminated quote) throw MalformedCsv.
bool read_csv_record(std::istream& in, std::size_t row,
                     std::vector<std::string>& fields) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;

  std::string field;
  bool quoted = false;
  bool field_done_by_quote = false;
  while (true) {
    if (quoted) {
      if (c == EOF) throw MalformedCsv(row, "unterminated quoted field");
      if (c == '"') {
        if (in.peek() == '"') {
          in.get();
          field.push_back('"');
        } else {
          quoted = false;
          field_done_by_quote = true;
        }
      } else {
        field.push_back(static_cast<char>(c));
      }
    } else if (c == ',' ) {
      fields.push_back(std::move(field));
      field.clear();
      field_done_by_quote = false;
    } else if (c == '\n' || c == EOF) {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      fields.push_back(std::move(field));
      return true;
    } else if (c == '"') {
      if (!field.empty() || field_done_by_quote) {
        throw MalformedCsv(row, "stray quote");
      }
      quoted = true;
    } else {
      if (field_done_by_quote && c != '\r') {
        throw MalformedCsv(row, "characters after closing quote");
      }
      field.push_back(static_cast<char>(c));
    }
    c = in.get();
  }
}

}  // namespace

std::vector<RawEntry> parse_ddc_captions(std::istream& in,
                                         std::string_view source_name,
                                         ParseMode mode, ParseLog* log) {
  strip_bom(in);
  std::vector<std::string> fields;
  if (!read_csv_record(in, 1, fields) || fields.size() != 2 ||
      fields[0] != "notation" || fields[1] != "caption") {
    throw MalformedCsv(1, "expected header notation,caption");
  }

  std::vector<RawEntry> out;
  std::size_t row = 1;
  while (true) {
    ++row;
    try {
      if (!read_csv_record(in, row, fields)) break;
      if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
      if (fields.size() != 2) {
        throw MalformedCsv(row, "expected 2 fields, got " +
                                    std::to_string(fields.size()));
      }
      if (fields[0].empty() || all_space(fields[0])) {
        throw MalformedCsv(row, "empty notation");
      }
      if (fields[1].empty() || all_space(fields[1])) throw EmptyCaption(row);
    } catch (const MalformedCsv& e) {
      if (!report_or_throw(mode, log, row, e)) throw;
      continue;
    } catch (const EmptyCaption& e) {
      if (!report_or_throw(mode, log, row, e)) throw;
      continue;
    }
    out.push_back({fields[1], Scheme::kClassification, fields[0],
                   std::string(source_name)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Label table TSV
// ---------------------------------------------------------------------------

std::vector<RawEntry> parse_label_table(std::istream& in,
                                        std::string_view source_name,
                                        ParseMode mode, ParseLog* log) {
  strip_bom(in);
  std::string line;
  if (!std::getline(in, line)) throw MalformedRow(1, "missing header");
  chomp(line);
  if (line != "kind\tlabel") {
    throw MalformedRow(1, "expected header kind<TAB>label");
  }

  std::vector<RawEntry> out;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) continue;
    try {
      const auto tab = line.find('\t');
      if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
        throw MalformedRow(line_no, "expected 2 tab-separated fields");
      }
      const std::string kind = line.substr(0, tab);
      const std::string label = line.substr(tab + 1);
      Scheme scheme;
      if (kind == "class") {
        scheme = Scheme::kOntologyClasses;
      } else if (kind == "property") {
        scheme = Scheme::kOntologyProperties;
      } else if (kind == "generic") {
        scheme = Scheme::kGeneric;
      } else {
        throw UnknownKind(line_no, kind);
      }
      if (label.empty() || all_space(label)) {
        throw MalformedRow(line_no, "empty label");
      }
      out.push_back({label, scheme, std::to_string(line_no),
                     std::string(source_name)});
    } catch (const MalformedRow& e) {
      if (!report_or_throw(mode, log, line_no, e)) throw;
    } catch (const UnknownKind& e) {
      if (!report_or_throw(mode, log, line_no, e)) throw;
    }
  }
  return out;
}

}  // namespace kosana
