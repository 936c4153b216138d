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

#include "kosana/jsonl.h"

#include <json.hpp>

#include "kosana/errors.h"
#include "kosana/utf8.h"

namespace kosana {

namespace {

using nlohmann::json;

json parse_line(const std::string& line, std::size_t line_no) {
  try {
    return json::parse(line);
  } catch (const json::exception& e) {
    throw Error("bad json at line " + std::to_string(line_no) + ": " +
                e.what());
  }
}

Scheme scheme_from_header(const json& header) {
  const auto scheme = parse_scheme(header.value("scheme", "generic"));
  if (!scheme) {
    throw Error("unknown scheme \"" + header.value("scheme", "") + "\"");
  }
  return *scheme;
}

std::vector<std::string> provenance_from(const json& object) {
  std::vector<std::string> out;
  if (object.contains("provenance")) {
    for (const auto& item : object.at("provenance")) {
      out.push_back(item.get<std::string>());
    }
  }
  return out;
}

/// Recomputes token spans by walking the entry text. Tokens are separated
/// by at most one space.
std::vector<Token> rebuild_tokens(const std::string& text,
                                  const json& pairs, std::size_t line_no) {
  const std::vector<char32_t> cps = utf8::decode(text);
  std::vector<Token> tokens;
  std::size_t pos = 0;
  for (const auto& pair : pairs) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error("bad token pair at line " + std::to_string(line_no));
    }
    const std::string surface = pair[0].get<std::string>();
    const std::string tag_name = pair[1].get<std::string>();
    const auto tag = parse_fine_tag(tag_name);
    if (!tag) throw UnknownTag(line_no, tag_name);

    const std::vector<char32_t> scps = utf8::decode(surface);
    if (pos < cps.size() && cps[pos] == U' ') ++pos;
    if (pos + scps.size() > cps.size() ||
        !std::equal(scps.begin(), scps.end(), cps.begin() + pos)) {
      throw Error("token \"" + surface + "\" does not match entry text at line " +
                  std::to_string(line_no));
    }
    tokens.push_back({surface, *tag, pos, pos + scps.size()});
    pos += scps.size();
  }
  if (pos != cps.size()) {
    throw Error("tokens do not cover entry text at line " +
                std::to_string(line_no));
  }
  return tokens;
}

}  // namespace

void save_corpus(const Corpus& corpus, std::ostream& out) {
  json header = {{"name", corpus.name},
                 {"scheme", scheme_name(corpus.scheme)},
                 {"language", corpus.language},
                 {"duplicate_count", corpus.duplicate_count},
                 {"dropped_empty_count", corpus.dropped_empty_count}};
  out << header.dump() << '\n';
  for (const Entry& entry : corpus.entries) {
    json line = {{"text", entry.text}, {"provenance", entry.provenance}};
    out << line.dump() << '\n';
  }
}

Corpus load_corpus(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json object = parse_line(line, line_no);
    if (!have_header) {
      if (object.contains("text")) {
        throw Error("corpus file is missing its header line");
      }
      corpus.name = object.value("name", "");
      corpus.scheme = scheme_from_header(object);
      corpus.language = object.value("language", "");
      corpus.duplicate_count = object.value("duplicate_count", 0);
      corpus.dropped_empty_count = object.value("dropped_empty_count", 0);
      have_header = true;
      continue;
    }
    Entry entry;
    try {
      entry.text = object.at("text").get<std::string>();
      entry.provenance = provenance_from(object);
    } catch (const json::exception& e) {
      throw Error("bad corpus entry at line " + std::to_string(line_no) +
                  ": " + e.what());
    }
    corpus.entries.push_back(std::move(entry));
  }
  if (!have_header) throw EmptyFile("corpus file");
  return corpus;
}

void save_tagged(const TaggedCorpus& corpus, std::ostream& out) {
  json header = {{"name", corpus.name},
                 {"scheme", scheme_name(corpus.scheme)},
                 {"language", corpus.language}};
  out << header.dump() << '\n';
  for (const TaggedEntry& entry : corpus.entries) {
    json tokens = json::array();
    for (const Token& token : entry.tokens) {
      tokens.push_back({token.surface, fine_tag_name(token.tag)});
    }
    json line = {{"text", entry.entry.text},
                 {"provenance", entry.entry.provenance},
                 {"tokens", tokens}};
    out << line.dump() << '\n';
  }
}

TaggedCorpus load_tagged(std::istream& in) {
  TaggedCorpus corpus;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json object = parse_line(line, line_no);
    if (!have_header) {
      if (object.contains("text")) {
        throw Error("tagged corpus file is missing its header line");
      }
      corpus.name = object.value("name", "");
      corpus.scheme = scheme_from_header(object);
      corpus.language = object.value("language", "");
      have_header = true;
      continue;
    }
    TaggedEntry entry;
    try {
      entry.entry.text = object.at("text").get<std::string>();
      entry.entry.provenance = provenance_from(object);
      entry.tokens =
          rebuild_tokens(entry.entry.text, object.at("tokens"), line_no);
    } catch (const json::exception& e) {
      throw Error("bad tagged entry at line " + std::to_string(line_no) +
                  ": " + e.what() + " (is this a tagged corpus?)");
    }
    corpus.entries.push_back(std::move(entry));
  }
  if (!have_header) throw EmptyFile("tagged corpus file");
  return corpus;
}

void save_findings(const std::vector<Finding>& findings, std::ostream& out) {
  for (const Finding& finding : findings) {
    json evidence = json::array();
    for (const FindingEvidence& item : finding.evidence) {
      evidence.push_back({{"begin", item.span.begin},
                          {"end", item.span.end},
                          {"surface", item.surface}});
    }
    json line = {{"rule", finding.rule_id},
                 {"severity", severity_name(finding.severity)},
                 {"locator", finding.entry_locator},
                 {"message", finding.message},
                 {"evidence", evidence}};
    out << line.dump() << '\n';
  }
}

std::string findings_text(const std::vector<Finding>& findings) {
  std::string out;
  for (const Finding& finding : findings) {
    out += finding.entry_locator;
    out += ": ";
    out += severity_name(finding.severity);
    out += ' ';
    out += finding.rule_id;
    out += ' ';
    out += finding.message;
    if (!finding.evidence.empty()) {
      out += " [";
      for (std::size_t i = 0; i < finding.evidence.size(); ++i) {
        if (i > 0) out += ", ";
        const FindingEvidence& item = finding.evidence[i];
        out += '"' + item.surface + "\"@" + std::to_string(item.span.begin) +
               '-' + std::to_string(item.span.end);
      }
      out += ']';
    }
    out += '\n';
  }
  return out;
}

}  // namespace kosana
