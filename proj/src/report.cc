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

#include "kosana/report.h"

#include <algorithm>
#include <json.hpp>

#include "kosana/errors.h"
#include "kosana/stats.h"

namespace kosana {

namespace {

using nlohmann::json;

// The merged rows of the reference layout.
constexpr std::array<FineTag, 3> kMergedPronouns = {
    FineTag::kPnRi, FineTag::kPnPe, FineTag::kPnDm};
constexpr std::array<FineTag, 2> kMergedGradedAdjectives = {FineTag::kAjCp,
                                                            FineTag::kAjSp};

template <std::size_t N>
std::int64_t sum_counts(const CorpusProfile& profile,
                        const std::array<FineTag, N>& tags) {
  std::int64_t sum = 0;
  for (FineTag tag : tags) sum += profile.tag_count(tag);
  return sum;
}

/// One row of the tag-metric block: label, count, and whether the average
/// and percentage columns apply.
struct MetricRow {
  std::string label;
  std::int64_t count = 0;
  bool with_avg = true;
  bool with_pct = true;
};

std::vector<MetricRow> tag_metric_rows(const CorpusProfile& p) {
  return {
      {"POS defined as Concepts/Entities (sum)", p.entity_sum()},
      {"Nouns Common", p.tag_count(FineTag::kNoCm)},
      {"Nouns Proper", p.tag_count(FineTag::kNoPr)},
      {"Abbreviations", p.tag_count(FineTag::kAbbr)},
      {"Pronouns (relative-indefinite, personal, demonstrative)",
       sum_counts(p, kMergedPronouns)},
      {"Residual, foreign word", p.tag_count(FineTag::kRgf)},
      {"POS defined as Relations (sum)", p.relation_sum()},
      {"Verbs", p.tag_count(FineTag::kVb)},
      {"Conjunctions", p.tag_count(FineTag::kCj)},
      {"Adpositions", p.tag_count(FineTag::kAsPp)},
      {"Particles Negative", p.tag_count(FineTag::kPtNg)},
      {"Adjectives (comparative & superlative)",
       sum_counts(p, kMergedGradedAdjectives)},
      {"Adverbs", p.tag_count(FineTag::kAd)},
      {"Pronouns possessive", p.tag_count(FineTag::kPnPo)},
      {"Adjectives (basic)", p.tag_count(FineTag::kAjBa), false, true},
  };
}

void md_row(std::string& out, const std::vector<std::string>& cells) {
  out += '|';
  for (const std::string& cell : cells) {
    out += ' ';
    out += cell;
    out += " |";
  }
  out += '\n';
}

void md_separator(std::string& out, std::size_t columns) {
  out += '|';
  for (std::size_t i = 0; i < columns; ++i) out += " --- |";
  out += '\n';
}

json tag_entry_json(const CorpusProfile& profile, std::int64_t count) {
  return {{"count", count},
          {"avg_per_entry", profile.avg_per_entry(count)},
          {"pct_of_words", profile.pct_of_words(count)}};
}

json profile_to_json(const CorpusProfile& profile) {
  json per_tag = json::object();
  for (FineTag tag : all_fine_tags()) {
    per_tag[std::string(fine_tag_name(tag))] =
        tag_entry_json(profile, profile.tag_count(tag));
  }
  return {{"entries", profile.entries},
          {"tokens", profile.tokens},
          {"words", profile.words},
          {"words_per_entry", profile.words_per_entry()},
          {"per_tag", per_tag},
          {"entity_sum", tag_entry_json(profile, profile.entity_sum())},
          {"relation_sum", tag_entry_json(profile, profile.relation_sum())},
          {"uncategorized_adjective",
           {{"count", profile.tag_count(FineTag::kAjBa)},
            {"pct_of_words",
             profile.pct_of_words(profile.tag_count(FineTag::kAjBa))}}}};
}

CorpusProfile profile_from_json(const json& doc) {
  CorpusProfile profile;
  profile.entries = doc.at("entries").get<std::int64_t>();
  profile.tokens = doc.at("tokens").get<std::int64_t>();
  profile.words = doc.at("words").get<std::int64_t>();
  for (const auto& [name, value] : doc.at("per_tag").items()) {
    const auto tag = parse_fine_tag(name);
    if (!tag) throw UnknownTag(0, name);
    profile.tag_count(*tag) = value.at("count").get<std::int64_t>();
  }
  return profile;
}

std::string profile_markdown(const CorpusProfile& profile) {
  std::string out;
  md_row(out, {"Metric", "Count", "Per entry (avg)", "% of words"});
  md_separator(out, 4);
  md_row(out, {"Number of entries", std::to_string(profile.entries), "", ""});
  md_row(out, {"Number of tokens", std::to_string(profile.tokens), "", ""});
  md_row(out, {"Number of words", std::to_string(profile.words), "", ""});
  md_row(out, {"Words per entry (avg)", profile.words_per_entry(), "", ""});
  for (const MetricRow& row : tag_metric_rows(profile)) {
    md_row(out, {row.label, std::to_string(row.count),
                 row.with_avg ? profile.avg_per_entry(row.count) : "",
                 row.with_pct ? profile.pct_of_words(row.count) : ""});
  }
  return out;
}

std::string profile_csv(const CorpusProfile& profile) {
  std::string out = "row,count,avg_per_entry,pct_of_words\n";
  const auto line = [&](std::string_view label, const std::string& count,
                        const std::string& avg, const std::string& pct) {
    out += label;
    out += ',';
    out += count;
    out += ',';
    out += avg;
    out += ',';
    out += pct;
    out += '\n';
  };
  line("entries", std::to_string(profile.entries), "", "");
  line("tokens", std::to_string(profile.tokens), "", "");
  line("words", std::to_string(profile.words), "", "");
  line("words_per_entry", "", profile.words_per_entry(), "");
  const auto tag_line = [&](std::string_view label, std::int64_t count) {
    line(label, std::to_string(count), profile.avg_per_entry(count),
         profile.pct_of_words(count));
  };
  tag_line("entity_sum", profile.entity_sum());
  for (FineTag tag : kEntityTags) tag_line(fine_tag_name(tag), profile.tag_count(tag));
  tag_line("relation_sum", profile.relation_sum());
  for (FineTag tag : kRelationTags) tag_line(fine_tag_name(tag), profile.tag_count(tag));
  for (FineTag tag : {FineTag::kAjBa, FineTag::kAt, FineTag::kDig,
                      FineTag::kPunctOpen, FineTag::kPunctClose,
                      FineTag::kPunctOther}) {
    tag_line(fine_tag_name(tag), profile.tag_count(tag));
  }
  return out;
}

json patterns_to_json(const PatternTable& table) {
  json rows = json::array();
  for (const PatternRow& row : table.rows) {
    rows.push_back({{"pattern", row.pattern.display()},
                    {"count", row.count},
                    {"pct_of_entries", table.pct_of_entries(row.count)}});
  }
  return {{"entries", table.entries},
          {"top_k", table.top_k},
          {"unique_patterns", table.unique_patterns()},
          {"entries_per_pattern_avg", table.entries_per_pattern_avg()},
          {"rows", rows},
          {"coverage",
           {{"label", table.coverage_label()},
            {"covered", table.covered()},
            {"pct", table.coverage_pct()}}}};
}

PatternKey pattern_from_display(const std::string& display) {
  PatternKey key;
  std::size_t pos = 0;
  while (pos <= display.size()) {
    std::size_t next = display.find(" + ", pos);
    const std::string name = display.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    bool found = false;
    for (int i = 0; i < 15; ++i) {
      if (render_tag_name(static_cast<RenderTag>(i)) == name) {
        key.tags.push_back(static_cast<RenderTag>(i));
        found = true;
        break;
      }
    }
    if (!found) throw Error("unknown pattern tag \"" + name + "\"");
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return key;
}

PatternTable patterns_from_json(const json& doc) {
  PatternTable table;
  table.entries = doc.at("entries").get<std::int64_t>();
  table.top_k = doc.at("top_k").get<std::int64_t>();
  for (const auto& row : doc.at("rows")) {
    table.rows.push_back(
        {pattern_from_display(row.at("pattern").get<std::string>()),
         row.at("count").get<std::int64_t>()});
  }
  return table;
}

std::string patterns_markdown(const PatternTable& table) {
  std::string out;
  md_row(out, {"POS pattern", "Total No and rate"});
  md_separator(out, 2);
  const std::size_t take =
      std::min(table.rows.size(), static_cast<std::size_t>(table.top_k));
  for (std::size_t i = 0; i < take; ++i) {
    const PatternRow& row = table.rows[i];
    md_row(out, {row.pattern.display(),
                 std::to_string(row.count) + " (" +
                     table.pct_of_entries(row.count) + ")"});
  }
  md_row(out, {table.coverage_label(),
               std::to_string(table.covered()) + " (" + table.coverage_pct() +
                   ")"});
  return out;
}

json distribution_to_json(const ConceptDistribution& dist) {
  return {{"atomic", dist.atomic},
          {"enumeration", dist.enumeration},
          {"composite", dist.composite},
          {"atomic_pct", dist.atomic_pct()},
          {"enumeration_pct", dist.enumeration_pct()},
          {"composite_pct", dist.composite_pct()}};
}

ConceptDistribution distribution_from_json(const json& doc) {
  ConceptDistribution dist;
  dist.atomic = doc.at("atomic").get<std::int64_t>();
  dist.enumeration = doc.at("enumeration").get<std::int64_t>();
  dist.composite = doc.at("composite").get<std::int64_t>();
  return dist;
}

json bundle_to_json_object(const CorpusBundle& bundle) {
  return {{"name", bundle.name},
          {"scheme", scheme_name(bundle.scheme)},
          {"profile", profile_to_json(bundle.profile)},
          {"patterns", patterns_to_json(bundle.patterns)},
          {"distribution", distribution_to_json(bundle.dist)}};
}

CorpusBundle bundle_from_json_object(const json& doc) {
  CorpusBundle bundle;
  bundle.name = doc.at("name").get<std::string>();
  const auto scheme = parse_scheme(doc.value("scheme", "generic"));
  if (!scheme) {
    throw Error("unknown scheme \"" + doc.value("scheme", "") + "\"");
  }
  bundle.scheme = *scheme;
  bundle.profile = profile_from_json(doc.at("profile"));
  bundle.patterns = patterns_from_json(doc.at("patterns"));
  bundle.dist = distribution_from_json(doc.at("distribution"));
  return bundle;
}

std::string comparison_markdown(const ComparisonReport& report) {
  std::string out = "# Corpus comparison\n\n## Tag metrics\n\n";

  std::vector<std::string> header = {"Metric"};
  for (const CorpusBundle& bundle : report.corpora) header.push_back(bundle.name);
  md_row(out, header);
  md_separator(out, header.size());

  const auto simple_row = [&](const std::string& label, auto getter) {
    std::vector<std::string> cells = {label};
    for (const CorpusBundle& bundle : report.corpora) {
      cells.push_back(getter(bundle));
    }
    md_row(out, cells);
  };
  simple_row("Number of entries", [](const CorpusBundle& b) {
    return std::to_string(b.profile.entries);
  });
  simple_row("Number of tokens", [](const CorpusBundle& b) {
    return std::to_string(b.profile.tokens);
  });
  simple_row("Number of words", [](const CorpusBundle& b) {
    return std::to_string(b.profile.words);
  });
  simple_row("Words per entry (avg)", [](const CorpusBundle& b) {
    return b.profile.words_per_entry();
  });

  const std::size_t metric_rows = tag_metric_rows(CorpusProfile{}).size();
  for (std::size_t i = 0; i < metric_rows; ++i) {
    std::vector<std::string> cells;
    for (const CorpusBundle& bundle : report.corpora) {
      const MetricRow row = tag_metric_rows(bundle.profile)[i];
      if (cells.empty()) cells.push_back(row.label);
      std::string value = std::to_string(row.count) + " (";
      if (row.with_avg) value += bundle.profile.avg_per_entry(row.count) + ", ";
      value += bundle.profile.pct_of_words(row.count) + ")";
      cells.push_back(std::move(value));
    }
    md_row(out, cells);
  }

  out += "\n## Syntactic patterns\n\n";
  std::vector<std::string> pattern_header;
  for (const CorpusBundle& bundle : report.corpora) {
    pattern_header.push_back(bundle.name + " pattern");
    pattern_header.push_back("Total No and rate");
  }
  md_row(out, pattern_header);
  md_separator(out, pattern_header.size());

  std::size_t depth = 0;
  for (const CorpusBundle& bundle : report.corpora) {
    depth = std::max(depth, std::min(bundle.patterns.rows.size(),
                                     static_cast<std::size_t>(
                                         bundle.patterns.top_k)));
  }
  for (std::size_t i = 0; i < depth; ++i) {
    std::vector<std::string> cells;
    for (const CorpusBundle& bundle : report.corpora) {
      const auto& rows = bundle.patterns.rows;
      const std::size_t take = std::min(
          rows.size(), static_cast<std::size_t>(bundle.patterns.top_k));
      if (i < take) {
        cells.push_back(rows[i].pattern.display());
        cells.push_back(std::to_string(rows[i].count) + " (" +
                        bundle.patterns.pct_of_entries(rows[i].count) + ")");
      } else {
        cells.push_back("-");
        cells.push_back("-");
      }
    }
    md_row(out, cells);
  }
  {
    std::vector<std::string> cells;
    for (const CorpusBundle& bundle : report.corpora) {
      cells.push_back(bundle.patterns.coverage_label());
      cells.push_back(std::to_string(bundle.patterns.covered()) + " (" +
                      bundle.patterns.coverage_pct() + ")");
    }
    md_row(out, cells);
  }

  out += "\n## Pattern variety\n\n";
  std::vector<std::string> variety_header = {"Metric"};
  for (const CorpusBundle& bundle : report.corpora) {
    variety_header.push_back(bundle.name);
  }
  md_row(out, variety_header);
  md_separator(out, variety_header.size());
  simple_row("Unique patterns", [](const CorpusBundle& b) {
    return std::to_string(b.patterns.unique_patterns());
  });
  simple_row("Entries per pattern (avg)", [](const CorpusBundle& b) {
    return b.patterns.entries_per_pattern_avg();
  });

  out += "\n## Concept distribution\n\n";
  md_row(out, variety_header);
  md_separator(out, variety_header.size());
  simple_row("Atomic", [](const CorpusBundle& b) { return b.dist.atomic_pct(); });
  simple_row("Complex (enumeration)",
             [](const CorpusBundle& b) { return b.dist.enumeration_pct(); });
  simple_row("Complex (composite)",
             [](const CorpusBundle& b) { return b.dist.composite_pct(); });

  if (!report.notes.empty()) {
    out += "\n## Notes\n\n";
    for (const std::string& note : report.notes) {
      out += "- " + note + "\n";
    }
  }
  return out;
}

}  // namespace

std::optional<OutputFormat> parse_output_format(std::string_view name) {
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "md" || name == "markdown") return OutputFormat::kMarkdown;
  return std::nullopt;
}

std::string render_profile(const CorpusProfile& profile, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return profile_to_json(profile).dump(2) + "\n";
    case OutputFormat::kCsv:
      return profile_csv(profile);
    case OutputFormat::kMarkdown:
      return profile_markdown(profile);
  }
  return {};
}

CorpusProfile parse_profile_json(const std::string& text) {
  try {
    return profile_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(std::string("bad profile json: ") + e.what());
  }
}

std::string render_patterns(const PatternTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson:
      return patterns_to_json(table).dump(2) + "\n";
    case OutputFormat::kCsv:
      throw Error("pattern tables render as json or markdown");
    case OutputFormat::kMarkdown:
      return patterns_markdown(table);
  }
  return {};
}

std::string bundle_to_json(const CorpusBundle& bundle) {
  return bundle_to_json_object(bundle).dump(2) + "\n";
}

CorpusBundle bundle_from_json(const std::string& text) {
  try {
    return bundle_from_json_object(json::parse(text));
  } catch (const json::exception& e) {
    throw Error(std::string("bad corpus bundle json: ") + e.what());
  }
}

ComparisonReport compare(std::vector<CorpusBundle> bundles, std::int64_t k) {
  if (bundles.size() < 2) throw TooFewCorpora(bundles.size());
  for (const CorpusBundle& bundle : bundles) {
    if (bundle.patterns.top_k != k) {
      throw Error("corpus \"" + bundle.name + "\" was analyzed with top-k " +
                  std::to_string(bundle.patterns.top_k) + ", expected " +
                  std::to_string(k));
    }
  }
  ComparisonReport report;
  report.corpora = std::move(bundles);
  report.notes = reference_discrepancy_notes();
  bool has_headings = false;
  bool has_thesaurus = false;
  for (const CorpusBundle& bundle : report.corpora) {
    has_headings = has_headings || bundle.scheme == Scheme::kSubjectHeadings;
    has_thesaurus = has_thesaurus || bundle.scheme == Scheme::kThesaurus;
  }
  if (has_headings && has_thesaurus) {
    report.notes.push_back(std::string(distribution_reference_note()));
  }
  return report;
}

std::string render_comparison(const ComparisonReport& report,
                              OutputFormat format) {
  switch (format) {
    case OutputFormat::kJson: {
      json corpora = json::array();
      for (const CorpusBundle& bundle : report.corpora) {
        corpora.push_back(bundle_to_json_object(bundle));
      }
      json doc = {{"corpora", corpora}, {"notes", report.notes}};
      return doc.dump(2) + "\n";
    }
    case OutputFormat::kCsv:
      throw Error("comparison reports render as json or markdown");
    case OutputFormat::kMarkdown:
      return comparison_markdown(report);
  }
  return {};
}

}  // namespace kosana
