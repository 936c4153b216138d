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

#include "kosana/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kosana/errors.h"
#include "kosana/ingest.h"
#include "kosana/jsonl.h"
#include "kosana/normalize.h"
#include "kosana/report.h"
#include "kosana/tagger.h"

namespace kosana {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

/// Everything the config file can carry. Command-line flags override these
/// defaults.
struct CliConfig {
  IngestConfig ingest;
  ClassifierConfig classifier;
  std::string strip_symbols = "!%*";
  bool nfc = false;
  std::int64_t top_k = 20;
  bool strict = false;
  std::string format;
  std::string fail_on = "error";
  std::vector<std::string> unknown_keys;
};

std::set<char> char_set(const std::string& chars) {
  return {chars.begin(), chars.end()};
}

std::set<std::string> comma_list(const std::string& value) {
  std::set<std::string> out;
  std::string item;
  std::stringstream stream(value);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

CliConfig load_config_file(const std::string& path) {
  CliConfig cfg;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open config file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error("bad config file " + path + ": " + e.what());
  }
  if (!doc.is_object()) throw Error("config file must be a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (key == "language_tag") {
      cfg.ingest.language_tag = value.get<std::string>();
    } else if (key == "marc_include_tags") {
      cfg.ingest.marc_include_tags =
          std::set<std::string>(value.begin(), value.end());
    } else if (key == "marc_include_subfields") {
      cfg.ingest.marc_include_subfields = char_set(value.get<std::string>());
    } else if (key == "marc_exclude_subfields") {
      cfg.ingest.marc_exclude_subfields = char_set(value.get<std::string>());
    } else if (key == "skos_label_predicate") {
      cfg.ingest.skos_label_predicate = value.get<std::string>();
    } else if (key == "skos_concept_type") {
      cfg.ingest.skos_concept_type = value.get<std::string>();
    } else if (key == "compound_whitelist") {
      cfg.classifier.compound_whitelist =
          std::set<std::string>(value.begin(), value.end());
    } else if (key == "open_class_markers") {
      cfg.classifier.open_class_markers =
          std::set<std::string>(value.begin(), value.end());
    } else if (key == "qualifier_as_composite") {
      cfg.classifier.qualifier_as_composite = value.get<bool>();
    } else if (key == "strip_symbols") {
      cfg.strip_symbols = value.get<std::string>();
    } else if (key == "nfc") {
      cfg.nfc = value.get<bool>();
    } else if (key == "top_k") {
      cfg.top_k = value.get<std::int64_t>();
    } else if (key == "strict") {
      cfg.strict = value.get<bool>();
    } else if (key == "format") {
      cfg.format = value.get<std::string>();
    } else if (key == "fail_on") {
      cfg.fail_on = value.get<std::string>();
    } else {
      cfg.unknown_keys.push_back(key);
    }
  }
  return cfg;
}

/// Finds --config in raw args (before CLI11 runs, so the file can seed
/// option defaults), falling back to $KOSANA_CONFIG.
std::optional<std::string> find_config_path(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  if (const char* env = std::getenv("KOSANA_CONFIG"); env && *env) {
    return std::string(env);
  }
  return std::nullopt;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open input file: " + path);
  return in;
}

/// Writes through a temp file and renames, so readers never observe a
/// half-written artifact. An empty path means stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write output file: " + path);
    out << content;
  }
  fs::rename(tmp, target);
}

void report_skipped(const ParseLog& log, const std::string& file) {
  for (const SkippedLine& skipped : log.skipped) {
    std::cerr << "kosana: " << file << ":" << skipped.line
              << ": skipped: " << skipped.reason << "\n";
  }
}

int severity_rank(Severity severity) { return static_cast<int>(severity); }

OutputFormat require_format(const std::string& name) {
  const auto format = parse_output_format(name);
  if (!format) throw Error("unknown output format \"" + name + "\"");
  return *format;
}

struct IngestArgs {
  std::string format;
  std::string lang;
  std::string name;
  std::string out;
  std::vector<std::string> inputs;
  std::string kind;
};

int run_ingest(const IngestArgs& args, const CliConfig& cfg, bool strict) {
  IngestConfig ingest_cfg = cfg.ingest;
  ingest_cfg.language_tag = args.lang;
  ingest_cfg.validate();
  const ParseMode mode = strict ? ParseMode::kStrict : ParseMode::kLenient;

  std::vector<RawEntry> raw;
  for (const std::string& input : args.inputs) {
    std::ifstream in = open_input(input);
    ParseLog log;
    std::vector<RawEntry> parsed;
    if (args.format == "skos-nt") {
      parsed = parse_skos_ntriples(in, input, ingest_cfg, mode, &log);
    } else if (args.format == "marcxml") {
      parsed = parse_marc_authorities(in, input, ingest_cfg, mode, &log);
    } else if (args.format == "ddc-csv") {
      parsed = parse_ddc_captions(in, input, mode, &log);
    } else {
      parsed = parse_label_table(in, input, mode, &log);
    }
    report_skipped(log, input);
    raw.insert(raw.end(), std::make_move_iterator(parsed.begin()),
               std::make_move_iterator(parsed.end()));
  }

  if (!args.kind.empty()) {
    Scheme keep = Scheme::kGeneric;
    if (args.kind == "class") keep = Scheme::kOntologyClasses;
    if (args.kind == "property") keep = Scheme::kOntologyProperties;
    std::erase_if(raw, [keep](const RawEntry& e) { return e.scheme != keep; });
  }

  NormalizeConfig norm;
  norm.strip_set = utf8::decode(cfg.strip_symbols);
  norm.nfc = cfg.nfc;
  std::string name = args.name.empty()
                         ? fs::path(args.out).stem().string()
                         : args.name;
  Corpus corpus;
  try {
    corpus = dedup_entries(raw, std::move(name), norm);
  } catch (const MixedSchemes& e) {
    throw Error(std::string(e.what()) +
                " (use --kind to select one label-table kind)");
  }
  corpus.language = ingest_cfg.language_tag;

  std::ostringstream buffer;
  save_corpus(corpus, buffer);
  write_output(args.out, buffer.str());
  std::cerr << "kosana: ingested " << raw.size() << " raw entries into "
            << corpus.entries.size() << " unique (" << corpus.duplicate_count
            << " duplicates, " << corpus.dropped_empty_count
            << " empty dropped)\n";
  return 0;
}

struct TagArgs {
  std::string corpus;
  std::string pretagged;
  std::string lexicon;
  std::string script;
  std::string out;
};

int run_tag(const TagArgs& args) {
  std::ifstream corpus_in = open_input(args.corpus);
  const Corpus corpus = load_corpus(corpus_in);

  TaggedCorpus tagged;
  if (!args.pretagged.empty()) {
    std::ifstream in = open_input(args.pretagged);
    tagged = align_pretagged(corpus, import_pretagged(in));
  } else {
    const Lexicon lexicon = load_lexicon_file(args.lexicon);
    std::optional<uni::Script> script;
    if (args.script == "latin") script = uni::Script::kLatin;
    if (args.script == "greek") script = uni::Script::kGreek;
    tagged = tag_corpus(corpus, lexicon, script);
  }

  std::ostringstream buffer;
  save_tagged(tagged, buffer);
  write_output(args.out, buffer.str());
  return 0;
}

std::string distribution_markdown(const ConceptDistribution& dist) {
  std::string out = "| Class | Share |\n| --- | --- |\n";
  out += "| Atomic | " + dist.atomic_pct() + " |\n";
  out += "| Complex (enumeration) | " + dist.enumeration_pct() + " |\n";
  out += "| Complex (composite) | " + dist.composite_pct() + " |\n";
  return out;
}

struct AnalyzeArgs {
  std::string tagged;
  std::int64_t top_k = 20;
  std::string format = "json";
  std::string out;
};

CorpusBundle analyze_bundle(const TaggedCorpus& corpus, std::int64_t top_k,
                            const ClassifierConfig& classifier) {
  CorpusBundle bundle;
  bundle.name = corpus.name.empty() ? "corpus" : corpus.name;
  bundle.scheme = corpus.scheme;
  bundle.profile = profile_corpus(corpus);
  bundle.patterns = mine_patterns(corpus, top_k);
  bundle.dist = distribution(corpus, classifier);
  return bundle;
}

int run_analyze(const AnalyzeArgs& args, const ClassifierConfig& classifier) {
  std::ifstream in = open_input(args.tagged);
  const TaggedCorpus corpus = load_tagged(in);
  const CorpusBundle bundle = analyze_bundle(corpus, args.top_k, classifier);

  const OutputFormat format = require_format(args.format);
  std::string content;
  switch (format) {
    case OutputFormat::kJson:
      content = bundle_to_json(bundle);
      break;
    case OutputFormat::kCsv:
      content = render_profile(bundle.profile, OutputFormat::kCsv);
      break;
    case OutputFormat::kMarkdown:
      content = "# " + bundle.name + "\n\n## Tag metrics\n\n" +
                render_profile(bundle.profile, OutputFormat::kMarkdown) +
                "\n## Syntactic patterns\n\n" +
                render_patterns(bundle.patterns, OutputFormat::kMarkdown) +
                "\n## Concept distribution\n\n" +
                distribution_markdown(bundle.dist);
      break;
  }
  write_output(args.out, content);
  return 0;
}

struct PatternsArgs {
  std::string tagged;
  std::int64_t top_k = 20;
  std::string format = "md";
  std::string out;
};

int run_patterns(const PatternsArgs& args) {
  std::ifstream in = open_input(args.tagged);
  const TaggedCorpus corpus = load_tagged(in);
  const PatternTable table = mine_patterns(corpus, args.top_k);
  write_output(args.out, render_patterns(table, require_format(args.format)));
  return 0;
}

struct LintArgs {
  std::string tagged;
  std::string rules;
  std::string fail_on = "error";
  std::string format = "text";
  std::string out;
};

int run_lint(const LintArgs& args, const ClassifierConfig& classifier) {
  std::ifstream in = open_input(args.tagged);
  const TaggedCorpus corpus = load_tagged(in);

  RuleSet rules;
  if (!args.rules.empty()) {
    std::ifstream rules_in = open_input(args.rules);
    rules = RuleSet::load(rules_in);
  }

  const std::vector<Finding> findings = lint_corpus(corpus, classifier, rules);
  if (args.format == "jsonl") {
    std::ostringstream buffer;
    save_findings(findings, buffer);
    write_output(args.out, buffer.str());
  } else {
    write_output(args.out, findings_text(findings));
  }

  const auto threshold = parse_severity(args.fail_on);
  if (!threshold) throw Error("unknown severity \"" + args.fail_on + "\"");
  for (const Finding& finding : findings) {
    if (severity_rank(finding.severity) >= severity_rank(*threshold)) {
      return 1;
    }
  }
  return 0;
}

struct CompareArgs {
  std::vector<std::string> inputs;
  std::string format = "md";
  std::string out;
};

int run_compare(const CompareArgs& args) {
  std::vector<CorpusBundle> bundles;
  for (const std::string& input : args.inputs) {
    std::ifstream in = open_input(input);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    bundles.push_back(bundle_from_json(buffer.str()));
  }
  if (bundles.empty()) throw TooFewCorpora(0);
  const std::int64_t k = bundles.front().patterns.top_k;
  const ComparisonReport report = compare(std::move(bundles), k);
  write_output(args.out, render_comparison(report, require_format(args.format)));
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? argc - 1 : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args);
}

int run_cli(const std::vector<std::string>& args) {
  try {
    CliConfig cfg;
    if (const auto config_path = find_config_path(args)) {
      cfg = load_config_file(*config_path);
    }

    bool strict = cfg.strict;
    for (const std::string& arg : args) {
      if (arg == "--strict") strict = true;
      if (arg == "--lenient") strict = false;
    }
    if (!cfg.unknown_keys.empty()) {
      for (const std::string& key : cfg.unknown_keys) {
        std::cerr << "kosana: " << (strict ? "error" : "warning")
                  << ": unknown config key \"" << key << "\"\n";
      }
      if (strict) return 2;
    }

    CLI::App app{"Controlled-vocabulary analysis toolkit", "kosana"};
    app.require_subcommand(1);
    std::string config_path_opt;
    app.add_option("--config", config_path_opt,
                   "JSON config file (or $KOSANA_CONFIG)");
    app.add_flag("--strict,!--lenient", strict,
                 "Abort on malformed input lines instead of skipping");

    int exit_code = 0;

    // ingest
    IngestArgs ingest_args;
    ingest_args.lang = cfg.ingest.language_tag;
    std::string marc_tags, marc_include, marc_exclude;
    auto* ingest_cmd = app.add_subcommand(
        "ingest", "Parse source files into a normalized corpus");
    ingest_cmd->fallthrough();
    ingest_cmd->add_option("--format", ingest_args.format, "Source format")
        ->required()
        ->check(CLI::IsMember({"skos-nt", "marcxml", "ddc-csv", "labels-tsv"}));
    ingest_cmd->add_option("--lang", ingest_args.lang,
                           "Language tag for SKOS label selection");
    ingest_cmd->add_option("--name", ingest_args.name,
                           "Corpus name (default: output file stem)");
    ingest_cmd->add_option("--out", ingest_args.out, "Corpus JSONL output")
        ->required();
    ingest_cmd->add_option("inputs", ingest_args.inputs, "Source files")
        ->required();
    ingest_cmd->add_option("--kind", ingest_args.kind,
                           "Keep only this label-table kind")
        ->check(CLI::IsMember({"class", "property", "generic"}));
    ingest_cmd->add_option("--marc-tags", marc_tags,
                           "Comma-separated MARC datafield tags");
    ingest_cmd->add_option("--marc-include", marc_include,
                           "MARC subfield codes to keep, e.g. ax");
    ingest_cmd->add_option("--marc-exclude", marc_exclude,
                           "MARC subfield codes to dismiss, e.g. zy");
    ingest_cmd->add_option("--skos-label-predicate",
                           cfg.ingest.skos_label_predicate, "Label predicate IRI");
    ingest_cmd->add_option("--skos-concept-type", cfg.ingest.skos_concept_type,
                           "Concept type IRI");
    ingest_cmd->add_option("--strip-symbols", cfg.strip_symbols,
                           "Characters deleted during normalization");
    ingest_cmd->add_flag("--nfc", cfg.nfc, "Apply Unicode NFC first");
    ingest_cmd->callback([&] {
      if (!marc_tags.empty()) cfg.ingest.marc_include_tags = comma_list(marc_tags);
      if (!marc_include.empty()) {
        cfg.ingest.marc_include_subfields = char_set(marc_include);
      }
      if (!marc_exclude.empty()) {
        cfg.ingest.marc_exclude_subfields = char_set(marc_exclude);
      }
      exit_code = run_ingest(ingest_args, cfg, strict);
    });

    // tag
    TagArgs tag_args;
    auto* tag_cmd =
        app.add_subcommand("tag", "Attach part-of-speech tags to a corpus");
    tag_cmd->fallthrough();
    tag_cmd->add_option("--corpus", tag_args.corpus, "Corpus JSONL input")
        ->required();
    auto* pretagged_opt = tag_cmd->add_option(
        "--pretagged", tag_args.pretagged,
        "Vertical-format output of an external tagger");
    auto* lexicon_opt = tag_cmd->add_option(
        "--lexicon", tag_args.lexicon, "Lexicon TSV for the built-in tagger");
    pretagged_opt->excludes(lexicon_opt);
    tag_cmd->add_option("--script", tag_args.script,
                        "Primary script (default: from corpus language)")
        ->check(CLI::IsMember({"latin", "greek"}));
    tag_cmd->add_option("--out", tag_args.out, "Tagged JSONL output")
        ->required();
    tag_cmd->callback([&] {
      if (tag_args.pretagged.empty() && tag_args.lexicon.empty()) {
        throw CLI::RequiredError("--pretagged or --lexicon");
      }
      exit_code = run_tag(tag_args);
    });

    // analyze
    AnalyzeArgs analyze_args;
    analyze_args.top_k = cfg.top_k;
    if (!cfg.format.empty()) analyze_args.format = cfg.format;
    std::string whitelist_file;
    std::vector<std::string> markers;
    bool no_qualifier_composite = false;
    auto* analyze_cmd = app.add_subcommand(
        "analyze", "Profile a tagged corpus and bundle the results");
    analyze_cmd->fallthrough();
    analyze_cmd->add_option("--tagged", analyze_args.tagged, "Tagged JSONL input")
        ->required();
    analyze_cmd->add_option("--top-k", analyze_args.top_k,
                            "Pattern rows counted as coverage");
    analyze_cmd->add_option("--format", analyze_args.format, "json|csv|md");
    analyze_cmd->add_option("--out", analyze_args.out,
                            "Output file (default stdout)");
    auto add_classifier_flags = [&](CLI::App* cmd) {
      cmd->add_option("--whitelist-file", whitelist_file,
                      "File of entry texts forced atomic, one per line");
      cmd->add_option("--marker", markers,
                      "Extra open-class marker word (repeatable)");
      cmd->add_flag("--no-qualifier-composite", no_qualifier_composite,
                    "Do not treat parenthetical qualifiers as composites");
    };
    add_classifier_flags(analyze_cmd);
    auto finish_classifier = [&]() {
      ClassifierConfig classifier = cfg.classifier;
      if (!whitelist_file.empty()) {
        std::ifstream in = open_input(whitelist_file);
        std::string line;
        while (std::getline(in, line)) {
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (!line.empty()) classifier.compound_whitelist.insert(line);
        }
      }
      for (const std::string& marker : markers) {
        classifier.open_class_markers.insert(marker);
      }
      if (no_qualifier_composite) classifier.qualifier_as_composite = false;
      return classifier;
    };
    analyze_cmd->callback(
        [&] { exit_code = run_analyze(analyze_args, finish_classifier()); });

    // patterns
    PatternsArgs patterns_args;
    patterns_args.top_k = cfg.top_k;
    auto* patterns_cmd =
        app.add_subcommand("patterns", "Print the syntactic pattern table");
    patterns_cmd->fallthrough();
    patterns_cmd->add_option("--tagged", patterns_args.tagged,
                             "Tagged JSONL input")
        ->required();
    patterns_cmd->add_option("--top-k", patterns_args.top_k,
                             "Rows shown and counted as coverage");
    patterns_cmd->add_option("--format", patterns_args.format, "md|json");
    patterns_cmd->add_option("--out", patterns_args.out,
                             "Output file (default stdout)");
    patterns_cmd->callback([&] { exit_code = run_patterns(patterns_args); });

    // lint
    LintArgs lint_args;
    lint_args.fail_on = cfg.fail_on;
    auto* lint_cmd = app.add_subcommand(
        "lint", "Report machine-processability hazards per entry");
    lint_cmd->fallthrough();
    lint_cmd->add_option("--tagged", lint_args.tagged, "Tagged JSONL input")
        ->required();
    lint_cmd->add_option("--rules", lint_args.rules,
                         "JSON rules file (enable/severity per rule)");
    lint_cmd->add_option("--fail-on", lint_args.fail_on,
                         "Exit 1 when a finding reaches this severity")
        ->check(CLI::IsMember({"info", "warning", "error"}));
    lint_cmd->add_option("--format", lint_args.format, "text|jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    lint_cmd->add_option("--out", lint_args.out, "Output file (default stdout)");
    add_classifier_flags(lint_cmd);
    lint_cmd->callback(
        [&] { exit_code = run_lint(lint_args, finish_classifier()); });

    // compare
    CompareArgs compare_args;
    auto* compare_cmd = app.add_subcommand(
        "compare", "Render a side-by-side report from analyze bundles");
    compare_cmd->fallthrough();
    compare_cmd->add_option("inputs", compare_args.inputs,
                            "Bundle JSON files from analyze")
        ->required();
    compare_cmd->add_option("--format", compare_args.format, "md|json");
    compare_cmd->add_option("--out", compare_args.out,
                            "Output file (default stdout)");
    compare_cmd->callback([&] { exit_code = run_compare(compare_args); });

    try {
      // CLI11's vector overload consumes from the back.
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return 2;
    }
    return exit_code;
  } catch (const Error& e) {
    std::cerr << "kosana: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "kosana: error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace kosana
