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

#include "kosana/tagger.h"

#include <fstream>

#include "kosana/errors.h"

namespace kosana {

namespace {

void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

/// Assigns spans under the vertical-format spacing rule and returns the
/// reconstructed entry text.
std::string layout_tokens(std::vector<Token>& tokens) {
  std::string text;
  std::size_t cp = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& token = tokens[i];
    const bool joined = token.tag == FineTag::kPunctClose ||
                        token.tag == FineTag::kPunctOther ||
                        (i > 0 && tokens[i - 1].tag == FineTag::kPunctOpen);
    if (i > 0 && !joined) {
      text.push_back(' ');
      ++cp;
    }
    token.begin = cp;
    cp += utf8::length(token.surface);
    token.end = cp;
    text += token.surface;
  }
  return text;
}

}  // namespace

Lexicon Lexicon::load(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw MissingTab(line_no);
    std::string surface = line.substr(0, tab);
    const std::string tag_name = line.substr(tab + 1);
    const auto tag = parse_fine_tag(tag_name);
    if (!tag) throw UnknownTag(line_no, tag_name);
    if (!lexicon.map_.emplace(std::move(surface), *tag).second) {
      throw DuplicateSurface(line_no, line.substr(0, tab));
    }
  }
  return lexicon;
}

void Lexicon::add(std::string surface, FineTag tag) {
  if (map_.count(surface) != 0) throw DuplicateSurface(0, surface);
  map_.emplace(std::move(surface), tag);
}

std::optional<FineTag> Lexicon::lookup(std::string_view surface) const {
  const auto it = map_.find(std::string(surface));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file: " + path);
  return Lexicon::load(in);
}

uni::Script script_for_language(std::string_view language_tag) {
  if (language_tag == "el" || language_tag == "grc" ||
      language_tag.substr(0, 3) == "el-") {
    return uni::Script::kGreek;
  }
  return uni::Script::kLatin;
}

TaggedEntry tag_with_lexicon(const Entry& entry,
                             const std::vector<RawToken>& tokens,
                             const Lexicon& lexicon,
                             uni::Script primary_script) {
  // The first word of an entry is conventionally capitalized, so its case
  // carries no proper-noun signal.
  std::size_t first_word = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].hint == TokenHint::kWord) {
      first_word = i;
      break;
    }
  }

  TaggedEntry tagged;
  tagged.entry = entry;
  tagged.tokens.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const RawToken& raw = tokens[i];
    FineTag tag;
    switch (raw.hint) {
      case TokenHint::kPunctOpen:
        tag = FineTag::kPunctOpen;
        break;
      case TokenHint::kPunctClose:
        tag = FineTag::kPunctClose;
        break;
      case TokenHint::kPunctOther:
        tag = FineTag::kPunctOther;
        break;
      case TokenHint::kDigits:
        tag = FineTag::kDig;
        break;
      case TokenHint::kWord:
      default: {
        if (const auto hit = lexicon.lookup(raw.surface)) {
          tag = *hit;
          break;
        }
        const std::vector<char32_t> cps = utf8::decode(raw.surface);
        std::size_t letters = 0;
        std::size_t upper = 0;
        bool foreign = false;
        for (char32_t cp : cps) {
          if (!uni::is_letter(cp)) continue;
          ++letters;
          if (uni::is_upper(cp)) ++upper;
          if (uni::script_of(cp) != primary_script) foreign = true;
        }
        if (letters > 0 && letters == upper && cps.size() >= 2) {
          tag = FineTag::kAbbr;
        } else if (!cps.empty() && uni::is_upper(cps.front()) &&
                   i != first_word) {
          tag = FineTag::kNoPr;
        } else if (foreign) {
          tag = FineTag::kRgf;
        } else {
          tag = FineTag::kNoCm;
        }
        break;
      }
    }
    tagged.tokens.push_back({raw.surface, tag, raw.begin, raw.end});
  }
  return tagged;
}

TaggedEntry tag_entry(const Entry& entry, const Lexicon& lexicon,
                      uni::Script primary_script) {
  return tag_with_lexicon(entry, tokenize(entry.text), lexicon,
                          primary_script);
}

TaggedCorpus tag_corpus(const Corpus& corpus, const Lexicon& lexicon,
                        std::optional<uni::Script> script_override) {
  const uni::Script script =
      script_override.value_or(script_for_language(corpus.language));
  TaggedCorpus tagged;
  tagged.name = corpus.name;
  tagged.scheme = corpus.scheme;
  tagged.language = corpus.language;
  tagged.entries.reserve(corpus.entries.size());
  for (const Entry& entry : corpus.entries) {
    tagged.entries.push_back(tag_entry(entry, lexicon, script));
  }
  return tagged;
}

std::vector<TaggedEntry> import_pretagged(std::istream& in) {
  std::vector<TaggedEntry> out;
  std::vector<Token> current;

  const auto flush = [&] {
    if (current.empty()) return;
    TaggedEntry entry;
    entry.tokens = std::move(current);
    entry.entry.text = layout_tokens(entry.tokens);
    out.push_back(std::move(entry));
    current.clear();
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    chomp(line);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) throw MissingTab(line_no);
    const std::string tag_name = line.substr(tab + 1);
    const auto tag = parse_fine_tag(tag_name);
    if (!tag) throw UnknownTag(line_no, tag_name);
    current.push_back({line.substr(0, tab), *tag, 0, 0});
  }
  flush();
  if (out.empty()) throw EmptyFile("pre-tagged input");
  return out;
}

void export_pretagged(const std::vector<TaggedEntry>& entries,
                      std::ostream& out) {
  for (const TaggedEntry& entry : entries) {
    for (const Token& token : entry.tokens) {
      out << token.surface << '\t' << fine_tag_name(token.tag) << '\n';
    }
    out << '\n';
  }
}

std::string reconstruct_text(const std::vector<Token>& tokens) {
  std::vector<Token> copy = tokens;
  return layout_tokens(copy);
}

TaggedCorpus align_pretagged(const Corpus& corpus,
                             std::vector<TaggedEntry> tagged) {
  if (corpus.entries.size() != tagged.size()) {
    throw CountMismatch(corpus.entries.size(), tagged.size());
  }
  TaggedCorpus out;
  out.name = corpus.name;
  out.scheme = corpus.scheme;
  out.language = corpus.language;
  out.entries.reserve(tagged.size());
  for (std::size_t i = 0; i < tagged.size(); ++i) {
    if (tagged[i].entry.text != corpus.entries[i].text) {
      throw TextMismatch(i, corpus.entries[i].text, tagged[i].entry.text);
    }
    TaggedEntry entry;
    entry.entry = corpus.entries[i];
    entry.tokens = std::move(tagged[i].tokens);
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace kosana
