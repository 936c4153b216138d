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

#include "kosana/tokenize.h"

#include "kosana/utf8.h"

namespace kosana {

namespace {

constexpr char32_t kLeftGuillemet = 0xAB;
constexpr char32_t kRightGuillemet = 0xBB;
constexpr char32_t kEmDash = 0x2014;

bool is_open_punct(char32_t cp) {
  return cp == U'(' || cp == U'[' || cp == U'{' || cp == kLeftGuillemet;
}

bool is_close_punct(char32_t cp) {
  return cp == U')' || cp == U']' || cp == U'}' || cp == kRightGuillemet;
}

bool is_other_punct(char32_t cp) {
  return cp == U',' || cp == U'.' || cp == U';' || cp == U':' ||
         cp == U'\'' || cp == U'"' || cp == U'/' || cp == kEmDash ||
         cp == U'-';
}

// Marks that stay inside a word when flanked by word characters.
bool is_joining_mark(char32_t cp) { return cp == U'-' || cp == U'\''; }

bool is_punct(char32_t cp) {
  return is_open_punct(cp) || is_close_punct(cp) || is_other_punct(cp);
}

bool is_word_char(char32_t cp) {
  return !uni::is_ascii_space(cp) && !uni::is_ascii_digit(cp) && !is_punct(cp);
}

}  // namespace

std::vector<RawToken> tokenize(std::string_view text) {
  const std::vector<char32_t> cps = utf8::decode(text);
  std::vector<RawToken> tokens;

  auto emit = [&](std::size_t begin, std::size_t end, TokenHint hint) {
    std::string surface;
    for (std::size_t i = begin; i < end; ++i) utf8::append(cps[i], surface);
    tokens.push_back({std::move(surface), hint, begin, end});
  };

  // True when the mark at `pos` sits between two word characters of the
  // same whitespace-delimited chunk.
  auto mark_is_attached = [&](std::size_t pos) {
    return pos > 0 && pos + 1 < cps.size() && is_word_char(cps[pos - 1]) &&
           is_word_char(cps[pos + 1]);
  };

  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t cp = cps[i];
    if (uni::is_ascii_space(cp)) {
      ++i;
      continue;
    }
    if (is_joining_mark(cp) && !mark_is_attached(i)) {
      emit(i, i + 1, TokenHint::kPunctOther);
      ++i;
      continue;
    }
    if (is_open_punct(cp)) {
      emit(i, i + 1, TokenHint::kPunctOpen);
      ++i;
      continue;
    }
    if (is_close_punct(cp)) {
      emit(i, i + 1, TokenHint::kPunctClose);
      ++i;
      continue;
    }
    if (is_other_punct(cp) && !is_joining_mark(cp)) {
      emit(i, i + 1, TokenHint::kPunctOther);
      ++i;
      continue;
    }
    if (uni::is_ascii_digit(cp)) {
      std::size_t start = i;
      while (i < cps.size() && uni::is_ascii_digit(cps[i])) ++i;
      emit(start, i, TokenHint::kDigits);
      continue;
    }
    // Word run, keeping attached hyphens/apostrophes.
    std::size_t start = i;
    while (i < cps.size() &&
           (is_word_char(cps[i]) ||
            (is_joining_mark(cps[i]) && mark_is_attached(i)))) {
      ++i;
    }
    emit(start, i, TokenHint::kWord);
  }
  return tokens;
}

}  // namespace kosana
