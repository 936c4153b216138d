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

#ifndef KOSANA_TOKENIZE_H_
#define KOSANA_TOKENIZE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kosana {

enum class TokenHint {
  kWord,
  kDigits,
  kPunctOpen,
  kPunctClose,
  kPunctOther,
};

struct RawToken {
  std::string surface;
  TokenHint hint = TokenHint::kWord;
  std::size_t begin = 0;  // code point offsets, end exclusive
  std::size_t end = 0;

  friend bool operator==(const RawToken&, const RawToken&) = default;
};

/// Splits normalized text into tokens. Whitespace separates tokens;
/// punctuation detaches as single-character tokens classed open ( [ { «,
/// close ) ] } », or other , . ; : ' " / em-dash hyphen. Hyphens and
/// apostrophes stay attached between two word characters ("well-known",
/// "O'Neill") and detach at word edges ("1866-"). A maximal digit run is
/// one token; every other maximal run is a word token. Total and
/// deterministic; no character is lost except inter-token whitespace.
std::vector<RawToken> tokenize(std::string_view text);

}  // namespace kosana

#endif  // KOSANA_TOKENIZE_H_
