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

#ifndef KOSANA_UTF8_H_
#define KOSANA_UTF8_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace kosana::utf8 {

/// Appends the UTF-8 encoding of one code point.
void append(char32_t cp, std::string& out);

/// Decodes UTF-8 into code points. Invalid byte sequences decode to U+FFFD,
/// one replacement per offending byte.
std::vector<char32_t> decode(std::string_view text);

std::string encode(const std::vector<char32_t>& cps);

/// Number of code points in the string.
std::size_t length(std::string_view text);

}  // namespace kosana::utf8

namespace kosana::uni {

enum class Script { kLatin, kGreek, kCyrillic, kOther };

// Case and letter classification for the scripts this toolkit targets:
// basic Latin, Latin-1 and Latin Extended-A, monotonic Greek (with an
// approximate handling of the polytonic extension block), and Cyrillic.
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
bool is_letter(char32_t cp);
Script script_of(char32_t cp);

inline bool is_ascii_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == U'\f' || cp == U'\v';
}

inline bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

}  // namespace kosana::uni

#endif  // KOSANA_UTF8_H_
