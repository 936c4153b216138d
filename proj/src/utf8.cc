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

#include "kosana/utf8.h"

namespace kosana::utf8 {

namespace {
constexpr char32_t kReplacement = 0xFFFD;
}

void append(char32_t cp, std::string& out) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::vector<char32_t> decode(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char b0 = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    char32_t cp = 0;
    if (b0 < 0x80) {
      len = 1;
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    if (i + len > text.size()) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    bool ok = true;
    for (std::size_t k = 1; k < len; ++k) {
      const unsigned char b = static_cast<unsigned char>(text[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
        break;
      }
      cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms and surrogate code points.
    if (ok && ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
               (len == 4 && cp < 0x10000) || (cp >= 0xD800 && cp <= 0xDFFF) ||
               cp > 0x10FFFF)) {
      ok = false;
    }
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
      continue;
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(cp, out);
  return out;
}

std::size_t length(std::string_view text) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if ((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) ++n;
  }
  return n;
}

}  // namespace kosana::utf8

namespace kosana::uni {

namespace {

bool in(char32_t cp, char32_t lo, char32_t hi) { return cp >= lo && cp <= hi; }

// Non-letter code points inside the Greek and Coptic block.
bool greek_block_nonletter(char32_t cp) {
  return cp == 0x374 || cp == 0x375 || cp == 0x37E || cp == 0x384 ||
         cp == 0x385 || cp == 0x387;
}

// Spacing diacritics scattered through the polytonic extension block.
bool greek_ext_nonletter(char32_t cp) {
  return cp == 0x1FBD || in(cp, 0x1FBF, 0x1FC1) || in(cp, 0x1FCD, 0x1FCF) ||
         in(cp, 0x1FDD, 0x1FDF) || in(cp, 0x1FED, 0x1FEF) ||
         in(cp, 0x1FFD, 0x1FFE);
}

}  // namespace

bool is_upper(char32_t cp) {
  if (in(cp, U'A', U'Z')) return true;
  if ((in(cp, 0xC0, 0xD6) || in(cp, 0xD8, 0xDE))) return true;  // Latin-1
  if (in(cp, 0x100, 0x17F)) return (cp % 2) == 0 && cp != 0x131;
  // Monotonic Greek.
  if (cp == 0x386 || in(cp, 0x388, 0x38A) || cp == 0x38C ||
      in(cp, 0x38E, 0x38F) || in(cp, 0x391, 0x3A1) || in(cp, 0x3A3, 0x3AB)) {
    return true;
  }
  // Polytonic Greek: the upper-case forms sit in the high half of each
  // 16-code-point row, except the row of plain accented vowels.
  if (in(cp, 0x1F00, 0x1FFF) && !greek_ext_nonletter(cp)) {
    if (in(cp, 0x1F70, 0x1F7D)) return false;
    return (cp & 0x8) != 0;
  }
  if (in(cp, 0x400, 0x42F)) return true;  // Cyrillic
  return false;
}

bool is_lower(char32_t cp) {
  if (in(cp, U'a', U'z')) return true;
  if ((in(cp, 0xDF, 0xF6) || in(cp, 0xF8, 0xFF))) return true;
  if (in(cp, 0x100, 0x17F)) return (cp % 2) == 1 || cp == 0x131;
  if (cp == 0x390 || cp == 0x3B0 || in(cp, 0x3AC, 0x3CE)) return true;
  if (in(cp, 0x1F00, 0x1FFF) && !greek_ext_nonletter(cp)) {
    if (in(cp, 0x1F70, 0x1F7D)) return true;
    return (cp & 0x8) == 0;
  }
  if (in(cp, 0x430, 0x45F)) return true;
  return false;
}

bool is_letter(char32_t cp) {
  if (is_upper(cp) || is_lower(cp)) return true;
  if (in(cp, 0x370, 0x3FF)) return !greek_block_nonletter(cp);
  if (in(cp, 0x400, 0x4FF)) return true;
  return false;
}

Script script_of(char32_t cp) {
  if (in(cp, U'A', U'Z') || in(cp, U'a', U'z')) return Script::kLatin;
  if (in(cp, 0xC0, 0xFF) && cp != 0xD7 && cp != 0xF7) return Script::kLatin;
  if (in(cp, 0x100, 0x24F)) return Script::kLatin;
  if (in(cp, 0x370, 0x3FF) && !greek_block_nonletter(cp)) return Script::kGreek;
  if (in(cp, 0x1F00, 0x1FFF) && !greek_ext_nonletter(cp)) return Script::kGreek;
  if (in(cp, 0x400, 0x4FF)) return Script::kCyrillic;
  return Script::kOther;
}

}  // namespace kosana::uni
