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

#include "kosana/stats.h"

#include <cassert>

namespace kosana::stats {

std::string format_fixed(std::int64_t num, std::int64_t den, int decimals) {
  assert(decimals >= 0 && decimals <= 9);
  std::int64_t scale = 1;
  for (int i = 0; i < decimals; ++i) scale *= 10;

  std::int64_t scaled = 0;
  if (den != 0) {
    const bool negative = (num < 0) != (den < 0);
    const std::int64_t n = num < 0 ? -num : num;
    const std::int64_t d = den < 0 ? -den : den;
    // Round half away from zero: floor((2*n*scale + d) / (2*d)) in magnitude.
    scaled = (2 * n * scale + d) / (2 * d);
    if (negative) scaled = -scaled;
  }

  const bool negative = scaled < 0;
  std::int64_t magnitude = negative ? -scaled : scaled;
  std::string digits = std::to_string(magnitude);
  if (static_cast<int>(digits.size()) <= decimals) {
    digits.insert(0, decimals + 1 - digits.size(), '0');
  }
  std::string out;
  if (negative) out.push_back('-');
  out.append(digits, 0, digits.size() - decimals);
  if (decimals > 0) {
    out.push_back('.');
    out.append(digits, digits.size() - decimals, decimals);
  }
  return out;
}

std::string format_pct(std::int64_t num, std::int64_t den) {
  return format_fixed(num * 100, den, 2) + "%";
}

}  // namespace kosana::stats
