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

#ifndef KOSANA_STATS_H_
#define KOSANA_STATS_H_

#include <cstdint>
#include <string>

namespace kosana::stats {

// All derived statistics are kept as exact integer ratios and rendered only
// at the formatting edge, rounding half away from zero.

/// Decimal string of num/den with `decimals` fraction digits.
/// A zero denominator renders as zero.
std::string format_fixed(std::int64_t num, std::int64_t den, int decimals = 2);

/// Share of num in den as a percentage string, e.g. "56.04%".
std::string format_pct(std::int64_t num, std::int64_t den);

}  // namespace kosana::stats

#endif  // KOSANA_STATS_H_
