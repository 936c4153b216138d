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

#include "kosana/tags.h"

namespace kosana {

namespace {
constexpr std::string_view kTagNames[kFineTagCount] = {
    "NoCm", "NoPr", "Abbr", "AjBa", "AjCp", "AjSp", "Vb",
    "Cj",   "AsPp", "PtNg", "Ad",   "At",   "PnDm", "PnPe",
    "PnRi", "PnPo", "Rgf",  "Dig",  "PunctOpen", "PunctClose", "PunctOther"};
}

std::string_view fine_tag_name(FineTag tag) {
  return kTagNames[static_cast<int>(tag)];
}

std::optional<FineTag> parse_fine_tag(std::string_view name) {
  for (int i = 0; i < kFineTagCount; ++i) {
    if (kTagNames[i] == name) return static_cast<FineTag>(i);
  }
  return std::nullopt;
}

}  // namespace kosana
