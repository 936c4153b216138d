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

#ifndef KOSANA_UNICODE_NORM_H_
#define KOSANA_UNICODE_NORM_H_

#include <string>
#include <string_view>

namespace kosana {

/// Unicode canonical composition (NFC) of a UTF-8 string.
std::string nfc(std::string_view text);

}  // namespace kosana

#endif  // KOSANA_UNICODE_NORM_H_
