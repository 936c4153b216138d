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

#ifndef KOSANA_CLI_H_
#define KOSANA_CLI_H_

#include <string>
#include <vector>

namespace kosana {

/// Runs the command-line front end. Exit codes: 0 on success, 1 when lint
/// findings meet the --fail-on threshold, 2 on usage or parse errors.
int run_cli(int argc, const char* const* argv);
int run_cli(const std::vector<std::string>& args);

}  // namespace kosana

#endif  // KOSANA_CLI_H_
