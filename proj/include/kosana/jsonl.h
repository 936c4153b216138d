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

#ifndef KOSANA_JSONL_H_
#define KOSANA_JSONL_H_

#include <istream>
#include <ostream>
#include <vector>

#include "kosana/lint.h"
#include "kosana/normalize.h"
#include "kosana/tags.h"

namespace kosana {

// JSON Lines persistence between pipeline stages. The first line is a
// header object carrying name/scheme metadata; each following line is one
// entry. Writers emit keys in sorted order so identical inputs produce
// byte-identical files.

void save_corpus(const Corpus& corpus, std::ostream& out);
Corpus load_corpus(std::istream& in);

/// Tagged entries persist as `text` plus `tokens` as [surface, tag] pairs;
/// spans are rebuilt from the text on load.
void save_tagged(const TaggedCorpus& corpus, std::ostream& out);
TaggedCorpus load_tagged(std::istream& in);

void save_findings(const std::vector<Finding>& findings, std::ostream& out);

/// Human-readable form: `LOCATOR: SEVERITY RULE_ID message [evidence]`.
std::string findings_text(const std::vector<Finding>& findings);

}  // namespace kosana

#endif  // KOSANA_JSONL_H_
