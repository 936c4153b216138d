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

#ifndef KOSANA_ERRORS_H_
#define KOSANA_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kosana {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedTriple : public Error {
 public:
  explicit MalformedTriple(std::size_t line, const std::string& detail = "")
      : Error("malformed triple at line " + std::to_string(line) +
              (detail.empty() ? "" : ": " + detail)),
        line(line) {}
  std::size_t line;
};

class MalformedXml : public Error {
 public:
  explicit MalformedXml(std::size_t line, const std::string& detail = "")
      : Error("malformed xml at line " + std::to_string(line) +
              (detail.empty() ? "" : ": " + detail)),
        line(line) {}
  std::size_t line;
};

class MalformedCsv : public Error {
 public:
  explicit MalformedCsv(std::size_t row, const std::string& detail = "")
      : Error("malformed csv row " + std::to_string(row) +
              (detail.empty() ? "" : ": " + detail)),
        row(row) {}
  std::size_t row;
};

class EmptyCaption : public Error {
 public:
  explicit EmptyCaption(std::size_t row)
      : Error("empty caption at csv row " + std::to_string(row)), row(row) {}
  std::size_t row;
};

class UnknownKind : public Error {
 public:
  UnknownKind(std::size_t row, const std::string& kind)
      : Error("unknown kind \"" + kind + "\" at row " + std::to_string(row)),
        row(row),
        kind(kind) {}
  std::size_t row;
  std::string kind;
};

class MalformedRow : public Error {
 public:
  explicit MalformedRow(std::size_t row, const std::string& detail = "")
      : Error("malformed row " + std::to_string(row) +
              (detail.empty() ? "" : ": " + detail)),
        row(row) {}
  std::size_t row;
};

class MixedSchemes : public Error {
 public:
  MixedSchemes(const std::string& first, const std::string& second)
      : Error("entries mix schemes \"" + first + "\" and \"" + second + "\"") {}
};

class UnknownTag : public Error {
 public:
  UnknownTag(std::size_t line, const std::string& tag)
      : Error("unknown tag \"" + tag + "\" at line " + std::to_string(line)),
        line(line),
        tag(tag) {}
  std::size_t line;
  std::string tag;
};

class MissingTab : public Error {
 public:
  explicit MissingTab(std::size_t line)
      : Error("missing tab separator at line " + std::to_string(line)),
        line(line) {}
  std::size_t line;
};

class EmptyFile : public Error {
 public:
  explicit EmptyFile(const std::string& what = "input")
      : Error(what + " contains no entries") {}
};

class DuplicateSurface : public Error {
 public:
  DuplicateSurface(std::size_t line, const std::string& surface)
      : Error("duplicate surface form \"" + surface + "\" at line " +
              std::to_string(line)),
        line(line) {}
  std::size_t line;
};

class CountMismatch : public Error {
 public:
  CountMismatch(std::size_t expected, std::size_t found)
      : Error("entry count mismatch: expected " + std::to_string(expected) +
              ", found " + std::to_string(found)),
        expected(expected),
        found(found) {}
  std::size_t expected;
  std::size_t found;
};

class TextMismatch : public Error {
 public:
  TextMismatch(std::size_t index, const std::string& expected,
               const std::string& found)
      : Error("entry " + std::to_string(index) + " text mismatch: expected \"" +
              expected + "\", found \"" + found + "\""),
        index(index),
        expected(expected),
        found(found) {}
  std::size_t index;
  std::string expected;
  std::string found;
};

class EmptyCorpus : public Error {
 public:
  EmptyCorpus() : Error("corpus has no entries") {}
};

class TooFewCorpora : public Error {
 public:
  explicit TooFewCorpora(std::size_t count)
      : Error("comparison needs at least 2 corpora, got " +
              std::to_string(count)),
        count(count) {}
  std::size_t count;
};

class UnknownRule : public Error {
 public:
  explicit UnknownRule(const std::string& rule_id)
      : Error("unknown rule id \"" + rule_id + "\""), rule_id(rule_id) {}
  std::string rule_id;
};

}  // namespace kosana

#endif  // KOSANA_ERRORS_H_
