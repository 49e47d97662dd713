// Copyright 2026 the xmlkr authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace xmlkr {

enum class ErrorCode {
  MalformedXml,
  UnknownRootVersion,
  DuplicateObject,
  DuplicateAttribute,
  InvalidName,
  InvalidAttribute,
  InvalidLabel,
  UnknownObject,
  UnknownSource,
  QuerySyntax,
  Io,
};

/// Stable lowercase identifier for an error code ("duplicate-object", ...).
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail);

  ErrorCode code() const noexcept { return code_; }

  /// Message without the code prefix that what() carries.
  const std::string& detail() const noexcept { return detail_; }

 protected:
  Error(ErrorCode code, std::string detail, const std::string& what_text);

 private:
  ErrorCode code_;
  std::string detail_;
};

/// Document reading failure. Carries the 1-based line and column of the
/// offending construct.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::string detail, int line, int column);

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Query text rejection: 1-based column plus the tokens that were legal
/// at that point.
class QueryError : public Error {
 public:
  QueryError(std::string detail, std::size_t column,
             std::vector<std::string> expected);

  std::size_t column() const noexcept { return column_; }
  const std::vector<std::string>& expected() const noexcept {
    return expected_;
  }

 private:
  std::size_t column_;
  std::vector<std::string> expected_;
};

}  // namespace xmlkr
