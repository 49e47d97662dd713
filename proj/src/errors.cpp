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

#include "xmlkr/errors.hpp"

namespace xmlkr {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedXml: return "malformed-xml";
    case ErrorCode::UnknownRootVersion: return "unknown-root-version";
    case ErrorCode::DuplicateObject: return "duplicate-object";
    case ErrorCode::DuplicateAttribute: return "duplicate-attribute";
    case ErrorCode::InvalidName: return "invalid-name";
    case ErrorCode::InvalidAttribute: return "invalid-attribute";
    case ErrorCode::InvalidLabel: return "invalid-label";
    case ErrorCode::UnknownObject: return "unknown-object";
    case ErrorCode::UnknownSource: return "unknown-source";
    case ErrorCode::QuerySyntax: return "query-syntax";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& detail) {
  return std::string(error_code_name(code)) + ": " + detail;
}

std::string compose_at(ErrorCode code, const std::string& detail, int line,
                       int column) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " +
         compose(code, detail);
}

}  // namespace

Error::Error(ErrorCode code, std::string detail)
    : std::runtime_error(compose(code, detail)),
      code_(code),
      detail_(std::move(detail)) {}

Error::Error(ErrorCode code, std::string detail, const std::string& what_text)
    : std::runtime_error(what_text), code_(code), detail_(std::move(detail)) {}

ParseError::ParseError(ErrorCode code, std::string detail, int line,
                       int column)
    : Error(code, detail, compose_at(code, detail, line, column)),
      line_(line),
      column_(column) {}

QueryError::QueryError(std::string detail, std::size_t column,
                       std::vector<std::string> expected)
    : Error(ErrorCode::QuerySyntax, detail,
            "query-syntax: column " + std::to_string(column) + ": " + detail),
      column_(column),
      expected_(std::move(expected)) {}

}  // namespace xmlkr
