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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xmlkr/knowledge_base.hpp"

namespace xmlkr {

// Query language over a knowledge base:
//
//   attr <object>.<attr>[.<attr>…]     inherited attribute lookup
//   ancestors <object>                 isa/ako closure with distances
//   instances <class> [transitive]     objects that are instances of a class
//   find <attr>[.<attr>…]=<value>      objects whose resolved attribute
//                                      equals a scalar (value may be quoted)
//   related <object> [kind=<label>]    relation targets, optionally filtered
//
// Names and bare values are tokens without whitespace, '.', '=', or '"'.

struct QueryExpr {
  enum class Form { Attr, Ancestors, Instances, Find, Related };

  Form form = Form::Attr;
  ObjectName object;                    // Attr, Ancestors, Instances, Related
  std::vector<std::string> path;        // Attr, Find
  std::string expected;                 // Find
  bool transitive = false;              // Instances
  std::optional<RelationKind> relation; // Related filter

  bool operator==(const QueryExpr&) const = default;
};

/// Parses query text. Throws QueryError carrying the 1-based column and the
/// token set that was acceptable there. Never loops: input of any content
/// either parses or is rejected.
QueryExpr parse_query(std::string_view text);

/// Canonical text for an expression; parse_query(render_query(q)) == q for
/// expressions whose names are single tokens.
std::string render_query(const QueryExpr& expr);

struct ResultRow {
  ObjectName object;
  std::optional<AttributeTree> value;  // resolved subtree, when meaningful
  std::optional<ObjectName> provider;
  std::optional<int> distance;
};

struct QueryResult {
  std::vector<ResultRow> rows;
};

/// Runs a query. Attr yields at most one row; Find scans every defined
/// object and keeps those whose resolved scalar matches; zero rows is a
/// normal outcome, never an error. Throws Error(UnknownObject) when the
/// expression names a missing object.
QueryResult execute(const KnowledgeBase& kb, const QueryExpr& expr);

/// One row per line: object, scalar value, provider, distance —
/// tab-separated, '-' for empty fields.
std::string render_rows(const QueryResult& result);

}  // namespace xmlkr
