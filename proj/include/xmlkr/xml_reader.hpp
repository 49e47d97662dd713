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

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "xmlkr/errors.hpp"

namespace xmlkr::xml {

// Self-contained reader for the XML subset the document format needs:
// elements, attributes, character data, comments, and an optional leading
// XML declaration. No DTD, no namespaces, no CDATA, no processing
// instructions. Every rejection throws ParseError with the line/column of
// the offending construct.

struct Position {
  int line = 1;
  int column = 1;
};

struct Attribute {
  std::string name;
  std::string value;  // entity-decoded
  Position pos;
};

struct Node;

struct Element {
  std::string name;
  std::vector<Attribute> attributes;
  std::vector<Node> children;  // elements and text; comments are dropped
  Position pos;                // position of the opening '<'

  const Attribute* find_attribute(std::string_view attr_name) const;
};

struct Text {
  std::string content;  // entity-decoded, whitespace preserved
  Position pos;
};

struct Node {
  std::variant<Element, Text> value;

  bool is_element() const { return std::holds_alternative<Element>(value); }
  const Element& element() const { return std::get<Element>(value); }
  const Text& text() const { return std::get<Text>(value); }
};

/// Parses a complete document and returns its single root element.
/// Input must be UTF-8; a leading BOM is tolerated.
Element read_document(std::string_view bytes);

/// True when the string is all XML whitespace (space, tab, CR, LF).
bool is_all_whitespace(std::string_view text);

}  // namespace xmlkr::xml
