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

#include "xmlkr/xml_reader.hpp"

#include <array>

namespace xmlkr::xml {

const Attribute* Element::find_attribute(std::string_view attr_name) const {
  for (const Attribute& a : attributes) {
    if (a.name == attr_name) return &a;
  }
  return nullptr;
}

bool is_all_whitespace(std::string_view text) {
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\r' && c != '\n') return false;
  }
  return true;
}

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

bool is_name_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_name_char(char c) {
  return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

class Reader {
 public:
  explicit Reader(std::string_view input) : in_(input) {
    // UTF-8 BOM
    if (in_.size() >= 3 && in_[0] == '\xEF' && in_[1] == '\xBB' &&
        in_[2] == '\xBF') {
      idx_ = 3;
    }
  }

  Element read_document() {
    read_declaration();
    skip_misc();
    if (eof()) {
      fail("expected a root element");
    }
    if (peek() != '<') {
      fail("text before the root element");
    }
    Element root = read_element();
    skip_misc();
    if (!eof()) {
      fail("content after the document root");
    }
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(ErrorCode::MalformedXml, message, line_, column_);
  }

  [[noreturn]] void fail_at(Position pos, const std::string& message) const {
    throw ParseError(ErrorCode::MalformedXml, message, pos.line, pos.column);
  }

  bool eof() const { return idx_ >= in_.size(); }
  char peek() const { return in_[idx_]; }
  bool peek_is(std::size_t offset, char c) const {
    return idx_ + offset < in_.size() && in_[idx_ + offset] == c;
  }

  Position here() const { return Position{line_, column_}; }

  char take() {
    char c = in_[idx_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void expect(char c, const char* what) {
    if (eof() || peek() != c) {
      fail(std::string("expected ") + what);
    }
    take();
  }

  void skip_ws() {
    while (!eof() && is_ws(peek())) take();
  }

  bool try_consume(std::string_view token) {
    if (in_.substr(idx_).substr(0, token.size()) != token) return false;
    for (std::size_t i = 0; i < token.size(); ++i) take();
    return true;
  }

  // Optional "<?xml ...?>" at the very start. Any other processing
  // instruction is rejected.
  void read_declaration() {
    if (idx_ + 1 >= in_.size() || in_[idx_] != '<' || in_[idx_ + 1] != '?') {
      return;
    }
    Position start = here();
    take();  // <
    take();  // ?
    std::string name = read_name("declaration name");
    if (name != "xml") {
      fail_at(start, "processing instructions are not supported");
    }
    // Attribute-style fields; only the encoding is actually checked.
    while (true) {
      skip_ws();
      if (eof()) fail("unterminated XML declaration");
      if (peek() == '?') {
        take();
        expect('>', "'>' after '?' in the XML declaration");
        return;
      }
      Position field_pos = here();
      std::string field = read_name("declaration field");
      skip_ws();
      expect('=', "'=' in the XML declaration");
      skip_ws();
      std::string value = read_quoted_value();
      if (field == "encoding") {
        std::string lowered;
        for (char c : value) {
          lowered += static_cast<char>(
              c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
        }
        if (lowered != "utf-8") {
          fail_at(field_pos, "unsupported encoding '" + value +
                                 "' (only UTF-8 is accepted)");
        }
      }
    }
  }

  // Whitespace and comments between top-level constructs.
  void skip_misc() {
    while (true) {
      skip_ws();
      if (idx_ + 3 < in_.size() && in_.substr(idx_, 4) == "<!--") {
        skip_comment();
        continue;
      }
      return;
    }
  }

  void skip_comment() {
    Position start = here();
    try_consume("<!--");
    while (!eof()) {
      if (try_consume("-->")) return;
      take();
    }
    fail_at(start, "unterminated comment");
  }

  std::string read_name(const char* what) {
    if (eof() || !is_name_start(peek())) {
      fail(std::string("expected ") + what);
    }
    std::string name;
    name += take();
    while (!eof() && is_name_char(peek())) name += take();
    return name;
  }

  // "&amp;" "&lt;" "&gt;" "&quot;" "&apos;" — nothing else, including
  // numeric references.
  char read_entity() {
    Position start = here();
    take();  // &
    std::string body;
    while (!eof() && peek() != ';' && body.size() <= 5) {
      body += take();
    }
    if (eof() || peek() != ';') {
      fail_at(start, "unterminated entity reference");
    }
    take();  // ;
    if (body == "amp") return '&';
    if (body == "lt") return '<';
    if (body == "gt") return '>';
    if (body == "quot") return '"';
    if (body == "apos") return '\'';
    fail_at(start, "unknown entity '&" + body + ";'");
  }

  std::string read_quoted_value() {
    if (eof() || (peek() != '"' && peek() != '\'')) {
      fail("expected a quoted attribute value");
    }
    Position start = here();
    char quote = take();
    std::string value;
    while (true) {
      if (eof()) fail_at(start, "unterminated attribute value");
      char c = peek();
      if (c == quote) {
        take();
        return value;
      }
      if (c == '<') fail("raw '<' inside an attribute value");
      if (c == '&') {
        value += read_entity();
      } else {
        value += take();
      }
    }
  }

  Element read_element() {
    Element element;
    element.pos = here();
    take();  // <
    if (eof()) fail("unterminated tag");
    if (peek() == '!') {
      if (in_.substr(idx_ - 1).substr(0, 4) == "<!--") {
        fail_at(element.pos, "internal error: comment not skipped");
      }
      fail_at(element.pos, "doctype and CDATA sections are not supported");
    }
    if (peek() == '?') {
      fail_at(element.pos, "processing instructions are not supported");
    }
    if (peek() == '/') {
      fail_at(element.pos, "unexpected closing tag");
    }
    element.name = read_name("an element name");

    // attributes
    while (true) {
      bool had_ws = !eof() && is_ws(peek());
      skip_ws();
      if (eof()) fail("unterminated tag");
      if (peek() == '>') {
        take();
        break;
      }
      if (peek() == '/') {
        take();
        expect('>', "'>' after '/'");
        return element;  // self-closing
      }
      if (!had_ws) {
        fail("expected whitespace before attribute");
      }
      Position attr_pos = here();
      Attribute attribute;
      attribute.pos = attr_pos;
      attribute.name = read_name("an attribute name");
      skip_ws();
      expect('=', "'=' after attribute name");
      skip_ws();
      attribute.value = read_quoted_value();
      if (element.find_attribute(attribute.name)) {
        fail_at(attr_pos,
                "duplicate attribute '" + attribute.name + "' on element '" +
                    element.name + "'");
      }
      element.attributes.push_back(std::move(attribute));
    }

    // content
    while (true) {
      if (eof()) {
        fail_at(element.pos,
                "element '" + element.name + "' is never closed");
      }
      if (peek() == '<') {
        if (peek_is(1, '/')) {
          Position close_pos = here();
          take();  // <
          take();  // /
          std::string close_name = read_name("a closing tag name");
          skip_ws();
          expect('>', "'>' in closing tag");
          if (close_name != element.name) {
            fail_at(close_pos, "closing tag '</" + close_name +
                                   ">' does not match '<" + element.name +
                                   ">'");
          }
          return element;
        }
        if (idx_ + 3 < in_.size() && in_.substr(idx_, 4) == "<!--") {
          skip_comment();
          continue;
        }
        element.children.push_back(Node{read_element()});
        continue;
      }
      Text text;
      text.pos = here();
      while (!eof() && peek() != '<') {
        if (peek() == '&') {
          text.content += read_entity();
        } else {
          text.content += take();
        }
      }
      element.children.push_back(Node{std::move(text)});
    }
  }

  std::string_view in_;
  std::size_t idx_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

Element read_document(std::string_view bytes) {
  return Reader(bytes).read_document();
}

}  // namespace xmlkr::xml
