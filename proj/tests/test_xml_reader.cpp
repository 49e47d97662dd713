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

#include <doctest.h>

#include "xmlkr/xml_reader.hpp"

using namespace xmlkr;
using xmlkr::xml::read_document;

namespace {

// Line/column of the ParseError thrown for `input`.
std::pair<int, int> error_position(std::string_view input) {
  try {
    read_document(input);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  FAIL("expected a parse error");
  return {0, 0};
}

}  // namespace

TEST_CASE("reads a minimal element") {
  auto root = read_document("<a/>");
  CHECK(root.name == "a");
  CHECK(root.attributes.empty());
  CHECK(root.children.empty());
}

TEST_CASE("reads attributes with both quote styles") {
  auto root = read_document(R"(<a x="1" y='two'/>)");
  REQUIRE(root.attributes.size() == 2);
  CHECK(root.attributes[0].name == "x");
  CHECK(root.attributes[0].value == "1");
  CHECK(root.attributes[1].value == "two");
}

TEST_CASE("reads nested elements and text") {
  auto root = read_document("<a><b>hello</b><c/></a>");
  REQUIRE(root.children.size() == 2);
  const auto& b = root.children[0].element();
  CHECK(b.name == "b");
  REQUIRE(b.children.size() == 1);
  CHECK(b.children[0].text().content == "hello");
  CHECK(root.children[1].element().name == "c");
}

TEST_CASE("decodes the five predefined entities") {
  auto root = read_document(
      R"(<a v="&amp;&lt;&gt;&quot;&apos;">&lt;x&gt; &amp; y</a>)");
  CHECK(root.attributes[0].value == "&<>\"'");
  CHECK(root.children[0].text().content == "<x> & y");
}

TEST_CASE("skips comments and the xml declaration") {
  auto root = read_document(
      "<?xml version=\"1.0\" encoding=\"utf-8\"?>\n"
      "<!-- leading -->\n<a><!-- inner --><b/></a>\n<!-- trailing -->");
  CHECK(root.name == "a");
  REQUIRE(root.children.size() == 1);  // comment dropped
  CHECK(root.children[0].element().name == "b");
}

TEST_CASE("tolerates a UTF-8 BOM") {
  auto root = read_document("\xEF\xBB\xBF<a/>");
  CHECK(root.name == "a");
}

TEST_CASE("tracks positions of elements") {
  auto root = read_document("<a>\n  <b/>\n</a>");
  CHECK(root.pos.line == 1);
  CHECK(root.pos.column == 1);
  const auto& b = root.children[1].element();
  CHECK(b.pos.line == 2);
  CHECK(b.pos.column == 3);
}

TEST_CASE("rejects malformed input with positions") {
  CHECK(error_position("") == std::pair{1, 1});
  CHECK(error_position("   junk") == std::pair{1, 4});
  CHECK(error_position("<a>") == std::pair{1, 1});          // never closed
  CHECK(error_position("<a></b>") == std::pair{1, 4});      // mismatched
  CHECK(error_position("<a><a/>") == std::pair{1, 1});      // outer open
  CHECK(error_position("<a x=1/>") == std::pair{1, 6});     // unquoted
  CHECK(error_position("<a x=\"1\" x=\"2\"/>") == std::pair{1, 10});
  CHECK(error_position("<a>&bogus;</a>") == std::pair{1, 4});
  CHECK(error_position("<a v=\"<\"/>") == std::pair{1, 7});
  CHECK(error_position("<a/><b/>") == std::pair{1, 5});     // two roots
  CHECK(error_position("<a/>tail") == std::pair{1, 5});
  CHECK(error_position("<!DOCTYPE html><a/>") == std::pair{1, 1});
  CHECK(error_position("<a><![CDATA[x]]></a>") == std::pair{1, 4});
  CHECK(error_position("<a><?pi?></a>") == std::pair{1, 4});
  CHECK(error_position("<a><!-- unterminated") == std::pair{1, 4});
}

TEST_CASE("reports multi-line positions") {
  auto pos = error_position("<a>\n  <b>\n</a>");
  CHECK(pos.first == 3);  // mismatched closing tag reported at </a>
  CHECK(pos.second == 1);
}

TEST_CASE("rejects an unsupported encoding") {
  CHECK_THROWS_AS(
      read_document("<?xml version=\"1.0\" encoding=\"latin-1\"?><a/>"),
      ParseError);
}

TEST_CASE("whitespace-only text is still reported as a child") {
  auto root = read_document("<a> <b/> </a>");
  REQUIRE(root.children.size() == 3);
  CHECK(xml::is_all_whitespace(root.children[0].text().content));
  CHECK(root.children[1].is_element());
}
