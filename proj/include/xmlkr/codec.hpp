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
#include <vector>

#include "xmlkr/knowledge_base.hpp"

namespace xmlkr {

// Document format, flat form:
//
//   <xmlkr version="1.0">
//     <object name="Persia">
//       <attr name="color">White</attr>
//       <isa ref="Car"/>
//     </object>
//   </xmlkr>
//
// Object bodies are attributes followed by relations. Relations are either
// references (<isa ref=N/>, <ako ref=N/>, <rel kind=L ref=N/>) or carry an
// inline target (<isa> <object .../> </isa>, same for <ako> and <rel>). In
// nested form a target that is already open on the expansion path is cut off
// with <ref name=N/> inside its relation element, which both terminates
// cycles and keeps the edge kind. A bare <object> or <ref> directly inside
// an object body is accepted on input as an implicit "contains" relation.

struct ParseResult {
  KnowledgeBase kb;
  std::vector<Finding> warnings;  // stub objects, self-loops, cycles
};

/// Reads a document into a knowledge base. Objects, attributes, and edges
/// keep document order. Referenced-but-undefined targets become stubs.
/// Throws ParseError (line/column bearing) with codes MalformedXml,
/// UnknownRootVersion, DuplicateObject, DuplicateAttribute.
ParseResult parse_document(std::string_view bytes);

/// Canonical flat form: one top-level <object> per defined object, in
/// declaration order; relations as references only. Stubs are not written —
/// re-parsing recreates them from the references. Output is a fixed point:
/// serializing a parse of it reproduces it byte for byte.
std::string serialize_flat(const KnowledgeBase& kb);

/// Nested form rooted at `root`: relation targets are expanded inline, each
/// object at most once document-wide. A target already on the current
/// expansion path becomes <ref name=.../> (the cycle stop); a target that was
/// expanded elsewhere or is a stub stays a plain reference. Objects never
/// expanded are appended flat so the document re-parses to an equal KB.
/// Throws Error(UnknownObject) for a bad root.
std::string serialize_nested(const KnowledgeBase& kb, const ObjectName& root);

/// Structural equality: same object names, same stub flags, per-object equal
/// attribute trees and edge lists (both order-sensitive). Declaration order
/// of objects is not compared.
bool canonical_equal(const KnowledgeBase& a, const KnowledgeBase& b);

}  // namespace xmlkr
