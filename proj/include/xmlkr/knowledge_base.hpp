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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "xmlkr/errors.hpp"

namespace xmlkr {

/// Case-sensitive object identifier. Stored with no leading/trailing
/// whitespace; interior whitespace is allowed.
using ObjectName = std::string;

std::string trim_copy(std::string_view text);
std::string ascii_lower(std::string_view text);

/// Named attribute carrying an optional scalar text value and/or nested
/// sub-attributes. Sibling names are unique at each level; a node always has
/// a value or at least one child. Attributes never reference objects —
/// object-to-object links are relation edges.
struct AttributeTree {
  std::string name;
  std::optional<std::string> value;
  std::vector<AttributeTree> children;

  const AttributeTree* child(std::string_view child_name) const;

  bool operator==(const AttributeTree&) const = default;
};

/// Convenience builders for attribute trees.
AttributeTree attr(std::string name, std::string value);
AttributeTree attr(std::string name, std::vector<AttributeTree> children);
AttributeTree attr(std::string name, std::string value,
                   std::vector<AttributeTree> children);

/// Edge kind: the two inheritance-bearing links (isa, ako) or an arbitrary
/// named relation. Labels are lowercase identifiers [a-z][a-z0-9-]*; input is
/// case-insensitive. "kind-of" is an alias for ako, and the labels "isa" and
/// "ako" themselves canonicalize to the builtin kinds so one label never
/// means two things.
class RelationKind {
 public:
  enum class Tag { Isa, Ako, Named };

  static RelationKind isa() { return RelationKind(Tag::Isa, "isa"); }
  static RelationKind ako() { return RelationKind(Tag::Ako, "ako"); }

  /// Builds a kind from a label, normalizing case and aliases.
  /// Throws Error(InvalidLabel) when the lowered label does not match
  /// [a-z][a-z0-9-]*.
  static RelationKind of_label(std::string_view label);

  Tag tag() const noexcept { return tag_; }
  bool inherits() const noexcept { return tag_ != Tag::Named; }

  /// Canonical lowercase label ("isa", "ako", or the named label).
  const std::string& label() const noexcept { return label_; }

  bool operator==(const RelationKind& other) const {
    return tag_ == other.tag_ && label_ == other.label_;
  }

 private:
  RelationKind(Tag tag, std::string label)
      : tag_(tag), label_(std::move(label)) {}

  Tag tag_;
  std::string label_;
};

/// Relation labels that are part of the base vocabulary. Only "kind-of" gets
/// special treatment (alias for ako); the rest parse as ordinary named kinds.
std::span<const std::string_view> predefined_relation_labels();

/// Directed, kind-tagged edge. Self-loops are legal.
struct RelationEdge {
  ObjectName source;
  RelationKind kind;
  ObjectName target;

  bool operator==(const RelationEdge&) const = default;
};

/// One named object. `stub` marks objects that exist only because some edge
/// referenced them; stubs carry no attributes and no outgoing edges.
struct ObjectNode {
  ObjectName name;
  std::vector<AttributeTree> attributes;
  std::vector<RelationEdge> edges;
  bool stub = false;
};

/// In-memory semantic network: named objects with attribute trees, plus
/// typed relation edges between them.
///
/// A KnowledgeBase is built single-threaded; once construction is done it is
/// treated as immutable and may be read concurrently without locking.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  /// Defines an object. A pre-existing stub of the same name is promoted in
  /// place (attributes filled in, stub flag cleared, inbound edges and
  /// declaration slot kept). Throws DuplicateObject if a real object with the
  /// name exists, InvalidName for an empty name, DuplicateAttribute /
  /// InvalidAttribute for bad attribute trees.
  const ObjectName& add_object(std::string_view name,
                               std::vector<AttributeTree> attributes);

  /// Appends an edge to the source object's edge list. The target is created
  /// as a stub when absent (noted in notes()). Throws UnknownSource when the
  /// source object does not exist.
  const RelationEdge& add_relation(const ObjectName& source, RelationKind kind,
                                   const ObjectName& target);

  bool contains(const ObjectName& name) const;
  std::size_t object_count() const { return objects_.size(); }

  /// Object lookup; nullptr when absent.
  const ObjectNode* find(const ObjectName& name) const;

  /// Object lookup; throws UnknownObject when absent.
  const ObjectNode& at(const ObjectName& name) const;

  /// Names in declaration order (stubs occupy the slot where they were first
  /// referenced; promotion keeps that slot).
  const std::vector<ObjectName>& declaration_order() const { return order_; }

  /// Follows `path` through the object's own attribute tree. No inheritance.
  /// Returns nullptr when the path is not locally defined.
  /// Throws UnknownObject when the object is absent.
  const AttributeTree* local_attr(const ObjectName& object,
                                  std::span<const std::string> path) const;

  /// Edge targets of `object` in declaration order, optionally filtered by
  /// kind. Throws UnknownObject.
  std::vector<ObjectName> neighbors(
      const ObjectName& object,
      const std::optional<RelationKind>& kind = std::nullopt) const;

  /// Construction notes (stub creations), in the order they happened.
  const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::unordered_map<ObjectName, ObjectNode> objects_;
  std::vector<ObjectName> order_;
  std::vector<std::string> notes_;
};

enum class Severity { Info, Warning, Error };

const char* severity_name(Severity severity);

struct Finding {
  Severity severity;
  std::string code;     // "stub-object" | "self-loop" | "cycle"
  std::string message;
  std::vector<ObjectName> subjects;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool clean() const { return findings.empty(); }
  bool has_errors() const;
};

/// Non-destructive diagnosis: stub objects (warning), self-loop edges
/// (warning), and relation cycles (info — cycles are legal, the nested
/// serializer handles them). Never reports errors; strict handling is a
/// caller policy.
ValidationReport validate(const KnowledgeBase& kb);

/// Strongly connected components of the full relation graph that contain a
/// cycle (size > 1, or a single node with a self-loop). Members and groups
/// come back in declaration order.
std::vector<std::vector<ObjectName>> cyclic_components(const KnowledgeBase& kb);

/// Edge count of the longest simple path in the full relation graph.
/// Exhaustive; meant for desk-scale documents.
std::size_t longest_simple_path(const KnowledgeBase& kb);

}  // namespace xmlkr
