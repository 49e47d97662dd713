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
#include <span>
#include <string>
#include <vector>

#include "xmlkr/knowledge_base.hpp"

namespace xmlkr {

// Inheritance reasoning over isa/ako edges. Everything here is read-only,
// cycle-safe (visited sets), and deterministic: search is breadth-first,
// levels by hop count, within a level in edge declaration order. Named
// relations never conduct inheritance.

/// Outcome of an inherited attribute lookup.
struct ResolvedValue {
  AttributeTree value;   // the whole subtree at the path, from one provider
  ObjectName provider;   // object whose local definition supplied it
  int distance = 0;      // inheritance hops; 0 = defined locally
  std::vector<ObjectName> path;  // queried object … provider (simple path)
  std::vector<ObjectName> tied_providers;  // other definers at the same
                                           // distance, in search order
};

/// Resolves an attribute path with inheritance. A local definition always
/// wins; otherwise the nearest definer along isa/ako edges supplies the
/// value, ties broken by edge declaration order (losing candidates are kept
/// in tied_providers). Empty result when nothing defines the path.
/// Throws UnknownObject; InvalidAttribute for an empty path.
std::optional<ResolvedValue> resolve_attr(const KnowledgeBase& kb,
                                          const ObjectName& object,
                                          std::span<const std::string> path);

struct AncestorEntry {
  ObjectName name;
  int distance;  // minimal isa/ako hops from the queried object

  bool operator==(const AncestorEntry&) const = default;
};

/// Objects reachable over isa/ako edges, breadth-first, each once at its
/// minimal distance. The queried object itself appears only when a cycle
/// leads back to it. Throws UnknownObject.
std::vector<AncestorEntry> ancestors(const KnowledgeBase& kb,
                                     const ObjectName& object);

/// Instances of a class: objects whose first hop is an isa edge leading to
/// the class (transitive: to anything the class is reachable from over
/// isa/ako). Results in declaration order. Throws UnknownObject.
std::vector<ObjectName> instances_of(const KnowledgeBase& kb,
                                     const ObjectName& class_name,
                                     bool transitive);

/// True when `class_name` equals `object` or appears among its ancestors.
/// Throws UnknownObject when either name is absent.
bool is_a(const KnowledgeBase& kb, const ObjectName& object,
          const ObjectName& class_name);

}  // namespace xmlkr
