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

#include "xmlkr/inference.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace xmlkr {

namespace {

// Walks provider back to the start through BFS parents.
std::vector<ObjectName> rebuild_path(
    const std::unordered_map<ObjectName, ObjectName>& parent,
    const ObjectName& start, const ObjectName& provider) {
  std::vector<ObjectName> path{provider};
  ObjectName cur = provider;
  while (cur != start) {
    cur = parent.at(cur);
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

std::optional<ResolvedValue> resolve_attr(const KnowledgeBase& kb,
                                          const ObjectName& object,
                                          std::span<const std::string> path) {
  const ObjectNode& start = kb.at(object);
  if (path.empty()) {
    throw Error(ErrorCode::InvalidAttribute, "attribute path is empty");
  }

  // Local definition shadows anything inherited.
  if (const AttributeTree* local = kb.local_attr(object, path)) {
    return ResolvedValue{*local, object, 0, {object}, {}};
  }

  std::unordered_set<ObjectName> visited{start.name};
  std::unordered_map<ObjectName, ObjectName> parent;
  std::vector<ObjectName> frontier{start.name};
  int distance = 0;

  while (!frontier.empty()) {
    std::vector<ObjectName> next;
    for (const ObjectName& name : frontier) {
      for (const RelationEdge& e : kb.at(name).edges) {
        if (!e.kind.inherits()) continue;
        if (visited.contains(e.target)) continue;
        visited.insert(e.target);
        parent.emplace(e.target, name);
        next.push_back(e.target);
      }
    }
    ++distance;

    std::optional<ResolvedValue> found;
    for (const ObjectName& name : next) {
      const AttributeTree* definition = kb.local_attr(name, path);
      if (!definition) continue;
      if (!found) {
        found = ResolvedValue{*definition, name, distance,
                              rebuild_path(parent, start.name, name), {}};
      } else {
        found->tied_providers.push_back(name);
      }
    }
    if (found) return found;
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::vector<AncestorEntry> ancestors(const KnowledgeBase& kb,
                                     const ObjectName& object) {
  const ObjectNode& start = kb.at(object);

  std::vector<AncestorEntry> result;
  std::unordered_set<ObjectName> visited{start.name};
  std::vector<ObjectName> frontier{start.name};
  bool start_reported = false;
  int distance = 0;

  while (!frontier.empty()) {
    std::vector<ObjectName> next;
    for (const ObjectName& name : frontier) {
      for (const RelationEdge& e : kb.at(name).edges) {
        if (!e.kind.inherits()) continue;
        if (e.target == start.name) {
          // A cycle back to the start: report once, nothing new to expand.
          if (!start_reported) {
            start_reported = true;
            result.push_back(AncestorEntry{start.name, distance + 1});
          }
          continue;
        }
        if (visited.contains(e.target)) continue;
        visited.insert(e.target);
        next.push_back(e.target);
        result.push_back(AncestorEntry{e.target, distance + 1});
      }
    }
    ++distance;
    frontier = std::move(next);
  }
  return result;
}

std::vector<ObjectName> instances_of(const KnowledgeBase& kb,
                                     const ObjectName& class_name,
                                     bool transitive) {
  kb.at(class_name);  // existence check

  std::vector<ObjectName> result;
  for (const ObjectName& name : kb.declaration_order()) {
    const ObjectNode& node = kb.at(name);
    bool matches = false;
    for (const RelationEdge& e : node.edges) {
      if (e.kind.tag() != RelationKind::Tag::Isa) continue;
      if (e.target == class_name ||
          (transitive && is_a(kb, e.target, class_name))) {
        matches = true;
        break;
      }
    }
    if (matches) result.push_back(name);
  }
  return result;
}

bool is_a(const KnowledgeBase& kb, const ObjectName& object,
          const ObjectName& class_name) {
  kb.at(object);
  kb.at(class_name);
  if (object == class_name) return true;

  std::unordered_set<ObjectName> visited{object};
  std::vector<ObjectName> frontier{object};
  while (!frontier.empty()) {
    std::vector<ObjectName> next;
    for (const ObjectName& name : frontier) {
      for (const RelationEdge& e : kb.at(name).edges) {
        if (!e.kind.inherits()) continue;
        if (e.target == class_name) return true;
        if (visited.insert(e.target).second) next.push_back(e.target);
      }
    }
    frontier = std::move(next);
  }
  return false;
}

}  // namespace xmlkr
