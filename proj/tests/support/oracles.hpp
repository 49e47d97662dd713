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

// Brute-force oracles, deliberately implemented with different algorithms
// than the library (matrix squaring and exhaustive path enumeration instead
// of breadth-first search), so the two sides can check each other.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xmlkr/knowledge_base.hpp"
#include "xmlkr/xml_reader.hpp"

namespace xmlkr::testing {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

struct IndexedGraph {
  std::vector<ObjectName> names;                 // declaration order
  std::unordered_map<ObjectName, int> index;
  std::vector<std::vector<int>> adjacency;       // isa/ako edges only
};

inline IndexedGraph index_inheritance_graph(const KnowledgeBase& kb) {
  IndexedGraph g;
  g.names = kb.declaration_order();
  for (std::size_t i = 0; i < g.names.size(); ++i) {
    g.index.emplace(g.names[i], static_cast<int>(i));
  }
  g.adjacency.resize(g.names.size());
  for (std::size_t i = 0; i < g.names.size(); ++i) {
    for (const RelationEdge& e : kb.at(g.names[i]).edges) {
      if (!e.kind.inherits()) continue;
      g.adjacency[i].push_back(g.index.at(e.target));
    }
  }
  return g;
}

// All-pairs shortest walk lengths (>= 1 hop) by min-plus matrix squaring:
// D1 = adjacency, then D <- min(D, D (x) D) until walks of length >= n are
// covered. Shortest walks are simple, so this equals shortest path length.
inline std::vector<std::vector<int>> distance_closure(const IndexedGraph& g) {
  const int n = static_cast<int>(g.names.size());
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kUnreachable));
  for (int u = 0; u < n; ++u) {
    for (int v : g.adjacency[u]) dist[u][v] = 1;
  }
  int covered = 1;
  while (covered < n + 1) {
    std::vector<std::vector<int>> next = dist;
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (dist[i][k] >= kUnreachable) continue;
        for (int j = 0; j < n; ++j) {
          if (dist[k][j] >= kUnreachable) continue;
          next[i][j] = std::min(next[i][j], dist[i][k] + dist[k][j]);
        }
      }
    }
    dist = std::move(next);
    covered *= 2;
  }
  return dist;
}

/// Ancestor set with minimal distances, as a name -> distance map.
inline std::map<ObjectName, int> oracle_ancestors(
    const IndexedGraph& g, const std::vector<std::vector<int>>& dist,
    const ObjectName& object) {
  std::map<ObjectName, int> out;
  int u = g.index.at(object);
  for (std::size_t v = 0; v < g.names.size(); ++v) {
    int d = dist[u][v];
    if (d < kUnreachable && (static_cast<int>(v) != u || d >= 1)) {
      out.emplace(g.names[v], d);
    }
  }
  return out;
}

/// Instance set: objects with an isa first hop into the class (or into
/// anything that reaches the class over isa/ako when transitive).
inline std::vector<ObjectName> oracle_instances(
    const KnowledgeBase& kb, const IndexedGraph& g,
    const std::vector<std::vector<int>>& dist, const ObjectName& class_name,
    bool transitive) {
  std::vector<ObjectName> out;
  int target = g.index.at(class_name);
  for (const ObjectName& name : kb.declaration_order()) {
    bool matches = false;
    for (const RelationEdge& e : kb.at(name).edges) {
      if (e.kind.tag() != RelationKind::Tag::Isa) continue;
      int mid = g.index.at(e.target);
      if (mid == target || (transitive && dist[mid][target] < kUnreachable)) {
        matches = true;
        break;
      }
    }
    if (matches) out.push_back(name);
  }
  return out;
}

/// Minimal inheritance distance at which `path` is defined; nullopt when
/// nothing defines it.
inline std::optional<int> oracle_resolve_distance(
    const KnowledgeBase& kb, const IndexedGraph& g,
    const std::vector<std::vector<int>>& dist, const ObjectName& object,
    const std::vector<std::string>& path) {
  if (kb.local_attr(object, path)) return 0;
  int u = g.index.at(object);
  int best = kUnreachable;
  for (std::size_t v = 0; v < g.names.size(); ++v) {
    if (!kb.local_attr(g.names[v], path)) continue;
    best = std::min(best, dist[u][static_cast<int>(v)]);
  }
  if (best >= kUnreachable) return std::nullopt;
  return best;
}

/// Exhaustive simple-path enumeration over isa/ako edges; returns minimal
/// path length from `object` to each reachable node. Exponential — only for
/// small graphs.
inline std::map<ObjectName, int> enumerate_simple_path_distances(
    const KnowledgeBase& kb, const ObjectName& object) {
  IndexedGraph g = index_inheritance_graph(kb);
  const int n = static_cast<int>(g.names.size());
  std::vector<int> best(n, kUnreachable);
  std::vector<char> on_path(n, 0);
  int start = g.index.at(object);

  auto dfs = [&](auto&& self, int u, int depth) -> void {
    for (int v : g.adjacency[u]) {
      if (v == start) {
        // closing a cycle back to the start still counts as reaching it
        best[start] = std::min(best[start], depth + 1);
        continue;
      }
      if (on_path[v]) continue;
      best[v] = std::min(best[v], depth + 1);
      on_path[v] = 1;
      self(self, v, depth + 1);
      on_path[v] = 0;
    }
  };
  on_path[start] = 1;
  dfs(dfs, start, 0);

  std::map<ObjectName, int> out;
  for (int v = 0; v < n; ++v) {
    if (best[v] < kUnreachable) out.emplace(g.names[v], best[v]);
  }
  return out;
}

/// Longest simple path (edge count) over the full relation graph, by plain
/// enumeration with no early exit — the library version prunes, this one
/// does not.
inline std::size_t oracle_longest_simple_path(const KnowledgeBase& kb) {
  const auto& order = kb.declaration_order();
  std::unordered_map<ObjectName, int> index;
  for (std::size_t i = 0; i < order.size(); ++i) {
    index.emplace(order[i], static_cast<int>(i));
  }
  std::vector<std::vector<int>> adjacency(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const RelationEdge& e : kb.at(order[i]).edges) {
      adjacency[i].push_back(index.at(e.target));
    }
  }
  std::size_t best = 0;
  std::vector<char> on_path(order.size(), 0);
  auto dfs = [&](auto&& self, int u, std::size_t depth) -> void {
    best = std::max(best, depth);
    on_path[u] = 1;
    for (int v : adjacency[u]) {
      if (!on_path[v]) self(self, v, depth + 1);
    }
    on_path[u] = 0;
  };
  for (std::size_t s = 0; s < order.size(); ++s) {
    dfs(dfs, static_cast<int>(s), 0);
  }
  return best;
}

/// Walks a serialized document and checks that every <ref name=N/> element
/// appears while an <object name=N> is open on the element path. Returns
/// the number of <ref> elements seen; asserts via the `ok` flag.
struct RefPathCheck {
  int refs_seen = 0;
  bool ok = true;
};

inline void check_refs_on_path(const xml::Element& element,
                               std::vector<std::string>& open_objects,
                               RefPathCheck& check) {
  if (element.name == "ref") {
    ++check.refs_seen;
    const xml::Attribute* name = element.find_attribute("name");
    if (!name || std::find(open_objects.begin(), open_objects.end(),
                           name->value) == open_objects.end()) {
      check.ok = false;
    }
    return;
  }
  bool is_object = element.name == "object";
  if (is_object) {
    const xml::Attribute* name = element.find_attribute("name");
    open_objects.push_back(name ? name->value : "");
  }
  for (const xml::Node& child : element.children) {
    if (child.is_element()) {
      check_refs_on_path(child.element(), open_objects, check);
    }
  }
  if (is_object) open_objects.pop_back();
}

inline RefPathCheck check_document_refs(const std::string& document) {
  RefPathCheck check;
  xml::Element root = xml::read_document(document);
  std::vector<std::string> open;
  check_refs_on_path(root, open, check);
  return check;
}

}  // namespace xmlkr::testing
