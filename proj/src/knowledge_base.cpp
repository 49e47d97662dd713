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

#include "xmlkr/knowledge_base.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_set>

namespace xmlkr {

std::string trim_copy(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::string(text.substr(begin, end - begin));
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

const AttributeTree* AttributeTree::child(std::string_view child_name) const {
  for (const AttributeTree& c : children) {
    if (c.name == child_name) return &c;
  }
  return nullptr;
}

AttributeTree attr(std::string name, std::string value) {
  return AttributeTree{std::move(name), std::move(value), {}};
}

AttributeTree attr(std::string name, std::vector<AttributeTree> children) {
  return AttributeTree{std::move(name), std::nullopt, std::move(children)};
}

AttributeTree attr(std::string name, std::string value,
                   std::vector<AttributeTree> children) {
  return AttributeTree{std::move(name), std::move(value),
                       std::move(children)};
}

namespace {

bool valid_label(std::string_view label) {
  if (label.empty()) return false;
  if (label.front() < 'a' || label.front() > 'z') return false;
  for (char c : label) {
    const bool ok =
        (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok) return false;
  }
  return true;
}

// Normalizes one attribute level: trims names and values, drops values that
// trim to nothing, checks sibling uniqueness and the value-or-children rule.
void normalize_attributes(std::vector<AttributeTree>& attrs) {
  std::unordered_set<std::string> seen;
  for (AttributeTree& a : attrs) {
    a.name = trim_copy(a.name);
    if (a.name.empty()) {
      throw Error(ErrorCode::InvalidAttribute, "attribute name is empty");
    }
    if (!seen.insert(a.name).second) {
      throw Error(ErrorCode::DuplicateAttribute,
                  "duplicate attribute '" + a.name + "' among siblings");
    }
    if (a.value) {
      std::string v = trim_copy(*a.value);
      if (v.empty()) {
        a.value.reset();
      } else {
        a.value = std::move(v);
      }
    }
    normalize_attributes(a.children);
    if (!a.value && a.children.empty()) {
      throw Error(ErrorCode::InvalidAttribute,
                  "attribute '" + a.name +
                      "' has neither a value nor sub-attributes");
    }
  }
}

}  // namespace

RelationKind RelationKind::of_label(std::string_view label) {
  std::string lowered = ascii_lower(trim_copy(label));
  if (lowered == "isa") return isa();
  if (lowered == "ako" || lowered == "kind-of") return ako();
  if (!valid_label(lowered)) {
    throw Error(ErrorCode::InvalidLabel,
                "relation label '" + std::string(label) +
                    "' is not a lowercase identifier");
  }
  return RelationKind(Tag::Named, std::move(lowered));
}

std::span<const std::string_view> predefined_relation_labels() {
  static const std::array<std::string_view, 6> labels = {
      "part-of", "has-part", "kind-of", "super-of", "same-as", "opposite-of"};
  return labels;
}

const ObjectName& KnowledgeBase::add_object(
    std::string_view name, std::vector<AttributeTree> attributes) {
  std::string trimmed = trim_copy(name);
  if (trimmed.empty()) {
    throw Error(ErrorCode::InvalidName, "object name is empty");
  }
  normalize_attributes(attributes);

  auto it = objects_.find(trimmed);
  if (it != objects_.end()) {
    if (!it->second.stub) {
      throw Error(ErrorCode::DuplicateObject,
                  "object '" + trimmed + "' is already defined");
    }
    // Promote the stub in place: it keeps its declaration slot and every
    // inbound edge.
    it->second.attributes = std::move(attributes);
    it->second.stub = false;
    return it->second.name;
  }

  ObjectNode node;
  node.name = trimmed;
  node.attributes = std::move(attributes);
  auto [pos, inserted] = objects_.emplace(trimmed, std::move(node));
  order_.push_back(pos->second.name);
  return pos->second.name;
}

const RelationEdge& KnowledgeBase::add_relation(const ObjectName& source,
                                                RelationKind kind,
                                                const ObjectName& target) {
  auto src = objects_.find(source);
  if (src == objects_.end()) {
    throw Error(ErrorCode::UnknownSource,
                "relation source '" + source + "' does not exist");
  }
  std::string target_name = trim_copy(target);
  if (target_name.empty()) {
    throw Error(ErrorCode::InvalidName, "relation target name is empty");
  }
  if (!objects_.contains(target_name)) {
    ObjectNode stub;
    stub.name = target_name;
    stub.stub = true;
    auto [pos, inserted] = objects_.emplace(target_name, std::move(stub));
    order_.push_back(pos->second.name);
    notes_.push_back("created stub object '" + target_name +
                     "' for relation target");
  }
  src->second.edges.push_back(
      RelationEdge{src->second.name, std::move(kind), target_name});
  return src->second.edges.back();
}

bool KnowledgeBase::contains(const ObjectName& name) const {
  return objects_.contains(name);
}

const ObjectNode* KnowledgeBase::find(const ObjectName& name) const {
  auto it = objects_.find(name);
  return it == objects_.end() ? nullptr : &it->second;
}

const ObjectNode& KnowledgeBase::at(const ObjectName& name) const {
  const ObjectNode* node = find(name);
  if (!node) {
    throw Error(ErrorCode::UnknownObject,
                "unknown object '" + name + "'");
  }
  return *node;
}

const AttributeTree* KnowledgeBase::local_attr(
    const ObjectName& object, std::span<const std::string> path) const {
  const ObjectNode& node = at(object);
  if (path.empty()) return nullptr;
  const AttributeTree* cur = nullptr;
  for (const AttributeTree& a : node.attributes) {
    if (a.name == path.front()) {
      cur = &a;
      break;
    }
  }
  for (std::size_t i = 1; cur != nullptr && i < path.size(); ++i) {
    cur = cur->child(path[i]);
  }
  return cur;
}

std::vector<ObjectName> KnowledgeBase::neighbors(
    const ObjectName& object, const std::optional<RelationKind>& kind) const {
  const ObjectNode& node = at(object);
  std::vector<ObjectName> out;
  for (const RelationEdge& e : node.edges) {
    if (!kind || e.kind == *kind) out.push_back(e.target);
  }
  return out;
}

const char* severity_name(Severity severity) {
  switch (severity) {
    case Severity::Info: return "INFO";
    case Severity::Warning: return "WARN";
    case Severity::Error: return "ERROR";
  }
  return "?";
}

bool ValidationReport::has_errors() const {
  return std::any_of(findings.begin(), findings.end(), [](const Finding& f) {
    return f.severity == Severity::Error;
  });
}

namespace {

std::string join_names(const std::vector<ObjectName>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out;
}

// Iterative Kosaraju. Index space is declaration order, which keeps the
// output deterministic.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<std::vector<int>> reverse(n);
  for (int u = 0; u < n; ++u) {
    for (int v : adjacency[u]) reverse[v].push_back(u);
  }

  std::vector<int> finish_order;
  finish_order.reserve(n);
  std::vector<char> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // pair: node, next child index
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    seen[start] = 1;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      if (next < adjacency[u].size()) {
        int v = adjacency[u][next++];
        if (!seen[v]) {
          seen[v] = 1;
          stack.emplace_back(v, 0);
        }
      } else {
        finish_order.push_back(u);
        stack.pop_back();
      }
    }
  }

  std::vector<std::vector<int>> components;
  std::vector<char> assigned(n, 0);
  for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
    if (assigned[*it]) continue;
    std::vector<int> component;
    std::vector<int> stack{*it};
    assigned[*it] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      component.push_back(u);
      for (int v : reverse[u]) {
        if (!assigned[v]) {
          assigned[v] = 1;
          stack.push_back(v);
        }
      }
    }
    components.push_back(std::move(component));
  }
  return components;
}

std::vector<std::vector<int>> build_adjacency(const KnowledgeBase& kb) {
  const auto& order = kb.declaration_order();
  std::unordered_map<std::string_view, int> index;
  index.reserve(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    index.emplace(order[i], static_cast<int>(i));
  }
  std::vector<std::vector<int>> adjacency(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const RelationEdge& e : kb.at(order[i]).edges) {
      adjacency[i].push_back(index.at(e.target));
    }
  }
  return adjacency;
}

}  // namespace

std::vector<std::vector<ObjectName>> cyclic_components(
    const KnowledgeBase& kb) {
  const auto& order = kb.declaration_order();
  auto adjacency = build_adjacency(kb);
  auto components = strongly_connected_components(adjacency);

  std::vector<std::vector<int>> cyclic;
  for (auto& component : components) {
    bool is_cyclic = component.size() > 1;
    if (!is_cyclic) {
      int u = component.front();
      is_cyclic = std::find(adjacency[u].begin(), adjacency[u].end(), u) !=
                  adjacency[u].end();
    }
    if (is_cyclic) {
      std::sort(component.begin(), component.end());
      cyclic.push_back(std::move(component));
    }
  }
  std::sort(cyclic.begin(), cyclic.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  std::vector<std::vector<ObjectName>> out;
  out.reserve(cyclic.size());
  for (const auto& component : cyclic) {
    std::vector<ObjectName> names;
    names.reserve(component.size());
    for (int i : component) names.push_back(order[i]);
    out.push_back(std::move(names));
  }
  return out;
}

std::size_t longest_simple_path(const KnowledgeBase& kb) {
  auto adjacency = build_adjacency(kb);
  const int n = static_cast<int>(adjacency.size());
  if (n == 0) return 0;

  std::size_t best = 0;
  const std::size_t upper_bound = static_cast<std::size_t>(n) - 1;
  std::vector<char> on_path(n, 0);

  // Depth-first over simple paths; n-1 edges is a global optimum, so bail as
  // soon as some path reaches it.
  auto dfs = [&](auto&& self, int u, std::size_t depth) -> void {
    if (depth > best) best = depth;
    if (best == upper_bound) return;
    on_path[u] = 1;
    for (int v : adjacency[u]) {
      if (!on_path[v]) {
        self(self, v, depth + 1);
        if (best == upper_bound) break;
      }
    }
    on_path[u] = 0;
  };
  for (int start = 0; start < n && best < upper_bound; ++start) {
    dfs(dfs, start, 0);
  }
  return best;
}

ValidationReport validate(const KnowledgeBase& kb) {
  ValidationReport report;

  for (const ObjectName& name : kb.declaration_order()) {
    if (kb.at(name).stub) {
      report.findings.push_back(
          Finding{Severity::Warning, "stub-object",
                  "object '" + name + "' is referenced but never defined",
                  {name}});
    }
  }
  for (const ObjectName& name : kb.declaration_order()) {
    for (const RelationEdge& e : kb.at(name).edges) {
      if (e.target == name) {
        report.findings.push_back(
            Finding{Severity::Warning, "self-loop",
                    "object '" + name + "' has a self-referencing " +
                        e.kind.label() + " edge",
                    {name}});
      }
    }
  }
  for (auto& members : cyclic_components(kb)) {
    report.findings.push_back(Finding{Severity::Info, "cycle",
                                      "relation cycle: " + join_names(members),
                                      std::move(members)});
  }
  return report;
}

}  // namespace xmlkr
