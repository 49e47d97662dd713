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

// Seeded random knowledge-base generator for property tests.

#include <random>
#include <string>
#include <vector>

#include "xmlkr/knowledge_base.hpp"

namespace xmlkr::testing {

struct GenOptions {
  int min_objects = 1;
  int max_objects = 20;
  int max_edges_per_object = 4;
  bool force_cycle = false;      // close a loop over defined objects
  bool force_self_loop = false;  // add one x -> x edge
  bool acyclic = false;          // edges only toward earlier objects, no stubs
  bool fancy_text = true;        // names/values with spaces and escapables
  double stub_ref_prob = 0.15;   // chance an edge points at an undefined name
  int max_attr_depth = 3;
};

inline std::string random_value(std::mt19937& rng, bool fancy) {
  static const char* plain[] = {"red",  "blue", "grain", "4",    "fur",
                                "live", "yes",  "north", "small"};
  static const char* odd[] = {"fish & chips", "a<b", "say \"hi\"",
                              "it's fine",    "x>y", "two  spaces",
                              "line\nbreak",  "caf\xC3\xA9"};
  std::uniform_int_distribution<int> coin(0, 9);
  if (fancy && coin(rng) < 3) {
    return odd[std::uniform_int_distribution<int>(0, 7)(rng)];
  }
  return plain[std::uniform_int_distribution<int>(0, 8)(rng)];
}

inline std::vector<AttributeTree> random_attrs(std::mt19937& rng, int depth,
                                               const GenOptions& options) {
  std::vector<AttributeTree> attrs;
  std::uniform_int_distribution<int> count_dist(0, 3);
  int n = count_dist(rng);
  for (int i = 0; i < n; ++i) {
    AttributeTree node;
    node.name = "a" + std::to_string(depth) + "_" + std::to_string(i);
    bool with_children =
        depth < options.max_attr_depth &&
        std::uniform_int_distribution<int>(0, 9)(rng) < 4;
    if (with_children) {
      node.children = random_attrs(rng, depth + 1, options);
    }
    if (node.children.empty() ||
        std::uniform_int_distribution<int>(0, 9)(rng) < 8) {
      node.value = random_value(rng, options.fancy_text);
    }
    if (!node.value && node.children.empty()) {
      node.value = "filler";
    }
    attrs.push_back(std::move(node));
  }
  return attrs;
}

inline RelationKind random_kind(std::mt19937& rng) {
  static const char* labels[] = {"part-of", "has-part",  "same-as",
                                 "super-of", "linked-to", "opposite-of"};
  int roll = std::uniform_int_distribution<int>(0, 9)(rng);
  if (roll < 3) return RelationKind::isa();
  if (roll < 6) return RelationKind::ako();
  return RelationKind::of_label(
      labels[std::uniform_int_distribution<int>(0, 5)(rng)]);
}

inline KnowledgeBase random_kb(std::mt19937& rng, const GenOptions& options) {
  KnowledgeBase kb;
  std::uniform_int_distribution<int> size_dist(options.min_objects,
                                               options.max_objects);
  const int n = size_dist(rng);

  static const char* decorations[] = {" mark", "-x", " q&a", "'s", " \"v\""};
  std::vector<ObjectName> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::string name = "n" + std::to_string(i);
    if (options.fancy_text &&
        std::uniform_int_distribution<int>(0, 9)(rng) < 2) {
      name += decorations[std::uniform_int_distribution<int>(0, 4)(rng)];
    }
    names.push_back(name);
    kb.add_object(name, random_attrs(rng, 0, options));
  }

  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int stub_counter = 0;
  for (int i = 0; i < n; ++i) {
    int edges =
        std::uniform_int_distribution<int>(0, options.max_edges_per_object)(
            rng);
    for (int e = 0; e < edges; ++e) {
      if (options.acyclic) {
        if (i == 0) break;
        int target = std::uniform_int_distribution<int>(0, i - 1)(rng);
        kb.add_relation(names[i], random_kind(rng), names[target]);
        continue;
      }
      if (unit(rng) < options.stub_ref_prob) {
        kb.add_relation(names[i], random_kind(rng),
                        "stub" + std::to_string(stub_counter++));
        continue;
      }
      int target = std::uniform_int_distribution<int>(0, n - 1)(rng);
      kb.add_relation(names[i], random_kind(rng), names[target]);
    }
  }

  if (options.force_cycle && n >= 2) {
    int len = std::uniform_int_distribution<int>(2, std::min(n, 5))(rng);
    std::vector<int> ring;
    for (int i = 0; i < len; ++i) {
      ring.push_back(std::uniform_int_distribution<int>(0, n - 1)(rng));
    }
    for (int i = 0; i < len; ++i) {
      kb.add_relation(names[ring[i]], random_kind(rng),
                      names[ring[(i + 1) % len]]);
    }
  }
  if (options.force_self_loop) {
    int who = std::uniform_int_distribution<int>(0, n - 1)(rng);
    kb.add_relation(names[who], random_kind(rng), names[who]);
  }
  return kb;
}

/// Random object name drawn from the KB, weighted uniformly.
inline const ObjectName& random_object(std::mt19937& rng,
                                       const KnowledgeBase& kb) {
  const auto& order = kb.declaration_order();
  return order[std::uniform_int_distribution<std::size_t>(
      0, order.size() - 1)(rng)];
}

}  // namespace xmlkr::testing
