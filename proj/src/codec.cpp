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

#include "xmlkr/codec.hpp"

#include <unordered_set>

#include "xmlkr/xml_reader.hpp"

namespace xmlkr {

namespace {

constexpr std::string_view kRootTag = "xmlkr";
constexpr std::string_view kVersion = "1.0";
constexpr std::string_view kContainsLabel = "contains";

// ---------------------------------------------------------------------------
// parsing

[[noreturn]] void fail_at(const xml::Position& pos, ErrorCode code,
                          std::string message) {
  throw ParseError(code, std::move(message), pos.line, pos.column);
}

std::string required_name_attr(const xml::Element& element,
                               std::string_view attr_name) {
  const xml::Attribute* a = element.find_attribute(attr_name);
  if (!a) {
    fail_at(element.pos, ErrorCode::MalformedXml,
            "element '" + element.name + "' requires a '" +
                std::string(attr_name) + "' attribute");
  }
  std::string value = trim_copy(a->value);
  if (value.empty()) {
    fail_at(a->pos, ErrorCode::MalformedXml,
            "attribute '" + std::string(attr_name) + "' on '" + element.name +
                "' is empty");
  }
  return value;
}

void reject_unknown_attrs(const xml::Element& element,
                          std::initializer_list<std::string_view> allowed) {
  for (const xml::Attribute& a : element.attributes) {
    bool ok = false;
    for (std::string_view name : allowed) ok = ok || a.name == name;
    if (!ok) {
      fail_at(a.pos, ErrorCode::MalformedXml,
              "unexpected attribute '" + a.name + "' on element '" +
                  element.name + "'");
    }
  }
}

bool element_body_is_empty(const xml::Element& element) {
  for (const xml::Node& child : element.children) {
    if (child.is_element()) return false;
    if (!xml::is_all_whitespace(child.text().content)) return false;
  }
  return true;
}

class DocumentReader {
 public:
  ParseResult run(std::string_view bytes) {
    xml::Element root = xml::read_document(bytes);
    if (root.name != kRootTag) {
      fail_at(root.pos, ErrorCode::MalformedXml,
              "root element must be '" + std::string(kRootTag) + "', found '" +
                  root.name + "'");
    }
    reject_unknown_attrs(root, {"version"});
    const xml::Attribute* version = root.find_attribute("version");
    if (!version) {
      fail_at(root.pos, ErrorCode::UnknownRootVersion,
              "root element has no 'version' attribute");
    }
    if (trim_copy(version->value) != kVersion) {
      fail_at(version->pos, ErrorCode::UnknownRootVersion,
              "unsupported format version '" + version->value + "'");
    }

    for (const xml::Node& child : root.children) {
      if (!child.is_element()) {
        if (!xml::is_all_whitespace(child.text().content)) {
          fail_at(child.text().pos, ErrorCode::MalformedXml,
                  "stray text in the document body");
        }
        continue;
      }
      const xml::Element& element = child.element();
      if (element.name != "object") {
        fail_at(element.pos, ErrorCode::MalformedXml,
                "expected <object>, found <" + element.name + ">");
      }
      read_object(element, nullptr, RelationKind::isa());
    }

    ParseResult result;
    result.kb = std::move(kb_);
    for (Finding& f : validate(result.kb).findings) {
      result.warnings.push_back(std::move(f));
    }
    return result;
  }

 private:
  // Reads an <object> element. When `parent` is set the element sits inside
  // a relation context and contributes an edge parent —kind→ name; whether it
  // also defines the object depends on what is known about the name:
  //   - name is on the open stack (its definition encloses us): reference
  //     only, the body must be empty — this is the cycle stop rule;
  //   - name is already defined: reference only, body must be empty;
  //   - otherwise: this element is the definition (possibly promoting a
  //     stub), even when its body is empty.
  void read_object(const xml::Element& element, const ObjectName* parent,
                   const RelationKind& kind) {
    reject_unknown_attrs(element, {"name"});
    std::string name = required_name_attr(element, "name");

    const bool already_open = open_.contains(name);
    const ObjectNode* existing = kb_.find(name);
    if (already_open || (existing && !existing->stub)) {
      if (!element_body_is_empty(element)) {
        fail_at(element.pos, ErrorCode::DuplicateObject,
                already_open
                    ? "object '" + name + "' is already being defined"
                    : "object '" + name + "' is already defined");
      }
      if (!parent) {
        fail_at(element.pos, ErrorCode::DuplicateObject,
                "object '" + name + "' is already defined");
      }
      kb_.add_relation(*parent, kind, name);
      return;
    }

    // Definition. Attributes first, then relations.
    std::vector<AttributeTree> attributes;
    std::vector<const xml::Element*> relations;
    bool seen_relation = false;
    for (const xml::Node& child : element.children) {
      if (!child.is_element()) {
        if (!xml::is_all_whitespace(child.text().content)) {
          fail_at(child.text().pos, ErrorCode::MalformedXml,
                  "stray text inside <object>");
        }
        continue;
      }
      const xml::Element& e = child.element();
      if (e.name == "attr") {
        if (seen_relation) {
          fail_at(e.pos, ErrorCode::MalformedXml,
                  "attributes must precede relations in an object body");
        }
        attributes.push_back(read_attr(e));
        check_sibling_names(attributes, e.pos);
      } else if (e.name == "isa" || e.name == "ako" || e.name == "rel" ||
                 e.name == "object" || e.name == "ref") {
        seen_relation = true;
        relations.push_back(&e);
      } else {
        fail_at(e.pos, ErrorCode::MalformedXml,
                "unexpected element <" + e.name + "> in an object body");
      }
    }

    try {
      kb_.add_object(name, std::move(attributes));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail_at(element.pos, e.code(), e.detail());
    }
    if (parent) {
      kb_.add_relation(*parent, kind, name);
    }

    open_.insert(name);
    for (const xml::Element* e : relations) {
      read_relation(*e, name);
    }
    open_.erase(name);
  }

  void read_relation(const xml::Element& element, const ObjectName& source) {
    if (element.name == "object") {
      // Hoisted nested object: implicit containment.
      read_object(element, &source, RelationKind::of_label(kContainsLabel));
      return;
    }
    if (element.name == "ref") {
      reject_unknown_attrs(element, {"name"});
      require_empty(element);
      kb_.add_relation(source, RelationKind::of_label(kContainsLabel),
                       required_name_attr(element, "name"));
      return;
    }

    RelationKind kind = RelationKind::isa();
    if (element.name == "isa") {
      reject_unknown_attrs(element, {"ref"});
    } else if (element.name == "ako") {
      kind = RelationKind::ako();
      reject_unknown_attrs(element, {"ref"});
    } else {  // rel
      reject_unknown_attrs(element, {"kind", "ref"});
      const xml::Attribute* kind_attr = element.find_attribute("kind");
      if (!kind_attr) {
        fail_at(element.pos, ErrorCode::MalformedXml,
                "<rel> requires a 'kind' attribute");
      }
      try {
        kind = RelationKind::of_label(kind_attr->value);
      } catch (const Error& e) {
        fail_at(kind_attr->pos, ErrorCode::MalformedXml, e.detail());
      }
    }

    const xml::Attribute* ref = element.find_attribute("ref");
    const xml::Element* inline_target = single_element_child(element);

    if (ref && inline_target) {
      fail_at(element.pos, ErrorCode::MalformedXml,
              "<" + element.name + "> has both a 'ref' attribute and an " +
                  "inline target");
    }
    if (ref) {
      require_empty(element);
      std::string target = trim_copy(ref->value);
      if (target.empty()) {
        fail_at(ref->pos, ErrorCode::MalformedXml,
                "'ref' on <" + element.name + "> is empty");
      }
      kb_.add_relation(source, kind, target);
      return;
    }
    if (!inline_target) {
      fail_at(element.pos, ErrorCode::MalformedXml,
              "<" + element.name +
                  "> needs a 'ref' attribute or one inline target");
    }
    if (inline_target->name == "object") {
      read_object(*inline_target, &source, kind);
    } else if (inline_target->name == "ref") {
      reject_unknown_attrs(*inline_target, {"name"});
      require_empty(*inline_target);
      kb_.add_relation(source, kind,
                       required_name_attr(*inline_target, "name"));
    } else {
      fail_at(inline_target->pos, ErrorCode::MalformedXml,
              "expected <object> or <ref> inside <" + element.name + ">");
    }
  }

  // Exactly one element child, nothing but whitespace around it; nullptr for
  // an empty body. Anything else is malformed.
  const xml::Element* single_element_child(const xml::Element& element) {
    const xml::Element* found = nullptr;
    for (const xml::Node& child : element.children) {
      if (!child.is_element()) {
        if (!xml::is_all_whitespace(child.text().content)) {
          fail_at(child.text().pos, ErrorCode::MalformedXml,
                  "stray text inside <" + element.name + ">");
        }
        continue;
      }
      if (found) {
        fail_at(child.element().pos, ErrorCode::MalformedXml,
                "<" + element.name + "> takes a single target");
      }
      found = &child.element();
    }
    return found;
  }

  void require_empty(const xml::Element& element) {
    if (!element_body_is_empty(element)) {
      fail_at(element.pos, ErrorCode::MalformedXml,
              "<" + element.name + "> with a 'ref' or 'name' attribute must "
                  "be empty");
    }
  }

  AttributeTree read_attr(const xml::Element& element) {
    reject_unknown_attrs(element, {"name"});
    AttributeTree node;
    node.name = required_name_attr(element, "name");

    std::string text;
    for (const xml::Node& child : element.children) {
      if (!child.is_element()) {
        text += child.text().content;
        continue;
      }
      const xml::Element& e = child.element();
      if (e.name != "attr") {
        fail_at(e.pos, ErrorCode::MalformedXml,
                "attributes may only contain <attr> children, found <" +
                    e.name + ">");
      }
      node.children.push_back(read_attr(e));
      check_sibling_names(node.children, e.pos);
    }

    std::string value = trim_copy(text);
    if (!value.empty()) node.value = std::move(value);
    if (!node.value && node.children.empty()) {
      fail_at(element.pos, ErrorCode::MalformedXml,
              "attribute '" + node.name +
                  "' has neither a value nor sub-attributes");
    }
    return node;
  }

  // The newest sibling must not repeat an earlier name. Checked as we go so
  // the error position points at the offending element.
  void check_sibling_names(const std::vector<AttributeTree>& siblings,
                           const xml::Position& pos) {
    const std::string& newest = siblings.back().name;
    for (std::size_t i = 0; i + 1 < siblings.size(); ++i) {
      if (siblings[i].name == newest) {
        fail_at(pos, ErrorCode::DuplicateAttribute,
                "duplicate attribute '" + newest + "' among siblings");
      }
    }
  }

  KnowledgeBase kb_;
  std::unordered_set<ObjectName> open_;
};

// ---------------------------------------------------------------------------
// serialization

std::string escape_attr_value(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string escape_text(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

class Writer {
 public:
  explicit Writer(const KnowledgeBase& kb) : kb_(kb) {}

  std::string flat() {
    open_root();
    for (const ObjectName& name : kb_.declaration_order()) {
      const ObjectNode& node = kb_.at(name);
      if (!node.stub) write_flat_object(node, 1);
    }
    close_root();
    return std::move(out_);
  }

  std::string nested(const ObjectName& root) {
    const ObjectNode& root_node = kb_.at(root);  // throws UnknownObject
    open_root();
    if (root_node.stub) {
      // A stub root has nothing to expand; the document is just the flat
      // remainder and the references that recreate the stub.
    } else {
      write_nested_object(root_node, 1);
    }
    for (const ObjectName& name : kb_.declaration_order()) {
      const ObjectNode& node = kb_.at(name);
      if (!node.stub && !expanded_.contains(name)) {
        write_flat_object(node, 1);
      }
    }
    close_root();
    return std::move(out_);
  }

 private:
  void open_root() {
    body_start_ = 0;
    out_ += "<";
    out_ += kRootTag;
    out_ += " version=\"";
    out_ += kVersion;
    out_ += "\">\n";
    body_start_ = out_.size();
  }

  void close_root() {
    if (out_.size() == body_start_) {
      // No objects: collapse to a self-closing root.
      out_.clear();
      out_ += "<";
      out_ += kRootTag;
      out_ += " version=\"";
      out_ += kVersion;
      out_ += "\"/>\n";
      return;
    }
    out_ += "</";
    out_ += kRootTag;
    out_ += ">\n";
  }

  void indent(int depth) { out_.append(static_cast<std::size_t>(depth) * 2, ' '); }

  void write_flat_object(const ObjectNode& node, int depth) {
    if (node.attributes.empty() && node.edges.empty()) {
      indent(depth);
      out_ += "<object name=\"" + escape_attr_value(node.name) + "\"/>\n";
      return;
    }
    indent(depth);
    out_ += "<object name=\"" + escape_attr_value(node.name) + "\">\n";
    for (const AttributeTree& a : node.attributes) write_attr(a, depth + 1);
    for (const RelationEdge& e : node.edges) write_reference(e, depth + 1);
    indent(depth);
    out_ += "</object>\n";
  }

  void write_reference(const RelationEdge& edge, int depth) {
    indent(depth);
    switch (edge.kind.tag()) {
      case RelationKind::Tag::Isa:
        out_ += "<isa ref=\"" + escape_attr_value(edge.target) + "\"/>\n";
        break;
      case RelationKind::Tag::Ako:
        out_ += "<ako ref=\"" + escape_attr_value(edge.target) + "\"/>\n";
        break;
      case RelationKind::Tag::Named:
        out_ += "<rel kind=\"" + escape_attr_value(edge.kind.label()) +
                "\" ref=\"" + escape_attr_value(edge.target) + "\"/>\n";
        break;
    }
  }

  void write_attr(const AttributeTree& node, int depth) {
    indent(depth);
    out_ += "<attr name=\"" + escape_attr_value(node.name) + "\">";
    if (node.value) out_ += escape_text(*node.value);
    if (node.children.empty()) {
      out_ += "</attr>\n";
      return;
    }
    out_ += "\n";
    for (const AttributeTree& child : node.children) {
      write_attr(child, depth + 1);
    }
    indent(depth);
    out_ += "</attr>\n";
  }

  // Inline expansion. Every object is expanded at most once in the document;
  // a target already on the open path becomes <ref> (kind preserved by the
  // enclosing relation element), anything already handled elsewhere falls
  // back to a plain reference.
  void write_nested_object(const ObjectNode& node, int depth) {
    expanded_.insert(node.name);
    on_path_.insert(node.name);

    if (node.attributes.empty() && node.edges.empty()) {
      indent(depth);
      out_ += "<object name=\"" + escape_attr_value(node.name) + "\"/>\n";
      on_path_.erase(node.name);
      return;
    }
    indent(depth);
    out_ += "<object name=\"" + escape_attr_value(node.name) + "\">\n";
    for (const AttributeTree& a : node.attributes) write_attr(a, depth + 1);
    for (const RelationEdge& e : node.edges) {
      const ObjectNode& target = kb_.at(e.target);
      if (on_path_.contains(e.target)) {
        open_relation(e.kind, depth + 1);
        indent(depth + 2);
        out_ += "<ref name=\"" + escape_attr_value(e.target) + "\"/>\n";
        close_relation(e.kind, depth + 1);
      } else if (target.stub || expanded_.contains(e.target)) {
        write_reference(e, depth + 1);
      } else {
        open_relation(e.kind, depth + 1);
        write_nested_object(target, depth + 2);
        close_relation(e.kind, depth + 1);
      }
    }
    indent(depth);
    out_ += "</object>\n";
    on_path_.erase(node.name);
  }

  void open_relation(const RelationKind& kind, int depth) {
    indent(depth);
    switch (kind.tag()) {
      case RelationKind::Tag::Isa: out_ += "<isa>\n"; break;
      case RelationKind::Tag::Ako: out_ += "<ako>\n"; break;
      case RelationKind::Tag::Named:
        out_ += "<rel kind=\"" + escape_attr_value(kind.label()) + "\">\n";
        break;
    }
  }

  void close_relation(const RelationKind& kind, int depth) {
    indent(depth);
    switch (kind.tag()) {
      case RelationKind::Tag::Isa: out_ += "</isa>\n"; break;
      case RelationKind::Tag::Ako: out_ += "</ako>\n"; break;
      case RelationKind::Tag::Named: out_ += "</rel>\n"; break;
    }
  }

  const KnowledgeBase& kb_;
  std::string out_;
  std::size_t body_start_ = 0;
  std::unordered_set<ObjectName> expanded_;
  std::unordered_set<ObjectName> on_path_;
};

}  // namespace

ParseResult parse_document(std::string_view bytes) {
  return DocumentReader().run(bytes);
}

std::string serialize_flat(const KnowledgeBase& kb) {
  return Writer(kb).flat();
}

std::string serialize_nested(const KnowledgeBase& kb, const ObjectName& root) {
  return Writer(kb).nested(root);
}

bool canonical_equal(const KnowledgeBase& a, const KnowledgeBase& b) {
  if (a.object_count() != b.object_count()) return false;
  for (const ObjectName& name : a.declaration_order()) {
    const ObjectNode* other = b.find(name);
    if (!other) return false;
    const ObjectNode& mine = a.at(name);
    if (mine.stub != other->stub) return false;
    if (mine.attributes != other->attributes) return false;
    if (mine.edges.size() != other->edges.size()) return false;
    for (std::size_t i = 0; i < mine.edges.size(); ++i) {
      if (!(mine.edges[i].kind == other->edges[i].kind) ||
          mine.edges[i].target != other->edges[i].target) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace xmlkr
