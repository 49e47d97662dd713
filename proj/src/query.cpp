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

#include "xmlkr/query.hpp"

#include "xmlkr/inference.hpp"

namespace xmlkr {

namespace {

struct Token {
  enum class Kind { Word, Dot, Equals, Quoted, End };

  Kind kind = Kind::End;
  std::string text;
  std::size_t column = 0;  // 1-based
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : in_(text) {}

  Token next() {
    while (idx_ < in_.size() && is_space(in_[idx_])) ++idx_;
    Token token;
    token.column = idx_ + 1;
    if (idx_ >= in_.size()) {
      token.kind = Token::Kind::End;
      return token;
    }
    char c = in_[idx_];
    if (c == '.') {
      ++idx_;
      token.kind = Token::Kind::Dot;
      token.text = ".";
      return token;
    }
    if (c == '=') {
      ++idx_;
      token.kind = Token::Kind::Equals;
      token.text = "=";
      return token;
    }
    if (c == '"') {
      std::size_t open = idx_++;
      std::string body;
      while (idx_ < in_.size() && in_[idx_] != '"') body += in_[idx_++];
      if (idx_ >= in_.size()) {
        throw QueryError("unterminated quoted value", open + 1,
                         {"closing '\"'"});
      }
      ++idx_;  // closing quote
      token.kind = Token::Kind::Quoted;
      token.text = std::move(body);
      return token;
    }
    std::string word;
    while (idx_ < in_.size() && !is_space(in_[idx_]) && in_[idx_] != '.' &&
           in_[idx_] != '=' && in_[idx_] != '"') {
      word += in_[idx_++];
    }
    token.kind = Token::Kind::Word;
    token.text = std::move(word);
    return token;
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  }

  std::string_view in_;
  std::size_t idx_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { advance(); }

  QueryExpr parse() {
    if (current_.kind != Token::Kind::Word) {
      fail("expected a query form",
           {"attr", "ancestors", "instances", "find", "related"});
    }
    const std::string form = current_.text;
    if (form == "attr") return parse_attr();
    if (form == "ancestors") return parse_ancestors();
    if (form == "instances") return parse_instances();
    if (form == "find") return parse_find();
    if (form == "related") return parse_related();
    fail("unknown query form '" + form + "'",
         {"attr", "ancestors", "instances", "find", "related"});
  }

 private:
  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected) {
    throw QueryError(message, current_.column, std::move(expected));
  }

  void advance() { current_ = lexer_.next(); }

  std::string take_word(const char* what) {
    if (current_.kind != Token::Kind::Word) {
      fail(std::string("expected ") + what, {what});
    }
    std::string word = current_.text;
    advance();
    return word;
  }

  void expect_end() {
    if (current_.kind != Token::Kind::End) {
      fail("unexpected trailing input", {"end of query"});
    }
  }

  QueryExpr parse_attr() {
    advance();
    QueryExpr expr;
    expr.form = QueryExpr::Form::Attr;
    expr.object = take_word("an object name");
    if (current_.kind != Token::Kind::Dot) {
      fail("attr requires object.attribute", {"'.'"});
    }
    while (current_.kind == Token::Kind::Dot) {
      advance();
      expr.path.push_back(take_word("an attribute name"));
    }
    expect_end();
    return expr;
  }

  QueryExpr parse_ancestors() {
    advance();
    QueryExpr expr;
    expr.form = QueryExpr::Form::Ancestors;
    expr.object = take_word("an object name");
    expect_end();
    return expr;
  }

  QueryExpr parse_instances() {
    advance();
    QueryExpr expr;
    expr.form = QueryExpr::Form::Instances;
    expr.object = take_word("a class name");
    if (current_.kind == Token::Kind::Word) {
      if (current_.text != "transitive") {
        fail("unexpected token '" + current_.text + "'",
             {"transitive", "end of query"});
      }
      expr.transitive = true;
      advance();
    }
    expect_end();
    return expr;
  }

  QueryExpr parse_find() {
    advance();
    QueryExpr expr;
    expr.form = QueryExpr::Form::Find;
    expr.path.push_back(take_word("an attribute name"));
    while (current_.kind == Token::Kind::Dot) {
      advance();
      expr.path.push_back(take_word("an attribute name"));
    }
    if (current_.kind != Token::Kind::Equals) {
      fail("find requires path=value", {"'='"});
    }
    advance();
    if (current_.kind != Token::Kind::Word &&
        current_.kind != Token::Kind::Quoted) {
      fail("expected a value", {"a value", "a quoted value"});
    }
    expr.expected = current_.text;
    advance();
    expect_end();
    return expr;
  }

  QueryExpr parse_related() {
    advance();
    QueryExpr expr;
    expr.form = QueryExpr::Form::Related;
    expr.object = take_word("an object name");
    if (current_.kind == Token::Kind::Word) {
      if (current_.text != "kind") {
        fail("unexpected token '" + current_.text + "'",
             {"kind", "end of query"});
      }
      advance();
      if (current_.kind != Token::Kind::Equals) {
        fail("kind filter requires kind=label", {"'='"});
      }
      advance();
      std::size_t label_column = current_.column;
      std::string label = take_word("a relation label");
      try {
        expr.relation = RelationKind::of_label(label);
      } catch (const Error& e) {
        throw QueryError(e.detail(), label_column, {"a relation label"});
      }
    }
    expect_end();
    return expr;
  }

  Lexer lexer_;
  Token current_;
};

bool needs_quotes(std::string_view value) {
  if (value.empty()) return true;
  for (char c : value) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '.' ||
        c == '=' || c == '"') {
      return true;
    }
  }
  return false;
}

std::string join_path(const std::vector<std::string>& path) {
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += path[i];
  }
  return out;
}

}  // namespace

QueryExpr parse_query(std::string_view text) {
  return Parser(text).parse();
}

std::string render_query(const QueryExpr& expr) {
  switch (expr.form) {
    case QueryExpr::Form::Attr:
      return "attr " + expr.object + "." + join_path(expr.path);
    case QueryExpr::Form::Ancestors:
      return "ancestors " + expr.object;
    case QueryExpr::Form::Instances:
      return "instances " + expr.object +
             (expr.transitive ? " transitive" : "");
    case QueryExpr::Form::Find:
      return "find " + join_path(expr.path) + "=" +
             (needs_quotes(expr.expected) ? '"' + expr.expected + '"'
                                          : expr.expected);
    case QueryExpr::Form::Related:
      return "related " + expr.object +
             (expr.relation ? " kind=" + expr.relation->label() : "");
  }
  return {};
}

QueryResult execute(const KnowledgeBase& kb, const QueryExpr& expr) {
  QueryResult result;
  switch (expr.form) {
    case QueryExpr::Form::Attr: {
      auto resolved = resolve_attr(kb, expr.object, expr.path);
      if (resolved) {
        result.rows.push_back(ResultRow{expr.object, resolved->value,
                                        resolved->provider,
                                        resolved->distance});
      }
      break;
    }
    case QueryExpr::Form::Ancestors: {
      for (const AncestorEntry& entry : ancestors(kb, expr.object)) {
        result.rows.push_back(
            ResultRow{entry.name, std::nullopt, std::nullopt, entry.distance});
      }
      break;
    }
    case QueryExpr::Form::Instances: {
      for (const ObjectName& name :
           instances_of(kb, expr.object, expr.transitive)) {
        result.rows.push_back(
            ResultRow{name, std::nullopt, std::nullopt, std::nullopt});
      }
      break;
    }
    case QueryExpr::Form::Find: {
      const std::string wanted = trim_copy(expr.expected);
      for (const ObjectName& name : kb.declaration_order()) {
        if (kb.at(name).stub) continue;
        auto resolved = resolve_attr(kb, name, expr.path);
        if (!resolved || !resolved->value.value) continue;
        if (*resolved->value.value != wanted) continue;
        result.rows.push_back(ResultRow{name, resolved->value,
                                        resolved->provider,
                                        resolved->distance});
      }
      break;
    }
    case QueryExpr::Form::Related: {
      for (const ObjectName& name : kb.neighbors(expr.object, expr.relation)) {
        result.rows.push_back(
            ResultRow{name, std::nullopt, std::nullopt, std::nullopt});
      }
      break;
    }
  }
  return result;
}

std::string render_rows(const QueryResult& result) {
  std::string out;
  for (const ResultRow& row : result.rows) {
    out += row.object;
    out += '\t';
    out += row.value && row.value->value ? *row.value->value : "-";
    out += '\t';
    out += row.provider ? *row.provider : "-";
    out += '\t';
    out += row.distance ? std::to_string(*row.distance) : "-";
    out += '\n';
  }
  return out;
}

}  // namespace xmlkr
