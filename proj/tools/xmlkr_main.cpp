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

// Command-line front-end. Exit codes: 0 success, 1 semantic error,
// 2 unreadable or malformed input. Diagnostics go to stderr, data to stdout.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "xmlkr/codec.hpp"
#include "xmlkr/inference.hpp"
#include "xmlkr/query.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitInput = 2;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

// Loads and parses a document, reporting failures on stderr. Returns
// nullopt (caller exits kExitInput) on any read or parse problem.
std::optional<xmlkr::ParseResult> load(const std::string& path) {
  auto bytes = read_file(path);
  if (!bytes) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return std::nullopt;
  }
  try {
    return xmlkr::parse_document(*bytes);
  } catch (const xmlkr::ParseError& e) {
    std::cerr << path << ":" << e.line() << ":" << e.column() << ": error: "
              << e.detail() << "\n";
    return std::nullopt;
  }
}

int run_validate(const std::string& path, bool strict) {
  auto parsed = load(path);
  if (!parsed) return kExitInput;

  xmlkr::ValidationReport report = xmlkr::validate(parsed->kb);
  bool failed = false;
  for (xmlkr::Finding& finding : report.findings) {
    if (strict && finding.code == "stub-object") {
      finding.severity = xmlkr::Severity::Error;
    }
    failed = failed || finding.severity == xmlkr::Severity::Error;
    std::cout << xmlkr::severity_name(finding.severity) << '\t'
              << finding.code << '\t' << finding.message << '\n';
  }
  return failed ? kExitSemantic : kExitOk;
}

int run_query(const std::string& path, const std::string& query_text) {
  auto parsed = load(path);
  if (!parsed) return kExitInput;

  xmlkr::QueryExpr expr;
  try {
    expr = xmlkr::parse_query(query_text);
  } catch (const xmlkr::QueryError& e) {
    std::cerr << "query error at column " << e.column() << ": " << e.detail();
    if (!e.expected().empty()) {
      std::cerr << " (expected: ";
      for (std::size_t i = 0; i < e.expected().size(); ++i) {
        if (i) std::cerr << ", ";
        std::cerr << e.expected()[i];
      }
      std::cerr << ")";
    }
    std::cerr << "\n";
    return kExitSemantic;
  }

  try {
    std::cout << xmlkr::render_rows(xmlkr::execute(parsed->kb, expr));
  } catch (const xmlkr::Error& e) {
    std::cerr << "error: " << e.detail() << "\n";
    return kExitSemantic;
  }
  return kExitOk;
}

int run_export(const std::string& path, const std::string& mode,
               const std::string& root, const std::string& out_path) {
  auto parsed = load(path);
  if (!parsed) return kExitInput;

  std::string document;
  if (mode == "flat") {
    document = xmlkr::serialize_flat(parsed->kb);
  } else {
    if (root.empty()) {
      std::cerr << "error: --mode nested requires --root\n";
      return kExitSemantic;
    }
    try {
      document = xmlkr::serialize_nested(parsed->kb, root);
    } catch (const xmlkr::Error& e) {
      std::cerr << "error: " << e.detail() << "\n";
      return kExitSemantic;
    }
  }

  if (out_path.empty()) {
    std::cout << document;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << out_path << "' for writing\n";
    return kExitInput;
  }
  out << document;
  out.close();
  if (!out) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return kExitInput;
  }
  return kExitOk;
}

int run_stats(const std::string& path) {
  auto parsed = load(path);
  if (!parsed) return kExitInput;
  const xmlkr::KnowledgeBase& kb = parsed->kb;

  std::size_t stubs = 0;
  std::size_t attrs = 0;
  std::size_t isa = 0;
  std::size_t ako = 0;
  std::size_t named = 0;

  auto count_attrs = [&](auto&& self, const xmlkr::AttributeTree& a) -> void {
    ++attrs;
    for (const xmlkr::AttributeTree& child : a.children) self(self, child);
  };
  for (const xmlkr::ObjectName& name : kb.declaration_order()) {
    const xmlkr::ObjectNode& node = kb.at(name);
    if (node.stub) ++stubs;
    for (const xmlkr::AttributeTree& a : node.attributes) {
      count_attrs(count_attrs, a);
    }
    for (const xmlkr::RelationEdge& e : node.edges) {
      switch (e.kind.tag()) {
        case xmlkr::RelationKind::Tag::Isa: ++isa; break;
        case xmlkr::RelationKind::Tag::Ako: ++ako; break;
        case xmlkr::RelationKind::Tag::Named: ++named; break;
      }
    }
  }

  std::cout << "objects=" << kb.object_count() << " stubs=" << stubs
            << " attrs=" << attrs << " isa=" << isa << " ako=" << ako
            << " rel=" << named
            << " cycles=" << xmlkr::cyclic_components(kb).size()
            << " maxdepth=" << xmlkr::longest_simple_path(kb) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"xmlkr — semantic-network knowledge bases as XML documents"};
  app.require_subcommand(1);

  std::string file;
  bool strict = false;
  auto* validate_cmd =
      app.add_subcommand("validate", "Diagnose a document (stubs, cycles)");
  validate_cmd->add_option("file", file, "document to check")->required();
  validate_cmd->add_flag("--strict", strict,
                         "treat undefined referenced objects as errors");

  std::string query_text;
  auto* query_cmd = app.add_subcommand("query", "Run a query over a document");
  query_cmd->add_option("file", file, "document to load")->required();
  query_cmd->add_option("--q", query_text, "query text")->required();

  std::string mode;
  std::string root;
  std::string out_path;
  auto* export_cmd =
      app.add_subcommand("export", "Rewrite a document in flat or nested form");
  export_cmd->add_option("file", file, "document to load")->required();
  export_cmd->add_option("--mode", mode, "flat or nested")
      ->required()
      ->check(CLI::IsMember({"flat", "nested"}));
  export_cmd->add_option("--root", root, "root object for nested form");
  export_cmd->add_option("--out", out_path, "output path (default: stdout)");

  auto* stats_cmd = app.add_subcommand("stats", "Print document statistics");
  stats_cmd->add_option("file", file, "document to load")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (validate_cmd->parsed()) return run_validate(file, strict);
  if (query_cmd->parsed()) return run_query(file, query_text);
  if (export_cmd->parsed()) return run_export(file, mode, root, out_path);
  if (stats_cmd->parsed()) return run_stats(file);
  return kExitInput;
}
