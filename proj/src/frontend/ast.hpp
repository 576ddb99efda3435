// Copyright 2026 The qparse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "frontend/source.hpp"
#include "frontend/token.hpp"

namespace qparse::frontend {

/// Uniform tagged tree node. Every frontend lowers its typed AST to this
/// shape for serialization and structural comparison. Attribute values are
/// restricted to text, integers, reals and booleans; anything list-like is
/// expressed as child nodes.
struct AstNode {
  std::string kind;
  Span span;
  std::map<std::string, Scalar> attrs;  // std::map keeps keys sorted
  std::vector<AstNode> children;

  AstNode() = default;
  AstNode(std::string kind, Span span) : kind(std::move(kind)), span(span) {}

  AstNode& set(std::string name, Scalar value) {
    attrs[std::move(name)] = std::move(value);
    return *this;
  }
  AstNode& set(std::string name, const char* text) { return set(std::move(name), Scalar(std::string(text))); }
  AstNode& add(AstNode child) {
    children.push_back(std::move(child));
    return *this;
  }
};

enum class AstFormat { Json, Pretty };

/// Compact JSON:
///   {"kind":K,"span":{"start":{"line":L,"col":C,"off":O},"end":{...}},
///    "attrs":{...sorted...},"children":[...]}
/// Reals always carry a decimal point or exponent so they read back as reals.
std::string serialize_ast(const AstNode& root, AstFormat format);

/// Inverse of serialize_ast(root, Json). Throws std::invalid_argument when
/// the text is not JSON or does not follow the node schema.
AstNode deserialize_ast(std::string_view json);

/// Tree equality. With `compare_spans == false` positions are ignored.
bool structurally_equal(const AstNode& a, const AstNode& b, bool compare_spans = false);

/// True when every node's span contains the spans of all its children.
bool spans_nest(const AstNode& root);

/// Shortest text that reads back as exactly `v`, always containing '.',
/// 'e' or being non-finite.
std::string format_real(double v);

}  // namespace qparse::frontend
