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

#include "frontend/ast.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace qparse::frontend {

using ojson = nlohmann::ordered_json;

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  if (s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

namespace {

ojson position_json(const SourcePosition& p) {
  ojson j;
  j["line"] = p.line;
  j["col"] = p.column;
  j["off"] = p.offset;
  return j;
}

ojson scalar_json(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> ojson {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return nullptr;
        else
          return v;
      },
      s);
}

ojson node_json(const AstNode& node) {
  ojson j;
  j["kind"] = node.kind;
  ojson span;
  span["start"] = position_json(node.span.start);
  span["end"] = position_json(node.span.end);
  j["span"] = std::move(span);
  ojson attrs = ojson::object();
  for (const auto& [k, v] : node.attrs) attrs[k] = scalar_json(v);
  j["attrs"] = std::move(attrs);
  ojson children = ojson::array();
  for (const auto& c : node.children) children.push_back(node_json(c));
  j["children"] = std::move(children);
  return j;
}

std::string pretty_scalar(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>)
          return "null";
        else if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else if constexpr (std::is_same_v<T, double>)
          return format_real(v);
        else
          return ojson(v).dump();
      },
      s);
}

void pretty(const AstNode& node, int depth, std::string& out) {
  out.append(static_cast<std::size_t>(depth) * 2, ' ');
  out += node.kind;
  out += " [" + std::to_string(node.span.start.line) + ":" + std::to_string(node.span.start.column) + "-" +
         std::to_string(node.span.end.line) + ":" + std::to_string(node.span.end.column) + "]";
  for (const auto& [k, v] : node.attrs) out += " " + k + "=" + pretty_scalar(v);
  out += '\n';
  for (const auto& c : node.children) pretty(c, depth + 1, out);
}

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("malformed AST JSON: " + what); }

const ojson& field(const ojson& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing '") + name + "'");
  return j.at(name);
}

SourcePosition position_from(const ojson& j) {
  if (!j.is_object() || j.size() != 3) bad("position must have line, col, off");
  SourcePosition p;
  p.line = field(j, "line").get<std::uint32_t>();
  p.column = field(j, "col").get<std::uint32_t>();
  p.offset = field(j, "off").get<std::size_t>();
  return p;
}

Scalar scalar_from(const ojson& j) {
  switch (j.type()) {
    case ojson::value_t::string:
      return j.get<std::string>();
    case ojson::value_t::boolean:
      return j.get<bool>();
    case ojson::value_t::number_integer:
    case ojson::value_t::number_unsigned:
      return j.get<std::int64_t>();
    case ojson::value_t::number_float:
      return j.get<double>();
    default:
      bad("attribute values must be scalars");
  }
}

AstNode node_from(const ojson& j) {
  if (!j.is_object() || j.size() != 4) bad("node must have exactly kind, span, attrs, children");
  AstNode node;
  const ojson& kind = field(j, "kind");
  if (!kind.is_string()) bad("kind must be a string");
  node.kind = kind.get<std::string>();
  const ojson& span = field(j, "span");
  if (span.size() != 2) bad("span must have start and end");
  node.span.start = position_from(field(span, "start"));
  node.span.end = position_from(field(span, "end"));
  const ojson& attrs = field(j, "attrs");
  if (!attrs.is_object()) bad("attrs must be an object");
  for (const auto& [k, v] : attrs.items()) node.attrs[k] = scalar_from(v);
  const ojson& children = field(j, "children");
  if (!children.is_array()) bad("children must be an array");
  for (const auto& c : children) node.children.push_back(node_from(c));
  return node;
}

}  // namespace

std::string serialize_ast(const AstNode& root, AstFormat format) {
  if (format == AstFormat::Json) return node_json(root).dump();
  std::string out;
  pretty(root, 0, out);
  return out;
}

AstNode deserialize_ast(std::string_view json) {
  ojson j;
  try {
    j = ojson::parse(json);
  } catch (const ojson::exception& e) {
    bad(e.what());
  }
  try {
    return node_from(j);
  } catch (const ojson::exception& e) {
    bad(e.what());
  }
}

bool structurally_equal(const AstNode& a, const AstNode& b, bool compare_spans) {
  if (a.kind != b.kind || a.attrs != b.attrs || a.children.size() != b.children.size()) return false;
  if (compare_spans && !(a.span == b.span)) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!structurally_equal(a.children[i], b.children[i], compare_spans)) return false;
  return true;
}

bool spans_nest(const AstNode& root) {
  for (const auto& c : root.children)
    if (!root.span.contains(c.span) || !spans_nest(c)) return false;
  return root.span.start.offset <= root.span.end.offset;
}

}  // namespace qparse::frontend
