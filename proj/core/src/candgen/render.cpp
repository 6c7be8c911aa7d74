// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/candgen/render.hpp"

#include "argrec/corpus/lexer.hpp"

namespace argrec::candgen {

using corpus::Expr;
using corpus::ExprKind;

const std::vector<DefaultLiteral> &defaultLiterals() {
  static const std::vector<DefaultLiteral> kLits = {
      {"\"<EMPTY_STRING>\"", "java.lang.String", ExprType::StringLiteral},
      {"0", "int", ExprType::NumberLiteral},
      {"0L", "long", ExprType::NumberLiteral},
      {"0.0", "double", ExprType::NumberLiteral},
      {"0.0f", "float", ExprType::NumberLiteral},
      {"false", "boolean", ExprType::BooleanLiteral},
      {"true", "boolean", ExprType::BooleanLiteral},
      {"'\\0'", "char", ExprType::CharacterLiteral},
      {"null", "null", ExprType::NullLiteral},
  };
  return kLits;
}

std::string holeArgs(int n) {
  std::string s = "(";
  for (int i = 1; i < n; ++i)
    s += ", ";
  return s + ")";
}

std::string placeholderize(const Expr &e, const corpus::CompilationUnit &unit) {
  switch (e.kind) {
  case ExprKind::MethodCall: {
    std::string s;
    if (e.target)
      s = unit.textOf(e.target->span) + ".";
    return s + e.name + holeArgs(static_cast<int>(e.args.size()));
  }
  case ExprKind::New: {
    std::string s = "new " + e.type.name;
    if (!e.type.args.empty())
      s += "<>";
    return s + holeArgs(static_cast<int>(e.args.size()));
  }
  case ExprKind::NewArray: {
    std::string s = "new " + e.type.name;
    for (int i = 0; i < std::max(1, e.type.dims); ++i)
      s += "[]";
    return s;
  }
  case ExprKind::ArrayAccess:
    return unit.textOf(e.target->span) + "[]";
  default:
    return unit.textOf(e.span);
  }
}

int holeCount(const Expr &e) {
  switch (e.kind) {
  case ExprKind::MethodCall:
  case ExprKind::New:
    return static_cast<int>(e.args.size());
  case ExprKind::NewArray:
    return e.init ? 0 : std::max<int>(1, static_cast<int>(e.args.size()));
  case ExprKind::ArrayAccess:
    return 1;
  default:
    return 0;
  }
}

std::string normalizeText(std::string_view text) {
  std::vector<corpus::Token> toks;
  try {
    toks = corpus::tokenize(text);
  } catch (const ParseError &) {
    return std::string(text);
  }
  std::vector<std::string_view> parts;
  parts.reserve(toks.size());
  for (const auto &t : toks)
    parts.push_back(t.text);
  return corpus::joinTokens(parts);
}

std::string renderCandidate(const Candidate &c) { return c.rendered; }

} // namespace argrec::candgen
