// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/ast.hpp"

#include <array>
#include <optional>
#include <string_view>

namespace argrec::corpus {

// Syntactic category of an argument expression. The first 15 are generated;
// LambdaExpr and CompoundExpr exist for classification only.
enum class ExprType {
  SimpleName,
  QualifiedName,
  FieldAccess,
  MethodInvocation,
  StringLiteral,
  NumberLiteral,
  BooleanLiteral,
  CharacterLiteral,
  NullLiteral,
  TypeLiteral,
  ThisExpr,
  CastExpr,
  ObjectCreation,
  ArrayCreation,
  ArrayAccess,
  LambdaExpr,
  CompoundExpr,
};

inline constexpr int kNumExprTypes = 17;
inline constexpr int kNumSupportedExprTypes = 15;

std::string_view exprTypeName(ExprType t);
std::optional<ExprType> exprTypeFromName(std::string_view name);

inline bool isSupported(ExprType t) {
  return t != ExprType::LambdaExpr && t != ExprType::CompoundExpr;
}
inline bool isLiteralType(ExprType t) {
  return t == ExprType::StringLiteral || t == ExprType::NumberLiteral ||
         t == ExprType::BooleanLiteral || t == ExprType::CharacterLiteral ||
         t == ExprType::NullLiteral;
}

// Classifies an argument expression. `a.b` over plain names is a
// QualifiedName; `this.f` and `m().f` are FieldAccess; a negated number
// literal counts as NumberLiteral; method references count as LambdaExpr.
ExprType classifyExpr(const Expr &e);

} // namespace argrec::corpus
