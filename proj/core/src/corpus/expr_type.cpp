// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/expr_type.hpp"

namespace argrec::corpus {
namespace {

constexpr std::array<std::string_view, kNumExprTypes> kNames = {
    "SimpleName",       "QualifiedName",  "FieldAccess",
    "MethodInvocation", "StringLiteral",  "NumberLiteral",
    "BooleanLiteral",   "CharacterLiteral", "NullLiteral",
    "TypeLiteral",      "ThisExpr",       "CastExpr",
    "ObjectCreation",   "ArrayCreation",  "ArrayAccess",
    "LambdaExpr",       "CompoundExpr"};

bool isNameChain(const Expr &e) {
  if (e.kind == ExprKind::Name)
    return true;
  return e.kind == ExprKind::FieldAccess && e.target && isNameChain(*e.target);
}

} // namespace

std::string_view exprTypeName(ExprType t) { return kNames[static_cast<int>(t)]; }

std::optional<ExprType> exprTypeFromName(std::string_view name) {
  for (int i = 0; i < kNumExprTypes; ++i)
    if (kNames[i] == name)
      return static_cast<ExprType>(i);
  return std::nullopt;
}

ExprType classifyExpr(const Expr &e) {
  switch (e.kind) {
  case ExprKind::Name:
    return ExprType::SimpleName;
  case ExprKind::FieldAccess:
    return isNameChain(e) ? ExprType::QualifiedName : ExprType::FieldAccess;
  case ExprKind::MethodCall:
    return ExprType::MethodInvocation;
  case ExprKind::New:
    return ExprType::ObjectCreation;
  case ExprKind::NewArray:
    return ExprType::ArrayCreation;
  case ExprKind::ArrayAccess:
    return ExprType::ArrayAccess;
  case ExprKind::Cast:
    return ExprType::CastExpr;
  case ExprKind::This:
    return ExprType::ThisExpr;
  case ExprKind::ClassLit:
    return ExprType::TypeLiteral;
  case ExprKind::Lambda:
  case ExprKind::MethodRef:
    return ExprType::LambdaExpr;
  case ExprKind::Literal:
    switch (e.literal) {
    case LiteralKind::String:
      return ExprType::StringLiteral;
    case LiteralKind::Char:
      return ExprType::CharacterLiteral;
    case LiteralKind::Int:
    case LiteralKind::Float:
      return ExprType::NumberLiteral;
    case LiteralKind::Boolean:
      return ExprType::BooleanLiteral;
    case LiteralKind::Null:
      return ExprType::NullLiteral;
    case LiteralKind::None:
      break;
    }
    return ExprType::CompoundExpr;
  case ExprKind::Unary:
    if ((e.name == "-" || e.name == "+") && e.target &&
        e.target->kind == ExprKind::Literal &&
        (e.target->literal == LiteralKind::Int ||
         e.target->literal == LiteralKind::Float))
      return ExprType::NumberLiteral;
    return ExprType::CompoundExpr;
  default:
    return ExprType::CompoundExpr;
  }
}

} // namespace argrec::corpus
