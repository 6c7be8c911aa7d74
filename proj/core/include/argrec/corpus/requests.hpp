// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/ast.hpp"
#include "argrec/corpus/expr_type.hpp"

#include <optional>
#include <string>
#include <vector>

namespace argrec::types {
class TypeIndex;
class UnitContext;
} // namespace argrec::types

namespace argrec::corpus {

struct Gold {
  std::string text; // canonical token text of the argument
  ExprType type = ExprType::CompoundExpr;
  const Expr *expr = nullptr;
};

// A request for the pos-th argument of a call. The context is the unit up
// to `location`.
struct ArRequest {
  const CompilationUnit *unit = nullptr;
  int callIndex = -1; // into unit->calls
  const Expr *call = nullptr;
  std::string callee; // method name, "this"/"super", or created type
  const Expr *receiver = nullptr;
  int pos = 1;
  int arity = 0; // arguments written at the call
  SourcePos location;
  SourcePos calleePos;
  int type = -1;
  int method = -1;
  bool inStatic = false;
  std::optional<Gold> gold; // absent for holes
  bool unresolved = false;
  bool varargs = false;

  bool isHole() const { return !gold.has_value(); }
};

// One request per written argument (holes included) of every call with at
// least one argument, in argument order.
std::vector<ArRequest> extractRequests(const CompilationUnit &unit,
                                       const types::UnitContext &ctx);
std::vector<ArRequest> extractRequests(const CompilationUnit &unit,
                                       const types::TypeIndex &index);

// The argument slot at a 1-based cursor: the innermost call argument whose
// slot (from the preceding '(' or ',' through the argument end) contains it.
std::optional<ArRequest> requestAtCursor(const CompilationUnit &unit,
                                         const types::UnitContext &ctx,
                                         uint32_t line, uint32_t col);

// Request for a named call at a given argument position: the first call to
// `callee` whose argument list has a slot `pos` (preferring a hole).
std::optional<ArRequest> requestForCallee(const CompilationUnit &unit,
                                          const types::UnitContext &ctx,
                                          const std::string &callee, int pos);

} // namespace argrec::corpus
