// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/expr_type.hpp"
#include "argrec/typesys/type_index.hpp"

#include <string>
#include <vector>

namespace argrec::candgen {

using corpus::ExprType;

enum class BaseKind { Variable, HiddenField, Method, StaticType, Literal, This, Creation };

struct Candidate {
  ExprType exprType = ExprType::SimpleName;
  std::string rendered;
  std::string resultType; // erased, qualified
  int holes = 0;

  BaseKind base = BaseKind::Variable;
  std::string baseName; // variable, method, or type the expression starts from
  std::string receiver; // rendered receiver of a member access, if any
  const types::MemberSig *member = nullptr;
  std::string owner; // declaring type of `member`

  // Static-derived: Type.F, Type.sm(), or members brought in by static import.
  bool staticDerived = false;
  std::string staticType; // qualified type named by the qualifier or import

  bool isVariable = false;
  std::string varName; // identifier scanned for accessing-recentness
  int declBlock = -1;  // scope block of the declaration; 0 for globals

  // Indices into ExpectedSet::types this candidate is compatible with.
  std::vector<int> expected;
};

} // namespace argrec::candgen
