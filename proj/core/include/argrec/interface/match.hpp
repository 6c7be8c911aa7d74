// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/candgen/candidate.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/typesys/context.hpp"

#include <string>
#include <string_view>

namespace argrec::interface {

using corpus::ExprType;

struct CanonicalGold {
  std::string text; // normalized, placeholderized
  ExprType type = ExprType::CompoundExpr;
  // A local shadows the field, so `this.f` and `f` name different things.
  bool thisAmbiguous = false;
};

// Canonical form of a request's gold argument, written the way the
// generator renders candidates: calls, creations and array accesses get
// empty argument slots, `this.f` becomes `f` unless shadowed, and
// `Type.F` / `Type.m()` lose the qualifier when the member is reachable
// unqualified at the request. Throws ContractViolation for holes.
CanonicalGold canonicalizeGold(const corpus::ArRequest &r, const types::UnitContext &ctx);

// Context-free form from the gold text alone (normalized only).
CanonicalGold plainGold(std::string_view text, ExprType type);

bool matchesGold(std::string_view rendered, ExprType candType, const CanonicalGold &gold);
bool matchesGold(const candgen::Candidate &c, const CanonicalGold &gold);

} // namespace argrec::interface
