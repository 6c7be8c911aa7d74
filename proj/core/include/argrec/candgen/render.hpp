// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/candgen/candidate.hpp"
#include "argrec/corpus/ast.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace argrec::candgen {

struct DefaultLiteral {
  std::string_view text;
  std::string_view type;
  ExprType exprType;
};

const std::vector<DefaultLiteral> &defaultLiterals();

// "(" + n empty slots + ")": 0 or 1 slot renders "()", 2 render "(, )".
std::string holeArgs(int n);

// Top-level argument slots, array dims and array indices emptied. Other
// expressions come back as their token text.
std::string placeholderize(const corpus::Expr &e, const corpus::CompilationUnit &unit);

// Number of empty slots `placeholderize` leaves in `e`.
int holeCount(const corpus::Expr &e);

// Canonical token text: re-lexed and joined without redundant whitespace.
std::string normalizeText(std::string_view text);

std::string renderCandidate(const Candidate &c);

} // namespace argrec::candgen
