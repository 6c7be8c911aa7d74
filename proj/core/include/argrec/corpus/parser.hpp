// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/ast.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace argrec::corpus {

// Parses a Java-subset compilation unit. Partial calls such as `g(a, )` are
// accepted and yield Hole arguments. Statements and members outside the
// supported subset are skipped and recorded in CompilationUnit::opaque.
// Throws ParseError for unbalanced brackets and unterminated literals.
CompilationUnit parseUnit(std::string_view source,
                          const std::string &path = "<input>");

// Parses a standalone expression (holes allowed). Throws ParseError when the
// text is not a single well-formed expression.
std::unique_ptr<Expr> parseExpression(std::string_view text);

} // namespace argrec::corpus
