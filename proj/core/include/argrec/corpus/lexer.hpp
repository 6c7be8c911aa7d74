// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/common.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace argrec::corpus {

enum class TokenKind {
  Identifier,
  Keyword,
  IntLiteral,
  FloatLiteral,
  StringLiteral,
  CharLiteral,
  Operator,
  // Zero-width marker for a missing call argument.
  Hole,
};

struct Token {
  std::string text;
  TokenKind kind = TokenKind::Operator;
  SourcePos pos;

  bool is(std::string_view s) const {
    return kind != TokenKind::StringLiteral && kind != TokenKind::CharLiteral &&
           text == s;
  }
  bool isIdent() const { return kind == TokenKind::Identifier; }
  bool isLiteral() const {
    return kind == TokenKind::IntLiteral || kind == TokenKind::FloatLiteral ||
           kind == TokenKind::StringLiteral || kind == TokenKind::CharLiteral;
  }
};

bool isJavaKeyword(std::string_view word);

// Tokenizes Java-subset source. Comments are dropped. Throws ParseError on
// unterminated literals/comments and on unbalanced (), [] or {}.
std::vector<Token> tokenize(std::string_view source,
                            const std::string &file = "<input>");

} // namespace argrec::corpus
