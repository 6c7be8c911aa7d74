// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace argrec::corpus {
namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract",   "assert",    "boolean",   "break",      "byte",
    "case",       "catch",     "char",      "class",      "const",
    "continue",   "default",   "do",        "double",     "else",
    "enum",       "extends",   "final",     "finally",    "float",
    "for",        "goto",      "if",        "implements", "import",
    "instanceof", "int",       "interface", "long",       "native",
    "new",        "package",   "private",   "protected",  "public",
    "return",     "short",     "static",    "strictfp",   "super",
    "switch",     "synchronized", "this",   "throw",      "throws",
    "transient",  "try",       "void",      "volatile",   "while",
    "true",       "false",     "null"};

// Longest first. '>' is always emitted alone so that nested generic closers
// stay separable; the expression parser reassembles shifts.
constexpr std::array<std::string_view, 30> kOperators = {
    "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=",
    "<=",  ">=",  "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=",
    "<<",  "(",   ")",  "{",  "}",  "[",  "]",  ";",  ",",  "."};

constexpr std::string_view kSingleOps = "@=<>!~?:+-*/&|^%";

bool isIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         static_cast<unsigned char>(c) >= 0x80;
}
bool isIdentPart(char c) {
  return isIdentStart(c) || std::isdigit(static_cast<unsigned char>(c));
}

class Lexer {
public:
  Lexer(std::string_view src, const std::string &file) : src_(src), file_(file) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skipTrivia();
      if (i_ >= src_.size())
        break;
      out.push_back(next());
    }
    checkBalance(out);
    return out;
  }

private:
  SourcePos here() const { return {static_cast<uint32_t>(i_), line_, col_}; }

  void advance(size_t n = 1) {
    for (size_t k = 0; k < n && i_ < src_.size(); ++k) {
      if (src_[i_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++i_;
    }
  }

  [[noreturn]] void fail(const SourcePos &p, const std::string &msg) const {
    throw ParseError(file_, p.line, p.col, msg);
  }

  void skipTrivia() {
    while (i_ < src_.size()) {
      char c = src_[i_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (src_.substr(i_, 2) == "//") {
        while (i_ < src_.size() && src_[i_] != '\n')
          advance();
      } else if (src_.substr(i_, 2) == "/*") {
        SourcePos start = here();
        advance(2);
        while (i_ < src_.size() && src_.substr(i_, 2) != "*/")
          advance();
        if (i_ >= src_.size())
          fail(start, "unterminated comment");
        advance(2);
      } else {
        break;
      }
    }
  }

  Token next() {
    SourcePos start = here();
    char c = src_[i_];
    if (isIdentStart(c)) {
      size_t j = i_;
      while (j < src_.size() && isIdentPart(src_[j]))
        ++j;
      std::string word(src_.substr(i_, j - i_));
      advance(j - i_);
      return {word, isJavaKeyword(word) ? TokenKind::Keyword : TokenKind::Identifier,
              start};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i_ + 1 < src_.size() &&
         std::isdigit(static_cast<unsigned char>(src_[i_ + 1]))))
      return number(start);
    if (c == '"')
      return quoted(start, '"', TokenKind::StringLiteral, "string literal");
    if (c == '\'')
      return quoted(start, '\'', TokenKind::CharLiteral, "character literal");
    for (std::string_view op : kOperators) {
      if (src_.substr(i_, op.size()) == op) {
        advance(op.size());
        return {std::string(op), TokenKind::Operator, start};
      }
    }
    if (kSingleOps.find(c) != std::string_view::npos) {
      advance();
      return {std::string(1, c), TokenKind::Operator, start};
    }
    fail(start, std::string("unexpected character '") + c + "'");
  }

  Token number(const SourcePos &start) {
    size_t j = i_;
    bool isFloat = false;
    if (src_.substr(j, 2) == "0x" || src_.substr(j, 2) == "0X" ||
        src_.substr(j, 2) == "0b" || src_.substr(j, 2) == "0B") {
      j += 2;
      while (j < src_.size() &&
             (std::isxdigit(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
        ++j;
    } else {
      auto digits = [&] {
        while (j < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[j])) || src_[j] == '_'))
          ++j;
      };
      digits();
      if (j < src_.size() && src_[j] == '.' && j + 1 < src_.size() &&
          std::isdigit(static_cast<unsigned char>(src_[j + 1]))) {
        isFloat = true;
        ++j;
        digits();
      } else if (j < src_.size() && src_[j] == '.' &&
                 (j + 1 >= src_.size() || !isIdentStart(src_[j + 1]))) {
        // "1." is a float literal; "1.foo" is not something we accept anyway.
        isFloat = true;
        ++j;
      }
      if (j < src_.size() && (src_[j] == 'e' || src_[j] == 'E')) {
        isFloat = true;
        ++j;
        if (j < src_.size() && (src_[j] == '+' || src_[j] == '-'))
          ++j;
        digits();
      }
    }
    if (j < src_.size()) {
      char s = src_[j];
      if (s == 'f' || s == 'F' || s == 'd' || s == 'D') {
        isFloat = true;
        ++j;
      } else if (s == 'l' || s == 'L') {
        ++j;
      }
    }
    std::string text(src_.substr(i_, j - i_));
    advance(j - i_);
    return {text, isFloat ? TokenKind::FloatLiteral : TokenKind::IntLiteral, start};
  }

  Token quoted(const SourcePos &start, char quote, TokenKind kind,
               const char *what) {
    size_t j = i_ + 1;
    while (j < src_.size() && src_[j] != quote) {
      if (src_[j] == '\n')
        fail(start, std::string("unterminated ") + what);
      if (src_[j] == '\\')
        ++j;
      ++j;
    }
    if (j >= src_.size())
      fail(start, std::string("unterminated ") + what);
    ++j;
    std::string text(src_.substr(i_, j - i_));
    advance(j - i_);
    return {text, kind, start};
  }

  void checkBalance(const std::vector<Token> &toks) const {
    std::vector<const Token *> stack;
    for (const Token &t : toks) {
      if (t.kind != TokenKind::Operator)
        continue;
      if (t.text == "(" || t.text == "[" || t.text == "{") {
        stack.push_back(&t);
      } else if (t.text == ")" || t.text == "]" || t.text == "}") {
        char open = t.text == ")" ? '(' : t.text == "]" ? '[' : '{';
        if (stack.empty() || stack.back()->text[0] != open)
          fail(t.pos, describe(t.text[0]) + " without matching opener");
        stack.pop_back();
      }
    }
    if (!stack.empty())
      fail(stack.back()->pos, "unbalanced " + describe(stack.back()->text[0]));
  }

  static std::string describe(char c) {
    switch (c) {
    case '{':
    case '}':
      return std::string("brace '") + c + "'";
    case '(':
    case ')':
      return std::string("parenthesis '") + c + "'";
    default:
      return std::string("bracket '") + c + "'";
    }
  }

  std::string_view src_;
  const std::string &file_;
  size_t i_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
};

} // namespace

bool isJavaKeyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view source, const std::string &file) {
  return Lexer(source, file).run();
}

} // namespace argrec::corpus
