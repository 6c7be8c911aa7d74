// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace argrec {

// 1-based line/column plus a 0-based byte offset into the source text.
struct SourcePos {
  uint32_t offset = 0;
  uint32_t line = 1;
  uint32_t col = 1;

  friend bool operator==(const SourcePos &a, const SourcePos &b) {
    return a.offset == b.offset;
  }
  friend auto operator<=>(const SourcePos &a, const SourcePos &b) {
    return a.offset <=> b.offset;
  }
};

// Half-open byte range [begin, end).
struct SourceSpan {
  SourcePos begin;
  SourcePos end;

  bool contains(const SourcePos &p) const {
    return begin.offset <= p.offset && p.offset < end.offset;
  }
  bool contains(const SourceSpan &o) const {
    return begin.offset <= o.begin.offset && o.end.offset <= end.offset;
  }
  bool disjoint(const SourceSpan &o) const {
    return end.offset <= o.begin.offset || o.end.offset <= begin.offset;
  }
};

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &file, uint32_t line, uint32_t col,
             const std::string &what)
      : Error(file + ":" + std::to_string(line) + ":" + std::to_string(col) +
              ": " + what),
        line_(line), col_(col) {}

  uint32_t line() const { return line_; }
  uint32_t col() const { return col_; }

private:
  uint32_t line_;
  uint32_t col_;
};

// Raised when two inputs declare the same qualified type.
class IndexError : public Error {
public:
  using Error::Error;
};

// Caller broke a documented precondition.
class ContractViolation : public Error {
public:
  using Error::Error;
};

} // namespace argrec
