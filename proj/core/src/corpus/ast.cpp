// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/ast.hpp"

#include <algorithm>
#include <cctype>

namespace argrec::corpus {

std::string TypeRef::erasedText() const {
  std::string s = name;
  for (int i = 0; i < dims; ++i)
    s += "[]";
  return s;
}

std::string TypeRef::text() const {
  std::string s = name;
  if (!args.empty()) {
    s += "<";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i)
        s += ",";
      s += args[i].text();
    }
    s += ">";
  }
  for (int i = 0; i < dims; ++i)
    s += "[]";
  return s;
}

int CompilationUnit::typeAt(const SourcePos &pos) const {
  int best = -1;
  for (size_t i = 0; i < types.size(); ++i) {
    if (!types[i].span.contains(pos))
      continue;
    if (best < 0 || types[best].span.contains(types[i].span))
      best = static_cast<int>(i);
  }
  return best;
}

int CompilationUnit::topLevelAt(const SourcePos &pos) const {
  for (int t : topLevel)
    if (types[t].span.contains(pos))
      return t;
  return -1;
}

namespace {

bool wordy(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' ||
         c == '"' || c == '\'';
}

} // namespace

std::string joinTokens(const std::vector<std::string_view> &toks) {
  std::string out;
  std::string_view prev;
  for (std::string_view t : toks) {
    if (!out.empty()) {
      bool space = prev == "," || (prev == ")" && !t.empty() && wordy(t.front())) ||
                   (!prev.empty() && !t.empty() && wordy(prev.back()) && wordy(t.front()));
      if (space)
        out += ' ';
    }
    out += t;
    prev = t;
  }
  return out;
}

std::string CompilationUnit::textOf(const SourceSpan &span) const {
  auto lo = std::lower_bound(tokens.begin(), tokens.end(), span.begin.offset,
                             [](const Token &t, uint32_t off) { return t.pos.offset < off; });
  std::vector<std::string_view> parts;
  for (auto it = lo; it != tokens.end(); ++it) {
    if (it->kind == TokenKind::Hole) {
      if (it->pos.offset >= span.end.offset && span.end.offset > span.begin.offset)
        break;
      if (it->pos.offset > span.end.offset)
        break;
    } else if (it->pos.offset >= span.end.offset) {
      break;
    }
    parts.push_back(it->text);
  }
  return joinTokens(parts);
}

size_t CompilationUnit::tokenIndexAt(uint32_t offset) const {
  auto lo = std::lower_bound(tokens.begin(), tokens.end(), offset,
                             [](const Token &t, uint32_t off) { return t.pos.offset < off; });
  return static_cast<size_t>(lo - tokens.begin());
}

} // namespace argrec::corpus
