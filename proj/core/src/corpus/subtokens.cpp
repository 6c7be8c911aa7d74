// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/subtokens.hpp"

#include "argrec/corpus/lexer.hpp"

#include <cctype>

namespace argrec::corpus {
namespace {

bool isUpper(char c) { return std::isupper(static_cast<unsigned char>(c)); }
bool isLower(char c) { return std::islower(static_cast<unsigned char>(c)); }
bool isDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool isWordChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

} // namespace

std::vector<std::string> splitSubtokens(std::string_view identifier) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty())
      out.push_back(std::move(cur));
    cur.clear();
  };
  char prev = 0;
  for (char c : identifier) {
    if (!std::isalnum(static_cast<unsigned char>(c))) {
      flush();
      prev = 0;
      continue;
    }
    if (isUpper(c) && (isLower(prev) || isDigit(prev)))
      flush();
    cur += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    prev = c;
  }
  flush();
  return out;
}

std::vector<std::string> subtokensOfText(std::string_view text) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '"' || text[i] == '\'') {
      // Literal contents are not identifiers.
      char q = text[i++];
      while (i < text.size() && text[i] != q) {
        if (text[i] == '\\')
          ++i;
        ++i;
      }
      ++i;
      continue;
    }
    if (!isWordChar(text[i]) || isDigit(text[i])) {
      // Skip numerals as a whole.
      if (isDigit(text[i]))
        while (i < text.size() && (isWordChar(text[i]) || text[i] == '.'))
          ++i;
      else
        ++i;
      continue;
    }
    size_t j = i;
    while (j < text.size() && isWordChar(text[j]))
      ++j;
    std::string_view word = text.substr(i, j - i);
    if (!isJavaKeyword(word))
      for (auto &s : splitSubtokens(word))
        out.push_back(std::move(s));
    i = j;
  }
  return out;
}

} // namespace argrec::corpus
