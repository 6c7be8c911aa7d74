// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/lm/lm_tokens.hpp"

#include "argrec/corpus/subtokens.hpp"
#include "argrec/lm/vocabulary.hpp"

namespace argrec::lm {

using corpus::TokenKind;

void appendLmTokens(const corpus::Token &t, std::vector<std::string> &out) {
  switch (t.kind) {
  case TokenKind::Identifier: {
    auto subs = corpus::splitSubtokens(t.text);
    if (subs.empty())
      out.push_back(t.text);
    for (auto &s : subs)
      out.push_back(std::move(s));
    return;
  }
  case TokenKind::StringLiteral:
    out.emplace_back(kStrToken);
    return;
  case TokenKind::CharLiteral:
    out.emplace_back(kCharToken);
    return;
  case TokenKind::IntLiteral:
  case TokenKind::FloatLiteral:
    out.emplace_back(kNumToken);
    return;
  case TokenKind::Hole:
    out.emplace_back(kHoleToken);
    return;
  default:
    out.push_back(t.text);
  }
}

std::vector<std::string> lmTokens(const std::vector<corpus::Token> &toks, size_t begin,
                                  size_t end) {
  std::vector<std::string> out;
  out.reserve((end - begin) * 2);
  for (size_t i = begin; i < end && i < toks.size(); ++i)
    appendLmTokens(toks[i], out);
  return out;
}

std::vector<std::string> lmTokens(const std::vector<corpus::Token> &toks) {
  return lmTokens(toks, 0, toks.size());
}

std::vector<std::string> candidateLmTokens(std::string_view rendered, int holes) {
  auto toks = corpus::tokenize(rendered);
  std::vector<std::string> out;
  for (const auto &t : toks) {
    appendLmTokens(t, out);
    if (holes > 0 && (t.is("(") || t.is("[")))
      break;
  }
  return out;
}

} // namespace argrec::lm
