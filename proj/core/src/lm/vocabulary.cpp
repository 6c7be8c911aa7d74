// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/lm/vocabulary.hpp"

#include <map>

namespace argrec::lm {

Vocabulary::Vocabulary() {
  add(std::string(kUnkToken));
  add(std::string(kHoleToken));
}

void Vocabulary::add(std::string tok) {
  if (ids_.count(tok))
    return;
  ids_.emplace(tok, static_cast<int>(tokens_.size()));
  tokens_.push_back(std::move(tok));
}

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>> &streams,
                             int minCount) {
  std::map<std::string, long> freq;
  for (const auto &s : streams)
    for (const auto &t : s)
      ++freq[t];
  Vocabulary v;
  for (const auto &[tok, n] : freq)
    if (n >= minCount)
      v.add(tok);
  return v;
}

Vocabulary Vocabulary::fromTokens(const std::vector<std::string> &tokens) {
  Vocabulary v;
  for (const auto &t : tokens)
    v.add(t);
  return v;
}

int Vocabulary::id(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? kUnk : it->second;
}

std::vector<int> Vocabulary::encode(const std::vector<std::string> &toks) const {
  std::vector<int> out;
  out.reserve(toks.size());
  for (const auto &t : toks)
    out.push_back(id(t));
  return out;
}

} // namespace argrec::lm
