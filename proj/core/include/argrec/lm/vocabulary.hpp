// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace argrec::lm {

inline constexpr std::string_view kUnkToken = "<unk>";
inline constexpr std::string_view kHoleToken = "<hole>";

class Vocabulary {
public:
  static constexpr int kUnk = 0;
  static constexpr int kHole = 1;

  Vocabulary();
  // Tokens seen at least `minCount` times, sorted; the rest map to UNK.
  static Vocabulary build(const std::vector<std::vector<std::string>> &streams, int minCount);
  static Vocabulary fromTokens(const std::vector<std::string> &tokens);

  int id(std::string_view token) const;
  const std::string &token(int id) const { return tokens_[id]; }
  int size() const { return static_cast<int>(tokens_.size()); }
  const std::vector<std::string> &tokens() const { return tokens_; }
  std::vector<int> encode(const std::vector<std::string> &toks) const;

private:
  void add(std::string tok);

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

} // namespace argrec::lm
