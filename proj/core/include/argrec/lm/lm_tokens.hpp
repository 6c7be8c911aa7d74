// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/lexer.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace argrec::lm {

inline constexpr std::string_view kStrToken = "<str>";
inline constexpr std::string_view kNumToken = "<num>";
inline constexpr std::string_view kCharToken = "<char>";

// Identifiers become their sub-tokens, literals an abstract class token,
// holes `<hole>`; keywords and operators pass through.
void appendLmTokens(const corpus::Token &t, std::vector<std::string> &out);

std::vector<std::string> lmTokens(const std::vector<corpus::Token> &toks, size_t begin,
                                  size_t end);
std::vector<std::string> lmTokens(const std::vector<corpus::Token> &toks);

// LM view of a rendered candidate. With holes the sequence stops after the
// opening bracket of the first slot.
std::vector<std::string> candidateLmTokens(std::string_view rendered, int holes);

} // namespace argrec::lm
