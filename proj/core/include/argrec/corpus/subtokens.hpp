// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace argrec::corpus {

// Splits an identifier on underscores and lower-to-upper case transitions.
// Digits stay with the preceding run. Output is lowercased with empty
// segments dropped, e.g. "getUserName2" -> {get, user, name2}.
std::vector<std::string> splitSubtokens(std::string_view identifier);

// Sub-tokens of every non-keyword identifier in `text`, in order.
std::vector<std::string> subtokensOfText(std::string_view text);

} // namespace argrec::corpus
