// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace argrec::features {

inline constexpr double kDefaultParasimFloor = 0.1;

// Terms of `a`, in order, that also occur somewhere in `b`.
std::vector<std::string> comTerms(const std::vector<std::string> &a,
                                  const std::vector<std::string> &b);

double parasimTerms(const std::vector<std::string> &c, const std::vector<std::string> &p);

// `c` may be a rendered candidate; only its identifiers contribute terms.
double parasim(std::string_view c, std::string_view p);

double normalizeParasim(double v, double x = kDefaultParasimFloor);

} // namespace argrec::features
