// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/features/parasim.hpp"

#include "argrec/corpus/subtokens.hpp"

#include <algorithm>

namespace argrec::features {

std::vector<std::string> comTerms(const std::vector<std::string> &a,
                                  const std::vector<std::string> &b) {
  std::vector<std::string> out;
  for (const auto &t : a)
    if (std::find(b.begin(), b.end(), t) != b.end())
      out.push_back(t);
  return out;
}

double parasimTerms(const std::vector<std::string> &c, const std::vector<std::string> &p) {
  size_t denom = c.size() + p.size();
  if (denom == 0)
    return 0.0;
  size_t num = comTerms(c, p).size() + comTerms(p, c).size();
  return static_cast<double>(num) / static_cast<double>(denom);
}

double parasim(std::string_view c, std::string_view p) {
  return parasimTerms(corpus::subtokensOfText(c), corpus::splitSubtokens(p));
}

double normalizeParasim(double v, double x) { return x + v * (1.0 - x); }

} // namespace argrec::features
