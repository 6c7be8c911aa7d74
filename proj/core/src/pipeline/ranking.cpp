// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/pipeline/ranking.hpp"

#include <algorithm>
#include <cmath>

namespace argrec::pipeline {

double combineScore(double p, double parasimNorm, std::optional<double> recent) {
  if (recent)
    return std::sqrt(p * parasimNorm * *recent);
  return p * parasimNorm;
}

bool rankedBefore(double sa, const std::string &ra, double sb, const std::string &rb) {
  if (sa != sb)
    return sa > sb;
  return ra < rb;
}

void lightRank(std::vector<ScoredCandidate> &cands, int rt) {
  std::sort(cands.begin(), cands.end(), [](const ScoredCandidate &a, const ScoredCandidate &b) {
    return rankedBefore(a.scoreLr, a.cand.rendered, b.scoreLr, b.cand.rendered);
  });
  if (rt >= 0 && cands.size() > static_cast<size_t>(rt))
    cands.resize(static_cast<size_t>(rt));
}

} // namespace argrec::pipeline
