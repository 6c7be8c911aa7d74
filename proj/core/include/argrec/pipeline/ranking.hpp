// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/candgen/candidate.hpp"
#include "argrec/features/recentness.hpp"

#include <optional>
#include <vector>

namespace argrec::pipeline {

// (p * parasimNorm * recent^v)^(1/(1+v)); v = 1 iff `recent` is present.
double combineScore(double p, double parasimNorm, std::optional<double> recent);

struct ScoredCandidate {
  candgen::Candidate cand;
  features::FeatureVector features;
  double lightProb = 0.0;
  double prob = 0.0; // light or heavy, whichever was selected
  bool heavy = false;
  std::optional<double> recent;
  double scoreLr = 0.0;
  double score = 0.0;
  unsigned rules = 0;
};

// Score descending, rendered text ascending.
bool rankedBefore(double sa, const std::string &ra, double sb, const std::string &rb);

// Sorts by scoreLr and keeps the first `rt`.
void lightRank(std::vector<ScoredCandidate> &cands, int rt);

} // namespace argrec::pipeline
