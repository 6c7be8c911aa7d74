// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/lm/ngram_model.hpp"

#include <string>
#include <vector>

namespace argrec::lm {

struct BeamResult {
  std::vector<int> tokens; // boundary excluded
  double prob = 0.0;       // boundary included
};

bool isBoundary(const std::string &tok, int depth);

// Whole-argument decoding: a sequence ends at `,` or `)` at bracket depth
// 0. UNK and HOLE are never emitted. `maxLen` counts the boundary token.
// Sorted by probability, ties by token text.
std::vector<BeamResult> beamSearch(const NGramModel &model, const LayerStack &layers,
                                   const std::vector<int> &ctx, int k, int width, int maxLen);

} // namespace argrec::lm
