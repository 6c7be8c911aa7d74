// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/requests.hpp"
#include "argrec/lm/ngram_model.hpp"
#include "argrec/pipeline/config.hpp"
#include "argrec/pipeline/heavy_scorer.hpp"
#include "argrec/pipeline/ranking.hpp"
#include "argrec/typesys/context.hpp"

#include <string>
#include <vector>

namespace argrec::pipeline {

inline constexpr int kHeavyContextTokens = 20;

struct RecommendDeps {
  const lm::NGramModel *model = nullptr;
  lm::LayerStack layers; // outermost first, file cache last
  const features::RecentnessTables *tables = nullptr;
  HeavyScorer *heavy = nullptr;
};

struct RankedList {
  std::vector<ScoredCandidate> items;
  bool unresolved = false;
  std::string error;
  size_t generated = 0;
  size_t reduced = 0; // after the rules
  size_t survivors = 0; // after light ranking
  std::vector<std::string> warnings;
};

// LM sub-tokens of the last `maxTokens` lexical tokens before `offset`.
std::vector<std::string> contextTokens(const corpus::CompilationUnit &unit, uint32_t offset,
                                       size_t maxTokens);

RankedList recommend(const corpus::ArRequest &r, const types::UnitContext &ctx, int k,
                     const PipelineConfig &cfg, const RecommendDeps &deps);

// Ablation: whole arguments decoded by beam search, no validity filtering.
// Each item's rendered text is the decoded sub-token sequence.
RankedList beamBaselineRecommend(const corpus::ArRequest &r, int k, const lm::NGramModel &model,
                                 const lm::LayerStack &layers, int width = 10, int maxLen = 8);

} // namespace argrec::pipeline
