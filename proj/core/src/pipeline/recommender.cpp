// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/pipeline/recommender.hpp"

#include "argrec/candgen/generator.hpp"
#include "argrec/common.hpp"
#include "argrec/lm/beam_search.hpp"
#include "argrec/lm/lm_tokens.hpp"
#include "argrec/pipeline/reduction.hpp"
#include "argrec/typesys/accessible.hpp"
#include "argrec/typesys/expected.hpp"

#include <algorithm>

namespace argrec::pipeline {

std::vector<std::string> contextTokens(const corpus::CompilationUnit &unit, uint32_t offset,
                                       size_t maxTokens) {
  size_t end = unit.tokenIndexAt(offset);
  size_t begin = end > maxTokens ? end - maxTokens : 0;
  auto toks = lm::lmTokens(unit.tokens, begin, end);
  if (toks.size() > maxTokens)
    toks.erase(toks.begin(), toks.end() - static_cast<long>(maxTokens));
  return toks;
}

RankedList recommend(const corpus::ArRequest &r, const types::UnitContext &ctx, int k,
                     const PipelineConfig &cfg, const RecommendDeps &deps) {
  validate(cfg);
  if (!deps.model || !deps.tables)
    throw ContractViolation("recommend needs a language model and recentness tables");
  RankedList out;
  const auto &unit = ctx.unit();
  types::Site site = ctx.siteFor(unit.calls[r.callIndex], r.location);
  auto expected = types::expectedTypes(ctx.resolveCall(*r.call, site), r.pos);
  if (cfg.objectMapping)
    types::mapObjectToTypeParam(expected, ctx.index());
  if (expected.empty()) {
    out.unresolved = true;
    out.error = "cannot resolve an expected type for argument " + std::to_string(r.pos) +
                " of " + r.callee;
    return out;
  }
  auto acc = types::accessibleElements(r, ctx);
  auto cands = candgen::generateCandidates(r, acc, expected, ctx, {cfg.depth});
  out.generated = cands.size();
  std::vector<unsigned> fired;
  auto rc = reductionContext(r, ctx, expected);
  if (cfg.rules) {
    cands = applyReductionRules(std::move(cands), rc, expected, &fired);
  } else {
    for (const auto &c : cands)
      fired.push_back(firedRules(c, rc));
  }
  out.reduced = cands.size();

  const auto &model = *deps.model;
  size_t window = static_cast<size_t>(std::max(1, model.config().order - 1));
  auto ctxIds = model.vocab().encode(contextTokens(unit, r.location.offset, window));
  std::vector<ScoredCandidate> scored;
  scored.reserve(cands.size());
  for (size_t i = 0; i < cands.size(); ++i) {
    ScoredCandidate s;
    s.cand = std::move(cands[i]);
    s.rules = fired[i];
    s.features = features::computeFeatures(s.cand, r, expected, ctx.scopes(), site.block,
                                           cfg.parasimFloor);
    auto seq = model.vocab().encode(lm::candidateLmTokens(s.cand.rendered, s.cand.holes));
    s.lightProb = model.sequenceProb(deps.layers, ctxIds, seq);
    s.prob = s.lightProb;
    if (cfg.staticFeatures) {
      if (s.features.isVariable)
        s.recent = features::recentScore(s.features, *deps.tables);
      s.scoreLr = combineScore(s.lightProb, s.features.parasimNorm, s.recent);
    } else {
      s.scoreLr = s.lightProb;
    }
    scored.push_back(std::move(s));
  }
  lightRank(scored, cfg.rt);
  out.survivors = scored.size();

  if (deps.heavy && cfg.heavy) {
    std::vector<size_t> idx;
    std::vector<std::vector<std::string>> seqs;
    for (size_t i = 0; i < scored.size(); ++i)
      if (cfg.selective.count(scored[i].cand.exprType)) {
        idx.push_back(i);
        seqs.push_back(lm::candidateLmTokens(scored[i].cand.rendered, scored[i].cand.holes));
      }
    if (!idx.empty()) {
      std::string err;
      auto heavyCtx = contextTokens(unit, r.location.offset, kHeavyContextTokens);
      auto probs = deps.heavy->score(heavyCtx, seqs, err);
      if (probs) {
        for (size_t j = 0; j < idx.size(); ++j) {
          scored[idx[j]].prob = (*probs)[j];
          scored[idx[j]].heavy = true;
        }
      } else {
        out.warnings.push_back(err + "; using light scores");
      }
    }
  }
  for (auto &s : scored)
    s.score = cfg.staticFeatures ? combineScore(s.prob, s.features.parasimNorm, s.recent) : s.prob;
  std::sort(scored.begin(), scored.end(), [](const ScoredCandidate &a, const ScoredCandidate &b) {
    return rankedBefore(a.score, a.cand.rendered, b.score, b.cand.rendered);
  });
  if (k >= 0 && scored.size() > static_cast<size_t>(k))
    scored.resize(static_cast<size_t>(k));
  out.items = std::move(scored);
  return out;
}

RankedList beamBaselineRecommend(const corpus::ArRequest &r, int k, const lm::NGramModel &model,
                                 const lm::LayerStack &layers, int width, int maxLen) {
  RankedList out;
  size_t window = static_cast<size_t>(std::max(1, model.config().order - 1));
  auto ctxIds = model.vocab().encode(contextTokens(*r.unit, r.location.offset, window));
  auto beams = lm::beamSearch(model, layers, ctxIds, k, std::max(width, k), maxLen);
  out.generated = out.reduced = out.survivors = beams.size();
  for (const auto &b : beams) {
    ScoredCandidate s;
    std::string text;
    for (int t : b.tokens) {
      if (!text.empty())
        text += ' ';
      text += model.vocab().token(t);
    }
    s.cand.rendered = text;
    s.cand.exprType = corpus::ExprType::CompoundExpr;
    s.lightProb = s.prob = s.scoreLr = s.score = b.prob;
    out.items.push_back(std::move(s));
  }
  return out;
}

} // namespace argrec::pipeline
