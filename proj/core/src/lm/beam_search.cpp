// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/lm/beam_search.hpp"

#include "argrec/common.hpp"

#include <algorithm>

namespace argrec::lm {
namespace {

struct Hyp {
  std::vector<int> tokens;
  double prob = 1.0;
  int depth = 0;
};

int depthDelta(const std::string &t) {
  if (t == "(" || t == "[" || t == "{")
    return 1;
  if (t == ")" || t == "]" || t == "}")
    return -1;
  return 0;
}

std::string joined(const NGramModel &m, const std::vector<int> &toks) {
  std::string s;
  for (int t : toks) {
    s += m.vocab().token(t);
    s += ' ';
  }
  return s;
}

} // namespace

bool isBoundary(const std::string &tok, int depth) {
  return depth == 0 && (tok == "," || tok == ")");
}

std::vector<BeamResult> beamSearch(const NGramModel &model, const LayerStack &layers,
                                   const std::vector<int> &ctx, int k, int width, int maxLen) {
  if (k < 1 || width < k)
    throw ContractViolation("beamSearch needs width >= k >= 1");
  const auto &vocab = model.vocab();
  auto better = [&](const auto &a, const auto &b) {
    if (a.prob != b.prob)
      return a.prob > b.prob;
    return joined(model, a.tokens) < joined(model, b.tokens);
  };
  std::vector<BeamResult> done;
  std::vector<Hyp> beam{{}};
  size_t keep = static_cast<size_t>(std::max(0, model.config().order - 1));
  std::vector<int> base(ctx.end() - std::min(ctx.size(), keep), ctx.end());
  std::vector<int> window;
  for (int step = 0; step < maxLen && !beam.empty(); ++step) {
    std::vector<Hyp> next;
    for (const Hyp &h : beam) {
      window = base;
      window.insert(window.end(), h.tokens.begin(), h.tokens.end());
      auto dist = model.distribution(layers, window);
      for (int t = 0; t < vocab.size(); ++t) {
        if (t == Vocabulary::kUnk || t == Vocabulary::kHole)
          continue;
        const std::string &tok = vocab.token(t);
        double p = h.prob * dist[t];
        if (isBoundary(tok, h.depth)) {
          if (!h.tokens.empty())
            done.push_back({h.tokens, p});
          continue;
        }
        int d = h.depth + depthDelta(tok);
        if (d < 0)
          continue;
        Hyp n{h.tokens, p, d};
        n.tokens.push_back(t);
        next.push_back(std::move(n));
      }
    }
    if (static_cast<int>(next.size()) > width) {
      std::partial_sort(next.begin(), next.begin() + width, next.end(), better);
      next.resize(width);
    }
    beam = std::move(next);
  }
  std::sort(done.begin(), done.end(), better);
  if (static_cast<int>(done.size()) > k)
    done.resize(k);
  return done;
}

} // namespace argrec::lm
