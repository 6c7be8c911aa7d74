// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "criteria.hpp"
#include "fixture.hpp"

#include "argrec/candgen/generator.hpp"
#include "argrec/corpus/subtokens.hpp"
#include "argrec/interface/bundle.hpp"
#include "argrec/interface/match.hpp"
#include "argrec/lm/lm_tokens.hpp"
#include "argrec/pipeline/recommender.hpp"
#include "argrec/typesys/accessible.hpp"
#include "argrec/typesys/expected.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace argrec::acceptance {

namespace {

struct TrainedFixture {
  std::unique_ptr<IndexedCorpus> corpus;
  interface::Bundle bundle;
};

TrainedFixture &trainedFixture() {
  static TrainedFixture f = [] {
    auto files = corpus::readManifest(fixturePath("corpus/manifest.txt"));
    TrainedFixture t;
    t.corpus = loadIndexed(files);
    t.bundle = interface::trainBundle(corpus::parseFiles(files));
    return t;
  }();
  return f;
}

// Longest subsequence of `a` made of terms that occur in `b`, by
// enumerating every subset of positions.
size_t bruteCom(const std::vector<std::string> &a, const std::vector<std::string> &b) {
  size_t best = 0;
  for (unsigned mask = 0; mask < (1u << a.size()); ++mask) {
    size_t len = 0;
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i)
      if (mask & (1u << i)) {
        ok = std::find(b.begin(), b.end(), a[i]) != b.end();
        ++len;
      }
    if (ok)
      best = std::max(best, len);
  }
  return best;
}

double bruteParasim(const std::vector<std::string> &c, const std::vector<std::string> &p) {
  if (c.empty() && p.empty())
    return 0.0;
  return static_cast<double>(bruteCom(c, p) + bruteCom(p, c)) /
         static_cast<double>(c.size() + p.size());
}

// Reference final score, written from the formula alone.
double oracleScore(const candgen::Candidate &c, const corpus::ArRequest &r,
                   const types::UnitContext &ctx, const types::ExpectedSet &expected,
                   int callBlock, const lm::NGramModel &model, const lm::LayerStack &layers,
                   const features::RecentnessTables &tables) {
  const auto &unit = ctx.unit();
  const int n = model.config().order;
  auto history = lm::lmTokens(unit.tokens, 0, unit.tokenIndexAt(r.location.offset));
  std::vector<int> window = model.vocab().encode(history);
  double p = 1.0;
  for (int t : model.vocab().encode(lm::candidateLmTokens(c.rendered, c.holes))) {
    std::vector<int> ctxIds(window.end() - std::min<size_t>(window.size(), n - 1), window.end());
    p *= model.tokenProb(layers, ctxIds, t);
    window.push_back(t);
  }

  double raw = 0.0;
  auto terms = corpus::subtokensOfText(c.rendered);
  for (int i : c.expected)
    for (const auto &name : expected.types[i].paramNames)
      if (!name.empty())
        raw = std::max(raw, bruteParasim(terms, corpus::splitSubtokens(name)));
  const double x = 0.1;
  double ps = x + raw * (1.0 - x);

  if (!c.isVariable)
    return p * ps;
  int dis = 0;
  for (int b = callBlock; b != c.declBlock; b = ctx.scopes().blocks[b].parent)
    ++dis;
  std::optional<int> rec;
  if (r.type >= 0 && r.method >= 0) {
    uint32_t begin = unit.types[r.type].methods[r.method].span.begin.offset;
    for (const auto &t : unit.tokens) {
      if (t.pos.offset < begin)
        continue;
      if (t.pos.offset >= r.location.offset)
        break;
      if (t.kind == corpus::TokenKind::Identifier && t.text == c.varName)
        rec = std::abs(static_cast<int>(r.calleePos.line) - static_cast<int>(t.pos.line));
    }
  }
  const int cap = tables.cap;
  double pd = tables.probD[std::min(dis, cap + 1)];
  double pu = rec ? tables.probU[std::min(*rec, cap + 1)] : tables.probU[cap + 2];
  const int v = 1;
  return std::pow(p * ps * (pd * pu), 1.0 / (1 + v));
}

} // namespace

Outcome oracleEquivalence(bool verbose) {
  auto &f = trainedFixture();
  pipeline::PipelineConfig cfg = f.bundle.config;
  cfg.rt = pipeline::PipelineConfig::kUnlimited;
  cfg.rules = false;
  cfg.heavy = false;
  size_t checked = 0, discrepancies = 0, skipped = 0;
  for (const auto &fr : supportedRequests(*f.corpus)) {
    const auto &r = fr.request;
    const auto &ctx = *fr.ctx;
    auto site = ctx.siteFor(ctx.unit().calls[r.callIndex], r.location);
    auto expected = types::expectedTypes(ctx.resolveCall(*r.call, site), r.pos);
    auto acc = types::accessibleElements(r, ctx);
    auto cands = candgen::generateCandidates(r, acc, expected, ctx);
    if (cands.size() > 200) {
      ++skipped;
      continue;
    }
    auto layers = f.bundle.model.stack(ctx.unit().packageName);
    std::vector<std::pair<double, std::string>> want;
    for (const auto &c : cands)
      want.emplace_back(oracleScore(c, r, ctx, expected, site.block, f.bundle.model, layers,
                                    f.bundle.tables),
                        c.rendered);
    std::sort(want.begin(), want.end(), [](const auto &a, const auto &b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    pipeline::RecommendDeps deps{&f.bundle.model, layers, &f.bundle.tables, nullptr};
    auto got = pipeline::recommend(r, ctx, -1, cfg, deps);
    ++checked;
    bool same = got.items.size() == want.size();
    for (size_t i = 0; same && i < want.size(); ++i)
      same = got.items[i].cand.rendered == want[i].second;
    if (!same) {
      ++discrepancies;
      if (verbose)
        std::printf("  ordering differs at %s:%u %s pos %d\n", ctx.unit().path.c_str(),
                    r.location.line, r.callee.c_str(), r.pos);
    }
  }
  Outcome o;
  o.pass = checked > 0 && discrepancies == 0;
  o.detail = std::to_string(discrepancies) + " discrepancies over " + std::to_string(checked) +
             " requests (" + std::to_string(skipped) + " with more than 200 candidates skipped)";
  return o;
}

Outcome rtMonotonicity(bool verbose) {
  auto &f = trainedFixture();
  const int rts[] = {10, 20, 50};
  size_t requests = 0, nestingViolations = 0;
  size_t retained[3] = {0, 0, 0};
  for (const auto &fr : supportedRequests(*f.corpus)) {
    const auto &r = fr.request;
    const auto &ctx = *fr.ctx;
    auto gold = interface::canonicalizeGold(r, ctx);
    pipeline::RecommendDeps deps{&f.bundle.model, f.bundle.model.stack(ctx.unit().packageName),
                                 &f.bundle.tables, nullptr};
    std::set<std::string> prev;
    ++requests;
    for (int i = 0; i < 3; ++i) {
      pipeline::PipelineConfig cfg = f.bundle.config;
      cfg.rt = rts[i];
      cfg.heavy = false;
      auto list = pipeline::recommend(r, ctx, -1, cfg, deps);
      std::set<std::string> cur;
      bool hit = false;
      for (const auto &s : list.items) {
        cur.insert(s.cand.rendered);
        hit = hit || interface::matchesGold(s.cand, gold);
      }
      retained[i] += hit;
      if (!std::includes(cur.begin(), cur.end(), prev.begin(), prev.end())) {
        ++nestingViolations;
        if (verbose)
          std::printf("  RT %d survivors do not contain RT %d survivors at %s:%u\n", rts[i],
                      rts[i - 1], ctx.unit().path.c_str(), r.location.line);
      }
      prev = std::move(cur);
    }
  }
  Outcome o;
  o.pass = requests > 0 && nestingViolations == 0 && retained[0] <= retained[1] &&
           retained[1] <= retained[2];
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%zu nesting violations over %zu requests; gold retained %zu/%zu/%zu at RT "
                "10/20/50",
                nestingViolations, requests, retained[0], retained[1], retained[2]);
  o.detail = buf;
  return o;
}

} // namespace argrec::acceptance
