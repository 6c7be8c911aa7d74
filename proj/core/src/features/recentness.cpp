// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/features/recentness.hpp"

#include "argrec/common.hpp"
#include "argrec/corpus/subtokens.hpp"
#include "argrec/features/parasim.hpp"

#include <algorithm>
#include <cstdlib>

namespace argrec::features {

int creatingDistance(int declBlock, int callBlock, const corpus::ScopeTree &scopes) {
  auto d = scopes.scopeDis(declBlock, callBlock);
  if (!d)
    throw ContractViolation("creating-distance: block " + std::to_string(declBlock) +
                            " does not enclose block " + std::to_string(callBlock));
  return *d;
}

std::optional<int> accessingRecentness(const std::string &name, const corpus::ArRequest &r) {
  const auto &unit = *r.unit;
  if (r.type < 0 || r.method < 0)
    return std::nullopt;
  const auto &span = unit.types[r.type].methods[r.method].span;
  size_t lo = unit.tokenIndexAt(span.begin.offset);
  size_t hi = unit.tokenIndexAt(r.location.offset);
  for (size_t i = hi; i-- > lo;) {
    const auto &t = unit.tokens[i];
    if (t.isIdent() && t.text == name)
      return std::abs(static_cast<int>(r.calleePos.line) - static_cast<int>(t.pos.line));
  }
  return std::nullopt;
}

namespace {

std::vector<double> smooth(const std::vector<long> &counts) {
  double total = 0;
  for (long c : counts)
    total += static_cast<double>(c) + 1.0;
  std::vector<double> out;
  out.reserve(counts.size());
  for (long c : counts)
    out.push_back((static_cast<double>(c) + 1.0) / total);
  return out;
}

} // namespace

RecentnessTables fitRecentnessTables(const std::vector<RecentnessSample> &samples, int cap) {
  if (samples.empty())
    throw Error("recentness tables need at least one variable argument");
  RecentnessTables t;
  t.cap = cap;
  std::vector<long> d(cap + 2, 0), u(cap + 3, 0);
  for (const auto &s : samples) {
    ++d[t.bucket(s.createDis)];
    ++u[t.bucketU(s.accessRec)];
  }
  t.probD = smooth(d);
  t.probU = smooth(u);
  return t;
}

double recentScore(const FeatureVector &f, const RecentnessTables &t) {
  if (!f.isVariable || !f.createDis)
    throw ContractViolation("recentScore on a non-variable candidate");
  return t.probD[t.bucket(*f.createDis)] * t.probU[t.bucketU(f.accessRec)];
}

FeatureVector computeFeatures(const candgen::Candidate &c, const corpus::ArRequest &r,
                              const types::ExpectedSet &expected,
                              const corpus::ScopeTree &scopes, int callBlock,
                              double parasimFloor) {
  FeatureVector f;
  auto terms = corpus::subtokensOfText(c.rendered);
  for (int i : c.expected)
    for (const auto &p : expected.types[i].paramNames)
      if (!p.empty())
        f.parasimRaw = std::max(f.parasimRaw, parasimTerms(terms, corpus::splitSubtokens(p)));
  f.parasimNorm = normalizeParasim(f.parasimRaw, parasimFloor);
  f.isVariable = c.isVariable;
  if (c.isVariable) {
    f.createDis = scopes.scopeDis(c.declBlock, callBlock).value_or(0);
    f.accessRec = accessingRecentness(c.varName, r);
  }
  return f;
}

} // namespace argrec::features
