// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/candgen/candidate.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/corpus/scope_tree.hpp"
#include "argrec/features/parasim.hpp"
#include "argrec/typesys/expected.hpp"

#include <optional>
#include <string>
#include <vector>

namespace argrec::features {

inline constexpr int kDefaultBucketCap = 16;

struct FeatureVector {
  double parasimRaw = 0.0;
  double parasimNorm = 0.0;
  std::optional<int> createDis;
  std::optional<int> accessRec;
  bool isVariable = false;
};

// Parent links from the call's innermost block up to the declaring block.
// Throws ContractViolation when the declaration does not enclose the call.
int creatingDistance(int declBlock, int callBlock, const corpus::ScopeTree &scopes);

// Lines between the call and the latest earlier occurrence of `name` in the
// containing method; nullopt if it does not occur there before the request.
std::optional<int> accessingRecentness(const std::string &name, const corpus::ArRequest &r);

struct RecentnessTables {
  int cap = kDefaultBucketCap;
  std::vector<double> probD; // buckets 0..cap, then overflow
  std::vector<double> probU; // buckets 0..cap, overflow, then NULL

  int bucket(int v) const { return v > cap ? cap + 1 : v; }
  int bucketU(std::optional<int> v) const { return v ? bucket(*v) : cap + 2; }
};

struct RecentnessSample {
  int createDis = 0;
  std::optional<int> accessRec;
};

// Add-one smoothed empirical frequencies. Throws Error on empty input.
RecentnessTables fitRecentnessTables(const std::vector<RecentnessSample> &samples,
                                     int cap = kDefaultBucketCap);

// probD(createDis) * probU(accessRec). Throws ContractViolation for
// non-variables.
double recentScore(const FeatureVector &f, const RecentnessTables &t);

// Parasim is the best match against any formal name of a compatible
// expected type.
FeatureVector computeFeatures(const candgen::Candidate &c, const corpus::ArRequest &r,
                              const types::ExpectedSet &expected,
                              const corpus::ScopeTree &scopes, int callBlock,
                              double parasimFloor = kDefaultParasimFloor);

} // namespace argrec::features
