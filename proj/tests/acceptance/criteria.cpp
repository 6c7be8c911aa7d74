// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "criteria.hpp"

namespace argrec::acceptance {

const std::vector<Criterion> &allCriteria() {
  static const std::vector<Criterion> kAll = {
      {1, "fixture identification coverage", identificationCoverage},
      {2, "oracle equivalence", oracleEquivalence},
      {3, "parasim oracle", parasimOracle},
      {4, "LM normalization", lmNormalization},
      {5, "beam-search oracle", beamOracle},
      {6, "reduction behavior", reductionBehavior},
      {7, "RT monotonicity", rtMonotonicity},
      {8, "scenario ordering", scenarioOrdering},
      {9, "metric identities", metricIdentities},
      {10, "determinism", determinism},
  };
  return kAll;
}

} // namespace argrec::acceptance
