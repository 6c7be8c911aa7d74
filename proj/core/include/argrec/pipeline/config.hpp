// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/expr_type.hpp"
#include "argrec/features/parasim.hpp"

#include <limits>
#include <set>

namespace argrec::pipeline {

using corpus::ExprType;

std::set<ExprType> defaultSelectiveSet();

struct PipelineConfig {
  int rt = 20;
  std::set<ExprType> selective = defaultSelectiveSet();
  bool rules = true;
  bool staticFeatures = true;
  bool heavy = true; // used only when a scorer is attached
  double parasimFloor = features::kDefaultParasimFloor;
  int depth = 1;
  bool objectMapping = false;

  static constexpr int kUnlimited = std::numeric_limits<int>::max();
};

// Throws ContractViolation on RT < 1 or unsupported members of E.
void validate(const PipelineConfig &cfg);

} // namespace argrec::pipeline
