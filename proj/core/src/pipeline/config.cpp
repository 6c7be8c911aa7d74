// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/pipeline/config.hpp"

#include "argrec/common.hpp"

#include <string>

namespace argrec::pipeline {

std::set<ExprType> defaultSelectiveSet() {
  return {ExprType::SimpleName, ExprType::ArrayAccess, ExprType::TypeLiteral,
          ExprType::ObjectCreation, ExprType::ArrayCreation};
}

void validate(const PipelineConfig &cfg) {
  if (cfg.rt < 1)
    throw ContractViolation("RT must be at least 1");
  for (ExprType t : cfg.selective)
    if (!corpus::isSupported(t))
      throw ContractViolation("selective set contains unsupported type " +
                              std::string(corpus::exprTypeName(t)));
  if (cfg.depth < 1 || cfg.depth > 2)
    throw ContractViolation("generation depth must be 1 or 2");
}

} // namespace argrec::pipeline
