// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/ast.hpp"
#include "argrec/typesys/type_index.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace argrec::interface {

struct Distribution {
  std::vector<std::pair<std::string, int64_t>> counts; // in display order
  int64_t total = 0;

  void add(const std::string &key, int64_t n = 1);
  double share(size_t i) const {
    return total ? static_cast<double>(counts[i].second) / static_cast<double>(total) : 0.0;
  }
};

struct StatsReport {
  int64_t units = 0;
  int64_t usages = 0; // argument usages (holes excluded)
  Distribution exprTypes;
  Distribution expectedTypes;
  Distribution origins; // intra, inter, unresolved
  Distribution parasim; // max parasim(gold, formal name) in tenths
  int64_t uniqueUsages = 0; // (argument, callee, position) seen once
  int64_t uniqueArguments = 0; // argument text seen once
  double usageUniqueness() const;
  double argumentUniqueness() const;
};

// `projects` runs parallel to `units`. Throws ContractViolation on an
// empty corpus.
StatsReport corpusStats(const std::vector<const corpus::CompilationUnit *> &units,
                        const std::vector<std::string> &projects,
                        const types::TypeIndex &index);

std::string statsJson(const StatsReport &r);
// File name -> CSV content, one per distribution.
std::map<std::string, std::string> statsCsvs(const StatsReport &r);
std::string statsSummary(const StatsReport &r);

} // namespace argrec::interface
