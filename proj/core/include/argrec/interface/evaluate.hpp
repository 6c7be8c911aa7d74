// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/corpus_files.hpp"
#include "argrec/interface/bundle.hpp"
#include "argrec/interface/metrics.hpp"
#include "argrec/pipeline/heavy_scorer.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argrec::interface {

enum class Scenario { Static, Dynamic, Maintenance };

std::string_view scenarioName(Scenario s);
std::optional<Scenario> scenarioFromName(std::string_view name);

struct EvalOptions {
  Scenario scenario = Scenario::Static;
  std::optional<pipeline::PipelineConfig> cfg; // defaults to the bundle's
  bool beamBaseline = false;
  int beamWidth = 10;
  int beamMaxLen = 8;
  bool timing = false;
  bool strict = false;
  pipeline::HeavyScorer *heavy = nullptr;
};

struct RequestOutcome {
  std::string file;
  uint32_t line = 0;
  uint32_t col = 0;
  std::string callee;
  int pos = 0;
  std::string gold; // canonical text
  corpus::ExprType type = corpus::ExprType::CompoundExpr;
  bool supported = false;
  std::optional<int> rank;
  std::string origin; // intra, inter, unresolved
  size_t candidates = 0;
  double latencyMs = 0.0;
};

struct EvalReport {
  Scenario scenario = Scenario::Static;
  std::string method; // pipeline or beam
  Counts total;
  std::map<std::string, Counts> byExprType;
  std::map<std::string, Counts> byOrigin;
  size_t files = 0;
  bool timing = false;
  double latencyMsMean = 0.0;
  std::vector<std::string> warnings;
  std::vector<RequestOutcome> outcomes;
};

// Runs every argument request of the test files. Throws Error (split
// error) when a test file's content is part of the bundle's training set.
// The LM file caches touched here are cleared before returning.
EvalReport evaluate(Bundle &bundle, const std::vector<corpus::SourceFile> &testFiles,
                    const EvalOptions &opts);

// JSON document; latency appears only for timed runs.
std::string reportJson(const EvalReport &r);
std::string reportsJson(const std::vector<EvalReport> &reports);
// One line per request, tab separated, with a header.
std::string outcomesTsv(const EvalReport &r);
std::string reportSummary(const EvalReport &r);

} // namespace argrec::interface
