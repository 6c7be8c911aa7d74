// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/lm/ngram_model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace argrec::pipeline {

inline constexpr int kDefaultHeavyTimeoutMs = 2000;

class HeavyScorer {
public:
  virtual ~HeavyScorer() = default;
  // One probability per candidate, or nullopt with `error` set.
  virtual std::optional<std::vector<double>>
  score(const std::vector<std::string> &context,
        const std::vector<std::vector<std::string>> &candidates, std::string &error) = 0;
};

// Reference scorer: sequence probability under a standalone n-gram model.
class ModelHeavyScorer : public HeavyScorer {
public:
  explicit ModelHeavyScorer(const lm::NGramModel &model) : model_(model) {}
  std::optional<std::vector<double>> score(const std::vector<std::string> &context,
                                           const std::vector<std::vector<std::string>> &cands,
                                           std::string &error) override;

private:
  const lm::NGramModel &model_;
};

// Answers one protocol line: {"id", "context", "candidates"} -> {"id", "scores"}
// or {"id", "error"}.
std::string handleHeavyLine(HeavyScorer &scorer, const std::string &line);

// Talks to an external scorer over its standard streams, one JSON document
// per line. A reply slower than the timeout kills the process; later calls
// fail fast.
class ProcessHeavyScorer : public HeavyScorer {
public:
  ProcessHeavyScorer(std::vector<std::string> argv, int timeoutMs = kDefaultHeavyTimeoutMs);
  ~ProcessHeavyScorer() override;
  ProcessHeavyScorer(const ProcessHeavyScorer &) = delete;
  ProcessHeavyScorer &operator=(const ProcessHeavyScorer &) = delete;

  std::optional<std::vector<double>> score(const std::vector<std::string> &context,
                                           const std::vector<std::vector<std::string>> &cands,
                                           std::string &error) override;
  bool alive() const { return fd_ >= 0; }

private:
  void shutdown();
  bool readLine(std::string &line, std::string &error);

  int fd_ = -1;
  int pid_ = -1;
  int timeoutMs_;
  long nextId_ = 1;
  std::string buffer_;
};

} // namespace argrec::pipeline
