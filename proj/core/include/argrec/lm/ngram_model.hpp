// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/lm/count_table.hpp"
#include "argrec/lm/vocabulary.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

namespace argrec::lm {

struct LmConfig {
  int order = 6;
  double lambda = 0.5;
  double layerWeight = 0.5;
  int minCount = 2;
};

struct TokenStream {
  std::string scope; // package name
  std::vector<std::string> tokens;
};

// Counts of `plus` minus those of `minus` (used to leave a file out of a
// corpus-wide layer).
struct LayerView {
  const CountTable *plus = nullptr;
  const CountTable *minus = nullptr;
};

using LayerStack = std::vector<LayerView>; // outermost first

class NGramModel {
public:
  NGramModel() = default;
  NGramModel(LmConfig cfg, Vocabulary vocab);
  NGramModel(NGramModel &&o) noexcept;
  NGramModel &operator=(NGramModel &&o) noexcept;

  // Throws Error on an empty corpus.
  static NGramModel train(const std::vector<TokenStream> &streams, const LmConfig &cfg = {});

  const LmConfig &config() const { return cfg_; }
  const Vocabulary &vocab() const { return vocab_; }
  const CountTable &global() const { return global_; }
  CountTable &mutableGlobal() { return global_; }
  const std::map<std::string, CountTable> &packages() const { return packages_; }
  CountTable &package(const std::string &pkg);
  const CountTable *findPackage(const std::string &pkg) const;

  // Global then package layer (if the package was seen in training).
  LayerStack stack(const std::string &pkg) const;

  double tokenProb(const LayerStack &layers, std::span<const int> ctx, int t) const;
  // Probabilities for every vocabulary id; sums to 1.
  std::vector<double> distribution(const LayerStack &layers, std::span<const int> ctx) const;
  double sequenceProb(const LayerStack &layers, std::span<const int> ctx,
                      std::span<const int> seq) const;

  // String-level conveniences over stack(pkg) plus the file cache of `file`.
  double tokenProb(const std::vector<std::string> &ctx, const std::string &t,
                   const std::string &pkg = {}, const std::string &file = {}) const;
  double sequenceProb(const std::vector<std::string> &ctx, const std::vector<std::string> &seq,
                      const std::string &pkg = {}, const std::string &file = {}) const;

  // File caches. Appended chunks count as one stream per file. Callers
  // serialize updates for a given path.
  void updateCache(const std::string &file, std::span<const int> tokens);
  void updateCache(const std::string &file, const std::vector<std::string> &tokens);
  void clearCache(const std::string &file);
  // Stable until clearCache(file).
  const CountTable *cache(const std::string &file) const;

private:
  struct FileCache {
    CountTable table;
    std::vector<int> tail;
  };

  double layerProb(const LayerView &l, std::span<const int> ctx, int t) const;
  void layerDistribution(const LayerView &l, std::span<const int> ctx,
                         std::vector<double> &p) const;
  bool participates(const LayerView &l, std::span<const int> ctx) const;

  LmConfig cfg_;
  Vocabulary vocab_;
  CountTable global_;
  std::map<std::string, CountTable> packages_;
  mutable std::shared_mutex cacheMu_;
  std::map<std::string, std::unique_ptr<FileCache>> caches_;
};

} // namespace argrec::lm
