// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/lm/ngram_model.hpp"

#include "argrec/common.hpp"

#include <algorithm>
#include <mutex>

namespace argrec::lm {
namespace {

struct Counts {
  uint32_t total = 0;
  const CountTable::Node *plus = nullptr;
  const CountTable::Node *minus = nullptr;
};

Counts contextCounts(const LayerView &l, std::span<const int> ctx) {
  Counts c;
  c.plus = l.plus->find(ctx);
  if (!c.plus)
    return c;
  c.total = c.plus->childTotal;
  if (l.minus && (c.minus = l.minus->find(ctx)))
    c.total -= c.minus->childTotal;
  return c;
}

uint32_t successorCount(const LayerView &l, const Counts &c, int t) {
  uint32_t n = l.plus->countOf(*c.plus, t);
  if (c.minus)
    n -= l.minus->countOf(*c.minus, t);
  return n;
}

} // namespace

NGramModel::NGramModel(LmConfig cfg, Vocabulary vocab)
    : cfg_(cfg), vocab_(std::move(vocab)), global_(cfg.order) {}

NGramModel::NGramModel(NGramModel &&o) noexcept { *this = std::move(o); }

NGramModel &NGramModel::operator=(NGramModel &&o) noexcept {
  if (this != &o) {
    cfg_ = o.cfg_;
    vocab_ = std::move(o.vocab_);
    global_ = std::move(o.global_);
    packages_ = std::move(o.packages_);
    std::unique_lock lock(cacheMu_);
    caches_ = std::move(o.caches_);
  }
  return *this;
}

NGramModel NGramModel::train(const std::vector<TokenStream> &streams, const LmConfig &cfg) {
  size_t total = 0;
  std::vector<std::vector<std::string>> raw;
  raw.reserve(streams.size());
  for (const auto &s : streams) {
    total += s.tokens.size();
    raw.push_back(s.tokens);
  }
  if (total == 0)
    throw Error("cannot train a language model on an empty corpus");
  NGramModel m(cfg, Vocabulary::build(raw, cfg.minCount));
  for (const auto &s : streams) {
    auto ids = m.vocab_.encode(s.tokens);
    m.global_.addStream(ids);
    m.package(s.scope).addStream(ids);
  }
  return m;
}

CountTable &NGramModel::package(const std::string &pkg) {
  return packages_.try_emplace(pkg, cfg_.order).first->second;
}

const CountTable *NGramModel::findPackage(const std::string &pkg) const {
  auto it = packages_.find(pkg);
  return it == packages_.end() ? nullptr : &it->second;
}

LayerStack NGramModel::stack(const std::string &pkg) const {
  LayerStack s{{&global_, nullptr}};
  if (const CountTable *p = findPackage(pkg))
    s.push_back({p, nullptr});
  return s;
}

// Jelinek-Mercer recursion within one layer: orders whose context was never
// seen leave the lower-order estimate unchanged.
double NGramModel::layerProb(const LayerView &l, std::span<const int> ctx, int t) const {
  double p = 1.0 / vocab_.size();
  for (int k = 1; k <= cfg_.order; ++k) {
    if (static_cast<int>(ctx.size()) < k - 1)
      break;
    Counts c = contextCounts(l, ctx.subspan(ctx.size() - (k - 1)));
    if (c.total == 0)
      break;
    double ml = static_cast<double>(successorCount(l, c, t)) / c.total;
    p = cfg_.lambda * ml + (1.0 - cfg_.lambda) * p;
  }
  return p;
}

void NGramModel::layerDistribution(const LayerView &l, std::span<const int> ctx,
                                   std::vector<double> &p) const {
  p.assign(vocab_.size(), 1.0 / vocab_.size());
  for (int k = 1; k <= cfg_.order; ++k) {
    if (static_cast<int>(ctx.size()) < k - 1)
      break;
    Counts c = contextCounts(l, ctx.subspan(ctx.size() - (k - 1)));
    if (c.total == 0)
      break;
    for (double &x : p)
      x *= 1.0 - cfg_.lambda;
    for (uint32_t ci : c.plus->children) {
      const auto &n = l.plus->node(ci);
      uint32_t cnt = n.count;
      if (c.minus)
        cnt -= l.minus->countOf(*c.minus, n.token);
      if (cnt && n.token >= 0 && n.token < vocab_.size())
        p[n.token] += cfg_.lambda * cnt / c.total;
    }
  }
}

bool NGramModel::participates(const LayerView &l, std::span<const int> ctx) const {
  if (!l.plus)
    return false;
  return contextCounts(l, ctx.empty() ? ctx : ctx.subspan(ctx.size() - 1)).total > 0;
}

double NGramModel::tokenProb(const LayerStack &layers, std::span<const int> ctx, int t) const {
  if (layers.empty())
    return 1.0 / vocab_.size();
  double p = layerProb(layers[0], ctx, t);
  for (size_t i = 1; i < layers.size(); ++i)
    if (participates(layers[i], ctx))
      p = cfg_.layerWeight * layerProb(layers[i], ctx, t) + (1.0 - cfg_.layerWeight) * p;
  return p;
}

std::vector<double> NGramModel::distribution(const LayerStack &layers,
                                             std::span<const int> ctx) const {
  std::vector<double> p, inner;
  if (layers.empty()) {
    p.assign(vocab_.size(), 1.0 / vocab_.size());
    return p;
  }
  layerDistribution(layers[0], ctx, p);
  for (size_t i = 1; i < layers.size(); ++i) {
    if (!participates(layers[i], ctx))
      continue;
    layerDistribution(layers[i], ctx, inner);
    for (size_t j = 0; j < p.size(); ++j)
      p[j] = cfg_.layerWeight * inner[j] + (1.0 - cfg_.layerWeight) * p[j];
  }
  return p;
}

double NGramModel::sequenceProb(const LayerStack &layers, std::span<const int> ctx,
                                std::span<const int> seq) const {
  size_t keep = static_cast<size_t>(std::max(0, cfg_.order - 1));
  std::vector<int> window(ctx.end() - std::min(ctx.size(), keep), ctx.end());
  double p = 1.0;
  for (int t : seq) {
    p *= tokenProb(layers, window, t);
    window.push_back(t);
    if (window.size() > keep)
      window.erase(window.begin());
  }
  return p;
}

double NGramModel::tokenProb(const std::vector<std::string> &ctx, const std::string &t,
                             const std::string &pkg, const std::string &file) const {
  auto layers = stack(pkg);
  if (const CountTable *c = cache(file))
    layers.push_back({c, nullptr});
  auto ids = vocab_.encode(ctx);
  return tokenProb(layers, ids, vocab_.id(t));
}

double NGramModel::sequenceProb(const std::vector<std::string> &ctx,
                                const std::vector<std::string> &seq, const std::string &pkg,
                                const std::string &file) const {
  auto layers = stack(pkg);
  if (const CountTable *c = cache(file))
    layers.push_back({c, nullptr});
  auto ids = vocab_.encode(ctx);
  auto sids = vocab_.encode(seq);
  return sequenceProb(layers, ids, sids);
}

void NGramModel::updateCache(const std::string &file, std::span<const int> tokens) {
  FileCache *fc;
  {
    std::unique_lock lock(cacheMu_);
    auto &slot = caches_[file];
    if (!slot)
      slot = std::make_unique<FileCache>(FileCache{CountTable(cfg_.order), {}});
    fc = slot.get();
  }
  std::vector<int> seq = fc->tail;
  size_t firstNew = seq.size();
  seq.insert(seq.end(), tokens.begin(), tokens.end());
  fc->table.addTail(seq, firstNew);
  size_t keep = static_cast<size_t>(std::max(0, cfg_.order - 1));
  fc->tail.assign(seq.end() - std::min(seq.size(), keep), seq.end());
}

void NGramModel::updateCache(const std::string &file, const std::vector<std::string> &tokens) {
  auto ids = vocab_.encode(tokens);
  updateCache(file, std::span<const int>(ids));
}

void NGramModel::clearCache(const std::string &file) {
  std::unique_lock lock(cacheMu_);
  caches_.erase(file);
}

const CountTable *NGramModel::cache(const std::string &file) const {
  if (file.empty())
    return nullptr;
  std::shared_lock lock(cacheMu_);
  auto it = caches_.find(file);
  return it == caches_.end() ? nullptr : &it->second->table;
}

} // namespace argrec::lm
