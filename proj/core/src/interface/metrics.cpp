// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/interface/metrics.hpp"

#include "argrec/common.hpp"

#include <string>

namespace argrec::interface {

namespace {

void checkIntegrity(int64_t rk, int64_t s, int64_t a) {
  if (rk < 0 || s < 0 || a < 0)
    throw Error("metric input integrity: negative count");
  if (rk > s)
    throw Error("metric input integrity: R(k)=" + std::to_string(rk) + " exceeds S=" +
                std::to_string(s));
  if (s > a)
    throw Error("metric input integrity: S=" + std::to_string(s) + " exceeds A=" +
                std::to_string(a));
}

Ratio ratio(int64_t num, int64_t den) {
  if (den == 0)
    return {0.0, true};
  return {static_cast<double>(num) / static_cast<double>(den), false};
}

} // namespace

Ratio precisionAtK(int64_t rk, int64_t s, int64_t a) {
  checkIntegrity(rk, s, a);
  return ratio(rk, s);
}

Ratio recallAtK(int64_t rk, int64_t s, int64_t a) {
  checkIntegrity(rk, s, a);
  return ratio(rk, a);
}

double mrr(const std::vector<std::optional<int>> &ranks) {
  if (ranks.empty())
    return 0.0;
  double sum = 0.0;
  for (const auto &r : ranks)
    if (r) {
      if (*r < 1)
        throw ContractViolation("ranks are 1-based");
      sum += 1.0 / *r;
    }
  return sum / static_cast<double>(ranks.size());
}

void Counts::add(bool supported, std::optional<int> rank) {
  ++a;
  if (!supported)
    return;
  ++s;
  if (!rank)
    return;
  ++hits;
  reciprocalSum += 1.0 / *rank;
  for (size_t i = 0; i < kReportedK.size(); ++i)
    if (*rank <= kReportedK[i])
      ++r[i];
}

void Counts::merge(const Counts &o) {
  a += o.a;
  s += o.s;
  hits += o.hits;
  reciprocalSum += o.reciprocalSum;
  for (size_t i = 0; i < r.size(); ++i)
    r[i] += o.r[i];
}

} // namespace argrec::interface
