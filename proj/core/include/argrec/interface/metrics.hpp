// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace argrec::interface {

inline constexpr std::array<int, 4> kReportedK = {1, 3, 5, 10};

struct Ratio {
  double value = 0.0;
  bool undefined = false; // zero denominator; value is 0
};

// R(k)/S. Throws Error (input integrity) when R > S or S > A.
Ratio precisionAtK(int64_t rk, int64_t s, int64_t a);
// R(k)/A, same checks.
Ratio recallAtK(int64_t rk, int64_t s, int64_t a);

// Sum of 1/rank over all requests divided by their number; nullopt ranks
// are misses and count 0.
double mrr(const std::vector<std::optional<int>> &ranks);

// Tally for one slice of an evaluation.
struct Counts {
  int64_t a = 0;
  int64_t s = 0;
  std::array<int64_t, kReportedK.size()> r{};
  int64_t hits = 0; // gold found anywhere in the ranked list
  double reciprocalSum = 0.0;

  // rank is 1-based, nullopt for a miss.
  void add(bool supported, std::optional<int> rank);
  void merge(const Counts &o);
  double mrr() const { return a ? reciprocalSum / static_cast<double>(a) : 0.0; }
};

} // namespace argrec::interface
