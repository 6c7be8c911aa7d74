// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <vector>

namespace argrec::lm {

// n-gram counts stored as a trie. A node's `count` is the frequency of the
// gram spelled by its path; `childTotal` is the number of times the path was
// followed by another token, which equals the sum of its children's counts.
class CountTable {
public:
  struct Node {
    uint32_t count = 0;
    uint32_t childTotal = 0;
    int token = -1;
    std::vector<uint32_t> children;
  };

  explicit CountTable(int order = 6);

  int order() const { return order_; }
  bool empty() const { return nodes_[0].childTotal == 0; }
  size_t nodeCount() const { return nodes_.size(); }

  // Counts every gram of length 1..order in `stream`.
  void addStream(std::span<const int> stream);
  // Counts grams of `seq` that end at or after `firstNew`; earlier tokens
  // only provide left context.
  void addTail(std::span<const int> seq, size_t firstNew);
  // Adds `count` occurrences of one gram (used when loading).
  void addGram(std::span<const int> gram, uint32_t count);

  const Node *find(std::span<const int> path) const;
  const Node &node(uint32_t i) const { return nodes_[i]; }
  const Node &root() const { return nodes_[0]; }
  uint32_t countOf(const Node &parent, int token) const;

  // One line per gram: space-separated ids, a tab, the count. Sorted by ids.
  void write(std::ostream &out) const;
  void read(std::istream &in);

  friend bool operator==(const CountTable &a, const CountTable &b);

private:
  uint32_t child(uint32_t parent, int token, bool create);
  static uint64_t key(uint32_t parent, int token) {
    return (static_cast<uint64_t>(parent) << 32) | static_cast<uint32_t>(token);
  }

  int order_;
  std::vector<Node> nodes_;
  std::unordered_map<uint64_t, uint32_t> edges_;
};

} // namespace argrec::lm
