// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/lm/count_table.hpp"

#include "argrec/common.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace argrec::lm {

CountTable::CountTable(int order) : order_(order), nodes_(1) {}

uint32_t CountTable::child(uint32_t parent, int token, bool create) {
  auto it = edges_.find(key(parent, token));
  if (it != edges_.end())
    return it->second;
  if (!create)
    return 0;
  auto id = static_cast<uint32_t>(nodes_.size());
  nodes_.push_back({0, 0, token, {}});
  nodes_[parent].children.push_back(id);
  edges_.emplace(key(parent, token), id);
  return id;
}

void CountTable::addTail(std::span<const int> seq, size_t firstNew) {
  for (size_t s = 0; s < seq.size(); ++s) {
    size_t len = std::min<size_t>(order_, seq.size() - s);
    uint32_t cur = 0;
    for (size_t d = 0; d < len; ++d) {
      uint32_t next = child(cur, seq[s + d], true);
      if (s + d >= firstNew) {
        ++nodes_[cur].childTotal;
        ++nodes_[next].count;
      }
      cur = next;
    }
  }
}

void CountTable::addStream(std::span<const int> stream) { addTail(stream, 0); }

void CountTable::addGram(std::span<const int> gram, uint32_t count) {
  uint32_t cur = 0;
  for (size_t d = 0; d < gram.size(); ++d) {
    uint32_t next = child(cur, gram[d], true);
    if (d + 1 == gram.size()) {
      nodes_[cur].childTotal += count;
      nodes_[next].count += count;
    }
    cur = next;
  }
}

const CountTable::Node *CountTable::find(std::span<const int> path) const {
  uint32_t cur = 0;
  for (int t : path) {
    auto it = edges_.find(key(cur, t));
    if (it == edges_.end())
      return nullptr;
    cur = it->second;
  }
  return &nodes_[cur];
}

uint32_t CountTable::countOf(const Node &parent, int token) const {
  auto self = static_cast<uint32_t>(&parent - nodes_.data());
  auto it = edges_.find(key(self, token));
  return it == edges_.end() ? 0 : nodes_[it->second].count;
}

void CountTable::write(std::ostream &out) const {
  std::vector<std::pair<std::vector<int>, uint32_t>> grams;
  std::vector<std::pair<uint32_t, std::vector<int>>> stack{{0, {}}};
  while (!stack.empty()) {
    auto [n, path] = std::move(stack.back());
    stack.pop_back();
    for (uint32_t c : nodes_[n].children) {
      auto p = path;
      p.push_back(nodes_[c].token);
      if (nodes_[c].count)
        grams.emplace_back(p, nodes_[c].count);
      stack.emplace_back(c, std::move(p));
    }
  }
  std::sort(grams.begin(), grams.end());
  for (const auto &[g, c] : grams) {
    for (size_t i = 0; i < g.size(); ++i)
      out << (i ? " " : "") << g[i];
    out << '\t' << c << '\n';
  }
}

void CountTable::read(std::istream &in) {
  std::string line;
  size_t lineNo = 0;
  std::vector<int> gram;
  while (std::getline(in, line)) {
    ++lineNo;
    if (line.empty())
      continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error("count table line " + std::to_string(lineNo) + ": missing tab");
    gram.clear();
    std::istringstream ids(line.substr(0, tab));
    int id;
    while (ids >> id)
      gram.push_back(id);
    if (gram.empty() || static_cast<int>(gram.size()) > order_)
      throw Error("count table line " + std::to_string(lineNo) + ": bad gram length");
    addGram(gram, static_cast<uint32_t>(std::stoul(line.substr(tab + 1))));
  }
}

bool operator==(const CountTable &a, const CountTable &b) {
  std::ostringstream x, y;
  a.write(x);
  b.write(y);
  return a.order_ == b.order_ && x.str() == y.str();
}

} // namespace argrec::lm
