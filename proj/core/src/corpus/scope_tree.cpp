// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/scope_tree.hpp"

#include <algorithm>
#include <numeric>

namespace argrec::corpus {

int ScopeTree::innermostAt(const SourcePos &pos) const {
  int cur = 0;
  bool descended = true;
  while (descended) {
    descended = false;
    for (int c : blocks[cur].children) {
      if (blocks[c].span.contains(pos)) {
        cur = c;
        descended = true;
        break;
      }
    }
  }
  return cur;
}

bool ScopeTree::encloses(int outer, int inner) const {
  for (int b = inner; b >= 0; b = blocks[b].parent)
    if (b == outer)
      return true;
  return false;
}

std::optional<int> ScopeTree::scopeDis(int outer, int inner) const {
  int d = 0;
  for (int b = inner; b >= 0; b = blocks[b].parent, ++d)
    if (b == outer)
      return d;
  return std::nullopt;
}

ScopeTree buildScopeTree(const CompilationUnit &unit) {
  ScopeTree tree;
  const auto &decls = unit.blocks;
  if (decls.empty()) {
    tree.blocks.push_back({BlockKind::Outermost, {}, {}, -1, {}, 0, -1, -1});
    return tree;
  }
  // Outer blocks sort first: earlier begin, then later end, then creation
  // order (the parser opens a parent before its children).
  std::vector<int> order(decls.size() - 1);
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const auto &sa = decls[a].span, &sb = decls[b].span;
    if (sa.begin.offset != sb.begin.offset)
      return sa.begin.offset < sb.begin.offset;
    if (sa.end.offset != sb.end.offset)
      return sa.end.offset > sb.end.offset;
    return a < b;
  });
  tree.blocks.resize(decls.size());
  for (size_t i = 0; i < decls.size(); ++i) {
    Block &b = tree.blocks[i];
    b.kind = decls[i].kind;
    b.span = decls[i].span;
    b.vars = decls[i].vars;
    b.type = decls[i].type;
    b.method = decls[i].method;
  }
  std::vector<int> stack = {0};
  for (int idx : order) {
    while (stack.size() > 1 &&
           !tree.blocks[stack.back()].span.contains(tree.blocks[idx].span))
      stack.pop_back();
    Block &b = tree.blocks[idx];
    b.parent = stack.back();
    b.depth = tree.blocks[b.parent].depth + 1;
    tree.blocks[b.parent].children.push_back(idx);
    stack.push_back(idx);
  }
  return tree;
}

} // namespace argrec::corpus
