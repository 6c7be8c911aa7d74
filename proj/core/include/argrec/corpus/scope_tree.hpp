// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/ast.hpp"

#include <optional>
#include <vector>

namespace argrec::corpus {

struct Block {
  BlockKind kind = BlockKind::Statement;
  SourceSpan span;
  std::vector<VarDecl> vars;
  int parent = -1;
  std::vector<int> children;
  int depth = 0;
  int type = -1;
  int method = -1;
};

// Block tree of a unit. Block 0 is the outermost block and holds globals.
struct ScopeTree {
  std::vector<Block> blocks;

  // Innermost block whose span contains pos (0 if none).
  int innermostAt(const SourcePos &pos) const;
  // True if `outer` is `inner` or one of its ancestors.
  bool encloses(int outer, int inner) const;
  // Parent links from `inner` up to `outer`; nullopt unless encloses().
  std::optional<int> scopeDis(int outer, int inner) const;
};

// Links the parser's block records into a tree by span containment.
ScopeTree buildScopeTree(const CompilationUnit &unit);

} // namespace argrec::corpus
