// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/typesys/context.hpp"

#include <string>
#include <vector>

namespace argrec::types {

struct ExpectedType {
  std::string type;
  std::vector<std::string> paramNames; // formal names across overloads
  // (overload, 0-based parameter index) pairs that contributed this type.
  std::vector<std::pair<const MemberSig *, int>> sources;
};

struct ExpectedSet {
  std::vector<ExpectedType> types; // sorted by type name
  bool unresolved = false;
  bool varargs = false; // some contributing slot is variadic
  CalleeInfo callee;

  bool empty() const { return types.empty(); }
  bool contains(std::string_view t) const;
};

// Union of the pos-th (1-based) parameter types over every overload with
// arity >= pos. A variadic slot T... contributes both T[] and T.
ExpectedSet expectedTypes(const CalleeInfo &callee, int pos);

// Replaces Object with the receiver's type argument when a same-named
// parameter elsewhere in the generic declaring type is typed by a type
// parameter (e.g. Map<String, V>.containsKey(Object key) -> String).
// Parameters typed directly by a type parameter are refined the same way.
void mapObjectToTypeParam(ExpectedSet &set, const TypeIndex &index);

} // namespace argrec::types
