// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/typesys/type_index.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace argrec::types {

// Reads a stub document: {"library": ..., "types": [ {qualifiedName, kind,
// supertypes, typeParams, members: [{name, kind, static, access, params:
// [{name, type}], returnType}]} ]}. A bare array of type records is also
// accepted. Member types naming a type parameter are erased to Object.
// Throws Error on malformed input.
std::vector<TypeEntry> parseStubs(std::string_view json, const std::string &origin);

// Writes entries in the same format, sorted by qualified name.
std::string writeStubs(const std::vector<const TypeEntry *> &entries,
                       const std::string &library);

// The minimal java.lang / java.util / java.io stub compiled into the library.
std::string_view bundledStubJson();
std::vector<TypeEntry> bundledStubs();

} // namespace argrec::types
