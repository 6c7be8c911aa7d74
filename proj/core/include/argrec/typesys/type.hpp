// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace argrec::types {

// Types are named by erased spelling: qualified class names, primitive
// keywords, and "[]" suffixes for arrays. The null literal has type "null".
inline constexpr std::string_view kObject = "java.lang.Object";
inline constexpr std::string_view kString = "java.lang.String";
inline constexpr std::string_view kClass = "java.lang.Class";
inline constexpr std::string_view kNull = "null";

bool isPrimitive(std::string_view t);
bool isNumericPrimitive(std::string_view t);
bool isArray(std::string_view t);
bool isReference(std::string_view t);
std::string componentOf(std::string_view arrayType);
std::string boxOf(std::string_view primitive);   // "" if not primitive
std::string unboxOf(std::string_view reference); // "" if not a box type
// Java implicit widening between primitives (identity excluded).
bool widensTo(std::string_view from, std::string_view to);
std::string simpleNameOf(std::string_view qualified);

// A static type with its recorded type arguments (used only by the optional
// Object-to-type-parameter refinement).
struct StaticType {
  std::string name;
  std::vector<std::string> args;

  bool empty() const { return name.empty(); }
  friend bool operator==(const StaticType &, const StaticType &) = default;
};

} // namespace argrec::types
