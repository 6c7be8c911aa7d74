// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/typesys/type.hpp"

#include <algorithm>
#include <array>
#include <utility>

namespace argrec::types {
namespace {

constexpr std::array<std::pair<std::string_view, std::string_view>, 8> kBoxes = {{
    {"boolean", "java.lang.Boolean"},
    {"byte", "java.lang.Byte"},
    {"char", "java.lang.Character"},
    {"short", "java.lang.Short"},
    {"int", "java.lang.Integer"},
    {"long", "java.lang.Long"},
    {"float", "java.lang.Float"},
    {"double", "java.lang.Double"},
}};

// Targets reachable by widening primitive conversion.
std::vector<std::string_view> wideningTargets(std::string_view t) {
  if (t == "byte")
    return {"short", "int", "long", "float", "double"};
  if (t == "short" || t == "char")
    return {"int", "long", "float", "double"};
  if (t == "int")
    return {"long", "float", "double"};
  if (t == "long")
    return {"float", "double"};
  if (t == "float")
    return {"double"};
  return {};
}

} // namespace

bool isPrimitive(std::string_view t) {
  return std::any_of(kBoxes.begin(), kBoxes.end(),
                     [&](const auto &p) { return p.first == t; });
}

bool isNumericPrimitive(std::string_view t) {
  return isPrimitive(t) && t != "boolean";
}

bool isArray(std::string_view t) {
  return t.size() > 2 && t.substr(t.size() - 2) == "[]";
}

bool isReference(std::string_view t) {
  return !t.empty() && !isPrimitive(t) && t != "void";
}

std::string componentOf(std::string_view arrayType) {
  return isArray(arrayType) ? std::string(arrayType.substr(0, arrayType.size() - 2))
                            : std::string();
}

std::string boxOf(std::string_view primitive) {
  for (auto [p, b] : kBoxes)
    if (p == primitive)
      return std::string(b);
  return {};
}

std::string unboxOf(std::string_view reference) {
  for (auto [p, b] : kBoxes)
    if (b == reference)
      return std::string(p);
  return {};
}

bool widensTo(std::string_view from, std::string_view to) {
  auto targets = wideningTargets(from);
  return std::find(targets.begin(), targets.end(), to) != targets.end();
}

std::string simpleNameOf(std::string_view qualified) {
  auto dot = qualified.rfind('.');
  return std::string(dot == std::string_view::npos ? qualified
                                                   : qualified.substr(dot + 1));
}

} // namespace argrec::types
