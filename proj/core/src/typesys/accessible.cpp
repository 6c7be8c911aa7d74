// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/typesys/accessible.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace argrec::types {

AccessibleSet accessibleElements(const corpus::ArRequest &r, const UnitContext &ctx) {
  const auto &unit = ctx.unit();
  const TypeIndex &idx = ctx.index();
  AccessibleSet acc;
  acc.site = ctx.siteFor(unit.calls[r.callIndex], r.location);
  const Site &s = acc.site;
  acc.vars = ctx.visibleVars(s, &acc.hiddenFields);
  std::string fromType = ctx.qualifiedOf(s.type);
  acc.thisAvailable = s.type >= 0 && !s.isStatic;
  acc.thisType = fromType;

  // Unqualified methods: the innermost enclosing type declaring a name wins.
  std::set<std::string> seenNames;
  bool staticOnly = s.isStatic;
  for (int t = s.type; t >= 0; t = unit.types[t].outer) {
    const auto &td = unit.types[t];
    std::set<std::string> here;
    for (const auto *m : idx.allMethods(td.qualifiedName)) {
      if (seenNames.count(m->name))
        continue;
      if (staticOnly && !m->isStatic)
        continue;
      if (!idx.accessible(*m, fromType, unit.packageName))
        continue;
      here.insert(m->name);
      acc.methods.push_back({m, td.qualifiedName, false});
    }
    seenNames.insert(here.begin(), here.end());
    bool inner = td.kind == corpus::TypeKind::Class && !td.mods.isStatic && td.outer >= 0;
    staticOnly = staticOnly || !inner;
  }
  for (const auto &imp : unit.imports) {
    if (!imp.isStatic)
      continue;
    std::string owner = imp.onDemand ? imp.name : imp.name.substr(0, imp.name.rfind('.'));
    std::string only = imp.onDemand ? std::string() : imp.name.substr(imp.name.rfind('.') + 1);
    for (const auto *m : idx.allMethods(owner)) {
      if (!m->isStatic || seenNames.count(m->name) || (!only.empty() && m->name != only))
        continue;
      if (!idx.accessible(*m, fromType, unit.packageName))
        continue;
      acc.methods.push_back({m, owner, true});
    }
  }

  std::set<std::string> universe;
  auto addType = [&](const std::string &q) {
    const TypeEntry *e = idx.find(q);
    if (e && idx.typeAccessible(*e, fromType, unit.packageName))
      universe.insert(q);
  };
  for (const auto &td : unit.types)
    addType(td.qualifiedName);
  for (const auto &imp : unit.imports) {
    if (imp.isStatic)
      continue;
    if (imp.onDemand) {
      for (const auto &q : idx.typesInPackage(imp.name))
        if (idx.find(q)->outer.empty())
          addType(q);
    } else {
      addType(imp.name);
    }
  }
  for (const auto &q : idx.typesInPackage(unit.packageName))
    if (idx.find(q)->outer.empty())
      addType(q);
  for (const auto &q : idx.typesInPackage("java.lang"))
    if (idx.find(q)->outer.empty())
      addType(q);
  auto vars = ctx.typeVarsAt(s.type, s.method);
  for (const auto &tok : unit.tokens) {
    if (tok.pos.offset >= r.location.offset)
      break;
    if (tok.kind != corpus::TokenKind::Identifier)
      continue;
    if (tok.text.empty() || !std::isupper(static_cast<unsigned char>(tok.text[0])))
      continue;
    std::string q = ctx.resolveTypeName(tok.text, s.type, vars);
    addType(q);
  }
  acc.staticTypes.assign(universe.begin(), universe.end());
  return acc;
}

} // namespace argrec::types
