// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/pipeline/reduction.hpp"

#include "argrec/corpus/subtokens.hpp"
#include "argrec/typesys/type.hpp"

namespace argrec::pipeline {

bool isCommonType(std::string_view type) {
  if (type == types::kObject || type == types::kString)
    return true;
  if (types::isNumericPrimitive(type))
    return true;
  std::string prim = types::unboxOf(type);
  return !prim.empty() && types::isNumericPrimitive(prim);
}

std::string ruleNames(unsigned mask) {
  static const char *kNames[] = {"shared-subtoken", "recently-used-class", "boundary",
                                 "enclosing-class", "same-package"};
  std::string s;
  for (int i = 0; i < 5; ++i)
    if (mask & (1u << i)) {
      if (!s.empty())
        s += ',';
      s += kNames[i];
    }
  return s;
}

ReductionContext reductionContext(const corpus::ArRequest &r, const types::UnitContext &ctx,
                                  const types::ExpectedSet &expected) {
  const auto &unit = ctx.unit();
  const auto &idx = ctx.index();
  ReductionContext rc;
  rc.package = unit.packageName;
  rc.index = &idx;
  auto addWords = [&](std::string_view text) {
    for (auto &t : corpus::subtokensOfText(text))
      rc.subtokens.insert(std::move(t));
  };
  addWords(r.callee);
  if (r.receiver)
    addWords(unit.textOf(r.receiver->span));
  if (!expected.callee.receiverType.empty())
    addWords(types::simpleNameOf(expected.callee.receiverType.name));
  if (r.type >= 0 && r.method >= 0)
    addWords(unit.types[r.type].methods[r.method].name);

  auto vars = ctx.typeVarsAt(r.type, r.method);
  size_t end = unit.tokenIndexAt(r.location.offset);
  for (size_t i = 0; i + 1 < end; ++i) {
    const auto &t = unit.tokens[i];
    if (!t.isIdent() || !unit.tokens[i + 1].is("."))
      continue;
    if (i > 0 && unit.tokens[i - 1].is("."))
      continue;
    std::string q = ctx.resolveTypeName(t.text, r.type, vars);
    if (idx.find(q))
      rc.accessedTypes.insert(q);
  }
  for (int t = r.type; t >= 0; t = unit.types[t].outer)
    for (const auto &q : idx.closure(unit.types[t].qualifiedName))
      rc.enclosing.insert(q);
  return rc;
}

bool ruleSubject(const candgen::Candidate &c, const types::ExpectedSet &expected) {
  if (!c.staticDerived)
    return false;
  for (int i : c.expected)
    if (isCommonType(expected.types[i].type))
      return true;
  return false;
}

unsigned firedRules(const candgen::Candidate &c, const ReductionContext &rc) {
  unsigned mask = 0;
  auto words = corpus::subtokensOfText(c.rendered);
  for (const auto &w : words)
    if (rc.subtokens.count(w)) {
      mask |= kRuleSharedSubtoken;
      break;
    }
  if (rc.accessedTypes.count(c.staticType))
    mask |= kRuleRecentlyUsedClass;
  if (c.member)
    for (const auto &w : corpus::splitSubtokens(c.member->name))
      if (w == "max" || w == "min")
        mask |= kRuleBoundary;
  const std::string &owner = c.member ? c.member->declaredIn : c.owner;
  if (rc.enclosing.count(owner) || rc.enclosing.count(c.staticType))
    mask |= kRuleEnclosingClass;
  const types::TypeEntry *e = rc.index ? rc.index->find(owner) : nullptr;
  if (e && e->packageName == rc.package)
    mask |= kRuleSamePackage;
  return mask;
}

std::vector<candgen::Candidate> applyReductionRules(std::vector<candgen::Candidate> cands,
                                                   const ReductionContext &rc,
                                                   const types::ExpectedSet &expected,
                                                   std::vector<unsigned> *fired) {
  std::vector<candgen::Candidate> out;
  out.reserve(cands.size());
  if (fired)
    fired->clear();
  for (auto &c : cands) {
    unsigned mask = firedRules(c, rc);
    if (ruleSubject(c, expected) && mask == 0)
      continue;
    if (fired)
      fired->push_back(mask);
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace argrec::pipeline
