// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/interface/match.hpp"

#include "argrec/candgen/render.hpp"
#include "argrec/common.hpp"
#include "argrec/typesys/accessible.hpp"

namespace argrec::interface {

using corpus::Expr;
using corpus::ExprKind;

namespace {

bool callableUnqualified(const types::AccessibleSet &acc, const std::string &name) {
  for (const auto &m : acc.methods)
    if (m.sig->name == name)
      return true;
  return false;
}

std::string typeSpelling(const corpus::TypeRef &t, const types::UnitContext &ctx,
                         const types::Site &s, bool *generic) {
  std::string q = ctx.resolveTypeName(t.name, s.type, ctx.typeVarsAt(s.type, s.method));
  const types::TypeEntry *e = ctx.index().find(q);
  if (generic)
    *generic = !t.args.empty() || (e && !e->typeParams.empty());
  return e ? ctx.displayName(q, s.type) : t.name;
}

std::string canonicalText(const Expr &e, const corpus::ArRequest &r,
                          const types::UnitContext &ctx, const types::Site &s,
                          bool &thisAmbiguous) {
  const auto &unit = ctx.unit();
  switch (e.kind) {
  case ExprKind::FieldAccess: {
    if (!e.target)
      break;
    if (e.target->kind == ExprKind::This) {
      auto v = ctx.lookupVar(e.name, s);
      if (v && v->kind == corpus::VarKind::Field)
        return e.name;
      thisAmbiguous = true;
      break;
    }
    if (auto q = ctx.asTypeName(*e.target, s)) {
      for (const auto *f : ctx.index().fields(*q)) {
        if (f->name != e.name || !f->isStatic)
          continue;
        auto v = ctx.lookupVar(e.name, s);
        if (v && v->kind == corpus::VarKind::Field && v->declaringType == f->declaredIn)
          return e.name;
      }
    }
    break;
  }
  case ExprKind::MethodCall: {
    std::string holes = candgen::holeArgs(static_cast<int>(e.args.size()));
    if (e.target) {
      auto acc = types::accessibleElements(r, ctx);
      if (e.target->kind == ExprKind::This && callableUnqualified(acc, e.name))
        return e.name + holes;
      if (auto q = ctx.asTypeName(*e.target, s)) {
        bool isStatic = false;
        for (const auto *m : ctx.index().methods(*q, e.name))
          isStatic = isStatic || m->isStatic;
        if (isStatic && callableUnqualified(acc, e.name))
          return e.name + holes;
        return ctx.displayName(*q, s.type) + "." + e.name + holes;
      }
    }
    return candgen::placeholderize(e, unit);
  }
  case ExprKind::New: {
    bool generic = false;
    std::string t = typeSpelling(e.type, ctx, s, &generic);
    return "new " + t + (generic ? "<>" : "") +
           candgen::holeArgs(static_cast<int>(e.args.size()));
  }
  case ExprKind::NewArray: {
    std::string t = typeSpelling(e.type, ctx, s, nullptr);
    std::string out = "new " + t;
    for (int i = 0; i < std::max(1, e.type.dims); ++i)
      out += "[]";
    return out;
  }
  default:
    break;
  }
  return candgen::placeholderize(e, unit);
}

} // namespace

CanonicalGold plainGold(std::string_view text, ExprType type) {
  CanonicalGold g;
  g.text = candgen::normalizeText(text);
  g.type = type;
  return g;
}

CanonicalGold canonicalizeGold(const corpus::ArRequest &r, const types::UnitContext &ctx) {
  if (!r.gold || !r.gold->expr)
    throw ContractViolation("canonicalizeGold needs a request with a gold argument");
  CanonicalGold g;
  g.type = r.gold->type;
  auto s = ctx.siteFor(ctx.unit().calls[r.callIndex], r.location);
  g.text = candgen::normalizeText(canonicalText(*r.gold->expr, r, ctx, s, g.thisAmbiguous));
  return g;
}

bool matchesGold(std::string_view rendered, ExprType candType, const CanonicalGold &gold) {
  if (corpus::isLiteralType(gold.type) && candType == gold.type)
    return true;
  std::string c = candgen::normalizeText(rendered);
  if (c == gold.text)
    return true;
  if (!gold.thisAmbiguous && c.rfind("this.", 0) == 0 && c.substr(5) == gold.text)
    return true;
  return false;
}

bool matchesGold(const candgen::Candidate &c, const CanonicalGold &gold) {
  return matchesGold(c.rendered, c.exprType, gold);
}

} // namespace argrec::interface
