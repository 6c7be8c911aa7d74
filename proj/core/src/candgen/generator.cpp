// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/candgen/generator.hpp"

#include "argrec/candgen/render.hpp"
#include "argrec/corpus/parser.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace argrec::candgen {
namespace {

using types::MemberKind;
using types::MemberSig;
using types::StaticType;
using types::TypeEntry;
using types::TypeIndex;

// Substitutes a receiver's type argument for a member type spelled as one
// of the owner's type variables. Collection stubs reuse the same variable
// names across the hierarchy, so lookup is by name on the receiver type.
std::string memberType(const MemberSig &m, const StaticType &recv, const TypeIndex &idx) {
  if (recv.args.empty())
    return m.type;
  std::string base = m.declared;
  std::string dims;
  while (base.size() > 2 && base.compare(base.size() - 2, 2, "[]") == 0) {
    dims += "[]";
    base.resize(base.size() - 2);
  }
  const TypeEntry *e = idx.find(recv.name);
  if (!e)
    return m.type;
  auto it = std::find(e->typeParams.begin(), e->typeParams.end(), base);
  if (it == e->typeParams.end())
    return m.type;
  size_t i = static_cast<size_t>(it - e->typeParams.begin());
  if (i >= recv.args.size() || recv.args[i].empty())
    return m.type;
  return recv.args[i] + dims;
}

class Generator {
public:
  Generator(const types::AccessibleSet &acc,
            const types::ExpectedSet &expected, const types::UnitContext &ctx,
            const GenOptions &opts)
      : acc_(acc), expected_(expected), ctx_(ctx), idx_(ctx.index()), opts_(opts),
        fromType_(ctx.qualifiedOf(acc.site.type)), pkg_(ctx.unit().packageName) {}

  std::vector<Candidate> run() {
    variables();
    unqualifiedMethods();
    staticImports();
    staticMembers();
    literals();
    typeLiterals();
    thisExpr();
    casts();
    creations();

    std::vector<Candidate> out;
    out.reserve(byText_.size());
    for (auto &[text, c] : byText_)
      out.push_back(std::move(c));
    std::stable_sort(out.begin(), out.end(), [](const Candidate &a, const Candidate &b) {
      if (a.exprType != b.exprType)
        return a.exprType < b.exprType;
      return a.rendered < b.rendered;
    });
    return out;
  }

private:
  const std::vector<int> &compatibleWith(const std::string &type) {
    auto it = compat_.find(type);
    if (it != compat_.end())
      return it->second;
    std::vector<int> ok;
    for (size_t i = 0; i < expected_.types.size(); ++i)
      if (types::isCompatible(type, expected_.types[i].type, idx_, ctx_.strict()))
        ok.push_back(static_cast<int>(i));
    return compat_.emplace(type, std::move(ok)).first->second;
  }

  void emit(Candidate c) {
    const auto &ok = compatibleWith(c.resultType);
    if (ok.empty())
      return;
    c.expected = ok;
    byText_.emplace(c.rendered, std::move(c));
  }

  bool isAccessible(const MemberSig &m) const {
    return idx_.accessible(m, fromType_, pkg_);
  }

  // Member accesses on a receiver expression. `proto` carries the
  // provenance shared by everything built on this receiver.
  void members(const std::string &recvText, const StaticType &recvType, bool typeReceiver,
               const Candidate &proto, int level) {
    if (types::isPrimitive(recvType.name) || recvType.name == types::kNull)
      return;
    if (types::isArray(recvType.name)) {
      if (typeReceiver)
        return;
      Candidate len = proto;
      len.rendered = recvText + ".length";
      len.resultType = "int";
      len.exprType = proto.exprType == ExprType::SimpleName ||
                             proto.exprType == ExprType::QualifiedName
                         ? ExprType::QualifiedName
                         : ExprType::FieldAccess;
      len.receiver = recvText;
      len.holes = proto.holes;
      emit(len);
      Candidate at = proto;
      at.rendered = recvText + "[]";
      at.resultType = types::componentOf(recvType.name);
      at.exprType = ExprType::ArrayAccess;
      at.isVariable = false;
      at.receiver = recvText;
      at.holes = proto.holes + 1;
      emit(at);
      return;
    }
    bool nameChain =
        typeReceiver || proto.exprType == ExprType::SimpleName || proto.exprType == ExprType::QualifiedName;
    for (const MemberSig *f : idx_.fields(recvType.name)) {
      if (f->isStatic != typeReceiver || !isAccessible(*f))
        continue;
      Candidate c = proto;
      c.rendered = recvText + "." + f->name;
      c.resultType = memberType(*f, recvType, idx_);
      c.exprType = nameChain ? ExprType::QualifiedName : ExprType::FieldAccess;
      c.member = f;
      c.owner = f->declaredIn;
      c.receiver = recvText;
      c.holes = proto.holes;
      if (typeReceiver) {
        c.isVariable = true;
        c.varName = f->name;
        c.declBlock = 0;
      } else if (!proto.isVariable) {
        c.isVariable = false;
      }
      emit(c);
      if (level < opts_.depth)
        members(c.rendered, {c.resultType, {}}, false, c, level + 1);
    }
    std::set<std::string> seen;
    for (const MemberSig *m : idx_.allMethods(recvType.name)) {
      if (m->kind != MemberKind::Method || m->isStatic != typeReceiver || !isAccessible(*m))
        continue;
      if (m->type == "void")
        continue;
      int n = static_cast<int>(m->params.size());
      std::string text = recvText + "." + m->name + holeArgs(n);
      std::string rt = memberType(*m, recvType, idx_);
      if (!seen.insert(text + "|" + rt).second)
        continue;
      Candidate c = proto;
      c.rendered = text;
      c.resultType = rt;
      c.exprType = ExprType::MethodInvocation;
      c.member = m;
      c.owner = m->declaredIn;
      c.receiver = recvText;
      c.isVariable = false;
      c.holes = proto.holes + n;
      emit(c);
      if (level < opts_.depth)
        members(c.rendered, {c.resultType, {}}, false, c, level + 1);
    }
  }

  void variables() {
    for (const auto &v : acc_.vars) {
      Candidate c;
      c.exprType = ExprType::SimpleName;
      c.rendered = v.name;
      c.resultType = v.type.name;
      c.base = BaseKind::Variable;
      c.baseName = v.name;
      c.isVariable = true;
      c.varName = v.name;
      c.declBlock = v.block;
      c.owner = v.declaringType;
      if (v.type.empty())
        continue;
      emit(c);
      members(v.name, v.type, false, c, 1);
    }
    for (const auto &v : acc_.hiddenFields) {
      if (v.type.empty())
        continue;
      Candidate c;
      c.exprType = ExprType::FieldAccess;
      c.rendered = "this." + v.name;
      c.resultType = v.type.name;
      c.base = BaseKind::HiddenField;
      c.baseName = v.name;
      c.receiver = "this";
      c.isVariable = true;
      c.varName = v.name;
      c.declBlock = v.block;
      c.owner = v.declaringType;
      emit(c);
    }
  }

  void unqualifiedMethods() {
    for (const auto &am : acc_.methods) {
      const MemberSig *m = am.sig;
      if (m->kind != MemberKind::Method || m->type == "void")
        continue;
      int n = static_cast<int>(m->params.size());
      Candidate c;
      c.exprType = ExprType::MethodInvocation;
      c.rendered = m->name + holeArgs(n);
      c.resultType = m->type;
      c.base = BaseKind::Method;
      c.baseName = m->name;
      c.member = m;
      c.owner = m->declaredIn;
      c.staticDerived = am.viaStaticImport;
      if (am.viaStaticImport)
        c.staticType = am.owner;
      c.holes = n;
      // Overloads with equal arity render identically; keep the first
      // compatible one.
      if (byText_.count(c.rendered))
        continue;
      emit(c);
      if (opts_.depth > 1)
        members(c.rendered, {c.resultType, {}}, false, c, 2);
    }
  }

  void staticImports() {
    std::set<std::string> varNames;
    for (const auto &v : acc_.vars)
      varNames.insert(v.name);
    for (const auto &imp : ctx_.unit().imports) {
      if (!imp.isStatic)
        continue;
      std::string owner = imp.onDemand ? imp.name : imp.name.substr(0, imp.name.rfind('.'));
      std::string only = imp.onDemand ? std::string() : imp.name.substr(imp.name.rfind('.') + 1);
      for (const MemberSig *f : idx_.fields(owner)) {
        if (!f->isStatic || varNames.count(f->name) || (!only.empty() && f->name != only))
          continue;
        if (!isAccessible(*f))
          continue;
        Candidate c;
        c.exprType = ExprType::SimpleName;
        c.rendered = f->name;
        c.resultType = f->type;
        c.base = BaseKind::StaticType;
        c.baseName = f->name;
        c.member = f;
        c.owner = f->declaredIn;
        c.staticDerived = true;
        c.staticType = owner;
        c.isVariable = true;
        c.varName = f->name;
        c.declBlock = 0;
        emit(c);
      }
    }
  }

  // Static members reachable without qualification are generated in their
  // unqualified form only.
  bool visibleUnqualified(const MemberSig &m) const {
    if (m.kind == MemberKind::Field) {
      for (const auto &v : acc_.vars)
        if (v.name == m.name && v.declaringType == m.declaredIn)
          return true;
      return false;
    }
    for (const auto &am : acc_.methods)
      if (am.sig->name == m.name)
        return true;
    return false;
  }

  void staticMembers() {
    for (const auto &q : acc_.staticTypes) {
      const TypeEntry *e = idx_.find(q);
      if (!e)
        continue;
      std::string shown = ctx_.displayName(q, acc_.site.type);
      Candidate proto;
      proto.exprType = ExprType::QualifiedName;
      proto.base = BaseKind::StaticType;
      proto.baseName = shown;
      proto.owner = q;
      proto.staticDerived = true;
      proto.staticType = q;
      for (const MemberSig *f : idx_.fields(q))
        if (f->isStatic && visibleUnqualified(*f))
          hiddenStatic_.insert(shown + "." + f->name);
      for (const MemberSig *m : idx_.allMethods(q))
        if (m->isStatic && visibleUnqualified(*m))
          hiddenStatic_.insert(shown + "." + m->name + holeArgs(static_cast<int>(m->params.size())));
      members(shown, {q, {}}, true, proto, 1);
    }
    for (const auto &h : hiddenStatic_)
      byText_.erase(h);
  }

  void literals() {
    for (const auto &l : defaultLiterals()) {
      Candidate c;
      c.exprType = l.exprType;
      c.rendered = std::string(l.text);
      c.resultType = std::string(l.type);
      c.base = BaseKind::Literal;
      emit(c);
    }
  }

  void typeLiterals() {
    if (compatibleWith(std::string(types::kClass)).empty())
      return;
    for (const auto &q : acc_.staticTypes) {
      Candidate c;
      c.exprType = ExprType::TypeLiteral;
      c.rendered = ctx_.displayName(q, acc_.site.type) + ".class";
      c.resultType = std::string(types::kClass);
      c.base = BaseKind::StaticType;
      c.baseName = ctx_.displayName(q, acc_.site.type);
      c.owner = q;
      emit(c);
    }
  }

  void thisExpr() {
    if (!acc_.thisAvailable || acc_.thisType.empty())
      return;
    Candidate c;
    c.exprType = ExprType::ThisExpr;
    c.rendered = "this";
    c.resultType = acc_.thisType;
    c.base = BaseKind::This;
    c.baseName = "this";
    emit(c);
  }

  void casts() {
    for (const auto &et : expected_.types) {
      const std::string &t = et.type;
      if (!types::isReference(t) || types::isArray(t) || t == types::kObject)
        continue;
      if (!idx_.find(t))
        continue;
      std::string shown = ctx_.displayName(t, acc_.site.type);
      for (const auto &v : acc_.vars) {
        if (v.type.name == t || types::isPrimitive(v.type.name))
          continue;
        if (!idx_.isSubtype(t, v.type.name))
          continue;
        Candidate c;
        c.exprType = ExprType::CastExpr;
        c.rendered = "(" + shown + ") " + v.name;
        c.resultType = t;
        c.base = BaseKind::Variable;
        c.baseName = v.name;
        c.owner = v.declaringType;
        emit(c);
      }
    }
  }

  void creations() {
    for (const auto &q : acc_.staticTypes) {
      const TypeEntry *e = idx_.find(q);
      if (!e || e->kind != types::TypeKind::Class || e->isAbstract)
        continue;
      if (compatibleWith(q).empty())
        continue;
      std::string shown = ctx_.displayName(q, acc_.site.type);
      if (!e->typeParams.empty())
        shown += "<>";
      for (const MemberSig *k : idx_.constructors(q)) {
        if (!isAccessible(*k))
          continue;
        int n = static_cast<int>(k->params.size());
        Candidate c;
        c.exprType = ExprType::ObjectCreation;
        c.rendered = "new " + shown + holeArgs(n);
        c.resultType = q;
        c.base = BaseKind::Creation;
        c.baseName = e->simpleName;
        c.member = k;
        c.owner = q;
        c.holes = n;
        if (!byText_.count(c.rendered))
          emit(c);
      }
    }
    for (const auto &et : expected_.types) {
      const std::string &t = et.type;
      if (!types::isArray(t))
        continue;
      std::string comp = types::componentOf(t);
      if (types::isArray(comp))
        continue;
      if (!types::isPrimitive(comp) && !idx_.find(comp))
        continue;
      Candidate c;
      c.exprType = ExprType::ArrayCreation;
      c.rendered = "new " + ctx_.displayName(comp, acc_.site.type) + "[]";
      c.resultType = t;
      c.base = BaseKind::Creation;
      c.baseName = types::simpleNameOf(comp);
      c.owner = comp;
      c.holes = 1;
      emit(c);
    }
  }

  const types::AccessibleSet &acc_;
  const types::ExpectedSet &expected_;
  const types::UnitContext &ctx_;
  const TypeIndex &idx_;
  GenOptions opts_;
  std::string fromType_;
  std::string pkg_;
  std::map<std::string, std::vector<int>> compat_;
  std::map<std::string, Candidate> byText_;
  std::set<std::string> hiddenStatic_;
};

} // namespace

std::vector<Candidate> generateCandidates(const corpus::ArRequest &r,
                                          const types::AccessibleSet &acc,
                                          const types::ExpectedSet &expected,
                                          const types::UnitContext &ctx,
                                          const GenOptions &opts) {
  if (expected.empty())
    return {};
  (void)r;
  return Generator(acc, expected, ctx, opts).run();
}

} // namespace argrec::candgen
