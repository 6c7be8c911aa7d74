// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/typesys/context.hpp"

#include <algorithm>
#include <set>

namespace argrec::types {

using corpus::ExprKind;
using corpus::LiteralKind;

UnitContext::UnitContext(const CompilationUnit &unit, const TypeIndex &index, bool strict)
    : unit_(&unit), index_(&index), scopes_(corpus::buildScopeTree(unit)),
      strict_(strict) {}

std::string UnitContext::qualifiedOf(int typeDecl) const {
  return typeDecl < 0 ? std::string() : unit_->types[typeDecl].qualifiedName;
}

const corpus::MethodDecl *UnitContext::methodOf(const Site &s) const {
  if (s.type < 0 || s.method < 0)
    return nullptr;
  return &unit_->types[s.type].methods[s.method];
}

int UnitContext::classBodyBlock(int typeDecl) const {
  return typeDecl < 0 ? 0 : unit_->types[typeDecl].body;
}

Site UnitContext::siteAt(const SourcePos &pos) const {
  Site s;
  s.pos = pos;
  s.block = scopes_.innermostAt(pos);
  s.type = scopes_.blocks[s.block].type;
  s.method = scopes_.blocks[s.block].method;
  if (const auto *m = methodOf(s))
    s.isStatic = m->mods.isStatic;
  return s;
}

Site UnitContext::siteFor(const corpus::CallSite &cs, const SourcePos &pos) const {
  Site s;
  s.pos = pos;
  s.block = scopes_.innermostAt(pos);
  s.type = cs.type;
  s.method = cs.method;
  s.isStatic = cs.inStaticContext;
  return s;
}

std::vector<std::string> UnitContext::typeVarsAt(int type, int method) const {
  std::vector<std::string> vars;
  if (type >= 0 && method >= 0) {
    const auto &m = unit_->types[type].methods[method];
    vars.insert(vars.end(), m.typeParams.begin(), m.typeParams.end());
  }
  for (int t = type; t >= 0; t = unit_->types[t].outer) {
    const auto &td = unit_->types[t];
    vars.insert(vars.end(), td.typeParams.begin(), td.typeParams.end());
  }
  return vars;
}

std::string UnitContext::resolveTypeName(std::string_view name, int type,
                                         const std::vector<std::string> &typeVars) const {
  if (name.empty() || isPrimitive(name) || name == "void")
    return std::string(name);
  const TypeIndex &idx = *index_;
  auto dot = name.find('.');
  if (dot != std::string_view::npos) {
    if (idx.contains(name))
      return std::string(name);
    std::string head = resolveTypeName(name.substr(0, dot), type, typeVars);
    std::string nested = head + std::string(name.substr(dot));
    if (idx.contains(nested))
      return nested;
    return std::string(name);
  }
  if (std::find(typeVars.begin(), typeVars.end(), name) != typeVars.end())
    return std::string(kObject);
  for (int t = type; t >= 0; t = unit_->types[t].outer) {
    const auto &td = unit_->types[t];
    if (td.name == name)
      return td.qualifiedName;
    std::string q = td.qualifiedName + "." + std::string(name);
    if (idx.contains(q))
      return q;
    // Member types inherited from supertypes.
    for (const auto &sup : idx.supertypeChain(td.qualifiedName)) {
      std::string inherited = sup + "." + std::string(name);
      if (idx.contains(inherited))
        return inherited;
    }
  }
  const std::string &pkg = unit_->packageName;
  for (int t : unit_->topLevel)
    if (unit_->types[t].name == name)
      return unit_->types[t].qualifiedName;
  for (const auto &imp : unit_->imports) {
    if (imp.isStatic || imp.onDemand)
      continue;
    auto d = imp.name.rfind('.');
    if (std::string_view(imp.name).substr(d == std::string::npos ? 0 : d + 1) == name)
      return imp.name;
  }
  std::string samePkg = pkg.empty() ? std::string(name) : pkg + "." + std::string(name);
  if (idx.contains(samePkg))
    return samePkg;
  for (const auto &imp : unit_->imports) {
    if (imp.isStatic || !imp.onDemand)
      continue;
    std::string q = imp.name + "." + std::string(name);
    if (idx.contains(q))
      return q;
  }
  std::string lang = "java.lang." + std::string(name);
  if (idx.contains(lang))
    return lang;
  return std::string(name);
}

StaticType UnitContext::resolveTypeRef(const TypeRef &t, int type, int method) const {
  StaticType st;
  if (t.empty())
    return st;
  auto vars = typeVarsAt(type, method);
  st.name = resolveTypeName(t.name, type, vars);
  for (int i = 0; i < t.dims; ++i)
    st.name += "[]";
  for (const auto &a : t.args) {
    if (a.name == "?")
      st.args.push_back(std::string(kObject));
    else
      st.args.push_back(resolveTypeRef(a, type, method).name);
  }
  return st;
}

std::optional<VarRef> UnitContext::staticImportField(std::string_view name) const {
  for (const auto &imp : unit_->imports) {
    if (!imp.isStatic)
      continue;
    std::string owner = imp.name;
    if (!imp.onDemand) {
      auto d = imp.name.rfind('.');
      if (d == std::string::npos || std::string_view(imp.name).substr(d + 1) != name)
        continue;
      owner = imp.name.substr(0, d);
    }
    for (const auto *f : index_->fields(owner)) {
      if (f->name != name || !f->isStatic)
        continue;
      VarRef v;
      v.name = f->name;
      v.type.name = f->type;
      v.kind = VarKind::Field;
      v.block = 0;
      v.isStatic = true;
      v.declaringType = f->declaredIn;
      return v;
    }
  }
  return std::nullopt;
}

namespace {

// Walks outward from the site and reports each visible variable once.
template <class Fn>
void walkVars(const UnitContext &ctx, const Site &s, Fn &&fn) {
  const auto &unit = ctx.unit();
  const auto &tree = ctx.scopes();
  const auto &idx = ctx.index();
  std::string fromType = ctx.qualifiedOf(s.type);
  bool instanceOk = !s.isStatic;
  for (int b = s.block; b >= 0; b = tree.blocks[b].parent) {
    const auto &blk = tree.blocks[b];
    if (blk.kind == corpus::BlockKind::ClassBody) {
      const auto &td = unit.types[blk.type];
      for (const auto &v : blk.vars) {
        if (!v.isStatic && !instanceOk)
          continue;
        if (!fn(v.name, &v, nullptr, b, blk.type))
          return;
      }
      for (const auto *f : idx.fields(td.qualifiedName)) {
        if (f->declaredIn == td.qualifiedName)
          continue;
        if (!f->isStatic && !instanceOk)
          continue;
        if (!idx.accessible(*f, fromType, unit.packageName))
          continue;
        if (!fn(f->name, nullptr, f, b, blk.type))
          return;
      }
      bool inner = td.kind == corpus::TypeKind::Class && !td.mods.isStatic && td.outer >= 0;
      instanceOk = instanceOk && inner;
      continue;
    }
    // Later declarations in a block shadow nothing earlier in it, so order
    // within a block does not matter; report in declaration order.
    for (const auto &v : blk.vars) {
      if (v.kind != VarKind::Param && s.pos < v.visibleFrom)
        continue;
      if (v.kind == VarKind::Param && s.pos < v.visibleFrom)
        continue;
      if (!fn(v.name, &v, nullptr, b, blk.type))
        return;
    }
  }
}

} // namespace

std::optional<VarRef> UnitContext::lookupVar(std::string_view name, const Site &s) const {
  std::optional<VarRef> found;
  walkVars(*this, s,
           [&](const std::string &n, const VarDecl *d, const MemberSig *f, int block,
               int type) {
             if (n != name)
               return true;
             VarRef v;
             v.name = n;
             v.block = block;
             if (d) {
               v.kind = d->kind;
               v.isStatic = d->isStatic;
               v.pos = d->pos;
               if (d->type.name == "var" && d->init)
                 v.type = typeOfImpl(*d->init, siteAt(d->pos), 1);
               else
                 v.type = resolveTypeRef(d->type, type,
                                         scopes_.blocks[block].kind == corpus::BlockKind::ClassBody
                                             ? -1
                                             : scopes_.blocks[block].method);
               if (d->kind == VarKind::Field)
                 v.declaringType = qualifiedOf(type);
             } else {
               v.kind = VarKind::Field;
               v.isStatic = f->isStatic;
               v.type.name = f->type;
               v.declaringType = f->declaredIn;
             }
             found = std::move(v);
             return false;
           });
  if (!found)
    found = staticImportField(name);
  return found;
}

std::vector<VarRef> UnitContext::visibleVars(const Site &s,
                                             std::vector<VarRef> *hiddenFields) const {
  std::vector<VarRef> out;
  std::set<std::string> seen;
  walkVars(*this, s,
           [&](const std::string &n, const VarDecl *d, const MemberSig *f, int block,
               int type) {
             VarRef v;
             v.name = n;
             v.block = block;
             if (d) {
               v.kind = d->kind;
               v.isStatic = d->isStatic;
               v.pos = d->pos;
               if (d->type.name == "var" && d->init)
                 v.type = typeOfImpl(*d->init, siteAt(d->pos), 1);
               else
                 v.type = resolveTypeRef(d->type, type,
                                         scopes_.blocks[block].kind == corpus::BlockKind::ClassBody
                                             ? -1
                                             : scopes_.blocks[block].method);
               if (d->kind == VarKind::Field)
                 v.declaringType = qualifiedOf(type);
             } else {
               v.kind = VarKind::Field;
               v.isStatic = f->isStatic;
               v.type.name = f->type;
               v.declaringType = f->declaredIn;
             }
             if (!seen.insert(n).second) {
               if (hiddenFields && v.kind == VarKind::Field)
                 hiddenFields->push_back(std::move(v));
               return true;
             }
             out.push_back(std::move(v));
             return true;
           });
  for (const auto &imp : unit_->imports) {
    if (!imp.isStatic)
      continue;
    std::string owner = imp.onDemand ? imp.name : imp.name.substr(0, imp.name.rfind('.'));
    for (const auto *f : index_->fields(owner)) {
      if (!f->isStatic || seen.count(f->name))
        continue;
      if (!imp.onDemand && imp.name.substr(imp.name.rfind('.') + 1) != f->name)
        continue;
      VarRef v;
      v.name = f->name;
      v.type.name = f->type;
      v.kind = VarKind::Field;
      v.isStatic = true;
      v.declaringType = f->declaredIn;
      seen.insert(f->name);
      out.push_back(std::move(v));
    }
  }
  return out;
}

std::optional<std::string> UnitContext::asTypeName(const Expr &e, const Site &s) const {
  std::string dotted;
  const Expr *head = &e;
  std::vector<std::string> parts;
  while (head->kind == ExprKind::FieldAccess && head->target) {
    parts.push_back(head->name);
    head = head->target.get();
  }
  if (head->kind != ExprKind::Name)
    return std::nullopt;
  if (lookupVar(head->name, s))
    return std::nullopt;
  dotted = head->name;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    dotted += "." + *it;
  std::string r = resolveTypeName(dotted, s.type, typeVarsAt(s.type, s.method));
  if (index_->contains(r))
    return r;
  return std::nullopt;
}

StaticType UnitContext::typeOf(const Expr &e, const Site &s) const {
  return typeOfImpl(e, s, 0);
}

namespace {

std::string promote(const std::string &a, const std::string &b) {
  auto rank = [](const std::string &t) {
    std::string p = isPrimitive(t) ? t : unboxOf(t);
    if (p == "double")
      return 4;
    if (p == "float")
      return 3;
    if (p == "long")
      return 2;
    if (p.empty() || p == "boolean")
      return -1;
    return 1;
  };
  int r = std::max(rank(a), rank(b));
  if (rank(a) < 0 || rank(b) < 0)
    return {};
  static const char *names[] = {"", "int", "long", "float", "double"};
  return names[r];
}

std::string literalType(const Expr &e) {
  const std::string &t = e.name;
  switch (e.literal) {
  case LiteralKind::String:
    return std::string(kString);
  case LiteralKind::Char:
    return "char";
  case LiteralKind::Int:
    return (!t.empty() && (t.back() == 'L' || t.back() == 'l')) ? "long" : "int";
  case LiteralKind::Float:
    return (!t.empty() && (t.back() == 'f' || t.back() == 'F')) ? "float" : "double";
  case LiteralKind::Boolean:
    return "boolean";
  case LiteralKind::Null:
    return std::string(kNull);
  case LiteralKind::None:
    break;
  }
  return {};
}

} // namespace

StaticType UnitContext::typeOfImpl(const Expr &e, const Site &s, int depth) const {
  if (depth > 16)
    return {};
  const TypeIndex &idx = *index_;
  switch (e.kind) {
  case ExprKind::Literal:
    return {literalType(e), {}};
  case ExprKind::Name: {
    if (auto v = lookupVar(e.name, s))
      return v->type;
    return {};
  }
  case ExprKind::FieldAccess: {
    if (!e.target)
      return {};
    StaticType owner;
    bool isStaticOwner = false;
    if (auto t = asTypeName(*e.target, s)) {
      owner.name = *t;
      isStaticOwner = true;
    } else {
      owner = typeOfImpl(*e.target, s, depth + 1);
    }
    if (owner.empty())
      return {};
    if (isArray(owner.name) && e.name == "length")
      return {"int", {}};
    for (const auto *f : idx.fields(owner.name))
      if (f->name == e.name && (!isStaticOwner || f->isStatic))
        return {f->type, {}};
    return {};
  }
  case ExprKind::MethodCall:
  case ExprKind::New: {
    CalleeInfo ci = resolveCall(e, s);
    if (e.kind == ExprKind::New)
      return resolveTypeRef(e.type, s.type, s.method);
    if (ci.overloads.empty())
      return {};
    const MemberSig *best = nullptr;
    for (const auto *m : ci.overloads) {
      if (m->params.size() == e.args.size() || (m->varargs && e.args.size() + 1 >= m->params.size())) {
        best = m;
        break;
      }
    }
    if (!best)
      best = ci.overloads.front();
    if (best->kind == MemberKind::Constructor)
      return {"void", {}};
    StaticType r{best->type, {}};
    // Substitute a receiver type argument for a bare type-variable result.
    if (const TypeEntry *owner = idx.find(best->declaredIn)) {
      auto it = std::find(owner->typeParams.begin(), owner->typeParams.end(), best->declared);
      if (it != owner->typeParams.end() && ci.receiverType.name == owner->qualifiedName) {
        size_t k = static_cast<size_t>(it - owner->typeParams.begin());
        if (k < ci.receiverType.args.size())
          r.name = ci.receiverType.args[k];
      }
    }
    return r;
  }
  case ExprKind::NewArray: {
    return resolveTypeRef(e.type, s.type, s.method);
  }
  case ExprKind::ArrayAccess: {
    if (!e.target)
      return {};
    StaticType t = typeOfImpl(*e.target, s, depth + 1);
    return {componentOf(t.name), {}};
  }
  case ExprKind::Cast:
    return resolveTypeRef(e.type, s.type, s.method);
  case ExprKind::This:
    if (!e.name.empty())
      return {resolveTypeName(e.name, s.type), {}};
    return {qualifiedOf(s.type), {}};
  case ExprKind::Super: {
    std::string q = qualifiedOf(s.type);
    if (const TypeEntry *t = idx.find(q))
      if (!t->supertypes.empty())
        return {t->supertypes.front(), {}};
    return {std::string(kObject), {}};
  }
  case ExprKind::ClassLit:
    return {std::string(kClass), {}};
  case ExprKind::Paren:
    return e.target ? typeOfImpl(*e.target, s, depth + 1) : StaticType{};
  case ExprKind::Conditional:
    return e.args.empty() ? StaticType{} : typeOfImpl(*e.args[0], s, depth + 1);
  case ExprKind::Assign:
    return e.target ? typeOfImpl(*e.target, s, depth + 1) : StaticType{};
  case ExprKind::InstanceOf:
    return {"boolean", {}};
  case ExprKind::Binary: {
    const std::string &op = e.name;
    if (op == "&&" || op == "||" || op == "==" || op == "!=" || op == "<" ||
        op == ">" || op == "<=" || op == ">=")
      return {"boolean", {}};
    if (e.args.size() != 2)
      return {};
    StaticType a = typeOfImpl(*e.args[0], s, depth + 1);
    StaticType b = typeOfImpl(*e.args[1], s, depth + 1);
    if (op == "+" && (a.name == kString || b.name == kString))
      return {std::string(kString), {}};
    if ((op == "&" || op == "|" || op == "^") && a.name == "boolean")
      return {"boolean", {}};
    if (op == "<<" || op == ">>" || op == ">>>")
      return {promote(a.name, "int"), {}};
    return {promote(a.name, b.name), {}};
  }
  case ExprKind::Unary: {
    if (!e.target)
      return {};
    StaticType t = typeOfImpl(*e.target, s, depth + 1);
    if (e.name == "!")
      return {"boolean", {}};
    if (e.name == "-" || e.name == "+" || e.name == "~")
      return {promote(t.name, "int"), {}};
    return t;
  }
  default:
    return {};
  }
}

CalleeInfo UnitContext::resolveCall(const Expr &call, const Site &s) const {
  CalleeInfo ci;
  const TypeIndex &idx = *index_;
  std::string fromType = qualifiedOf(s.type);
  const std::string &pkg = unit_->packageName;
  auto keepAccessible = [&](std::vector<const MemberSig *> ms, bool staticOnly) {
    std::vector<const MemberSig *> out;
    for (const auto *m : ms)
      if (idx.accessible(*m, fromType, pkg) && (!staticOnly || m->isStatic))
        out.push_back(m);
    return out;
  };
  auto superclassOf = [&](const std::string &q) -> std::string {
    if (const TypeEntry *t = idx.find(q))
      for (const auto &sup : t->supertypes)
        if (const TypeEntry *st = idx.find(sup); st && st->kind != TypeKind::Interface)
          return sup;
    return std::string(kObject);
  };

  if (call.kind == ExprKind::New) {
    ci.isConstructor = true;
    ci.receiverType = resolveTypeRef(call.type, s.type, s.method);
    ci.overloads = keepAccessible(idx.constructors(ci.receiverType.name), false);
    ci.resolved = !ci.overloads.empty();
    return ci;
  }
  if (call.kind != ExprKind::MethodCall)
    return ci;
  if (!call.target && (call.name == "this" || call.name == "super")) {
    ci.isConstructor = true;
    std::string q = call.name == "this" ? fromType : superclassOf(fromType);
    ci.receiverType.name = q;
    ci.overloads = keepAccessible(idx.constructors(q), false);
    ci.resolved = !ci.overloads.empty();
    return ci;
  }
  if (!call.target) {
    bool staticOnly = s.isStatic;
    for (int t = s.type; t >= 0; t = unit_->types[t].outer) {
      const auto &td = unit_->types[t];
      auto ms = keepAccessible(idx.methods(td.qualifiedName, call.name), staticOnly);
      if (!ms.empty()) {
        ci.overloads = std::move(ms);
        ci.receiverType.name = td.qualifiedName;
        ci.resolved = true;
        return ci;
      }
      bool inner = td.kind == corpus::TypeKind::Class && !td.mods.isStatic && td.outer >= 0;
      staticOnly = staticOnly || !inner;
    }
    for (const auto &imp : unit_->imports) {
      if (!imp.isStatic)
        continue;
      std::string owner = imp.onDemand ? imp.name : imp.name.substr(0, imp.name.rfind('.'));
      if (!imp.onDemand && imp.name.substr(imp.name.rfind('.') + 1) != call.name)
        continue;
      auto ms = keepAccessible(idx.methods(owner, call.name), true);
      if (!ms.empty()) {
        ci.overloads = std::move(ms);
        ci.receiverType.name = owner;
        ci.staticReceiver = true;
        ci.resolved = true;
        return ci;
      }
    }
    return ci;
  }
  const Expr &target = *call.target;
  if (target.kind == ExprKind::Super) {
    ci.receiverType.name = superclassOf(fromType);
  } else if (auto t = asTypeName(target, s)) {
    ci.receiverType.name = *t;
    ci.staticReceiver = true;
  } else {
    ci.receiverType = typeOf(target, s);
  }
  if (ci.receiverType.empty())
    return ci;
  ci.overloads = keepAccessible(idx.methods(ci.receiverType.name, call.name), ci.staticReceiver);
  ci.resolved = !ci.overloads.empty();
  return ci;
}

std::string UnitContext::displayName(std::string_view qualified, int type) const {
  if (isArray(qualified))
    return displayName(componentOf(qualified), type) + "[]";
  if (isPrimitive(qualified))
    return std::string(qualified);
  const TypeEntry *e = index_->find(qualified);
  std::string simple = e ? e->simpleName : simpleNameOf(qualified);
  if (resolveTypeName(simple, type) == qualified)
    return simple;
  if (e && !e->outer.empty()) {
    std::string outer = displayName(e->outer, type);
    if (resolveTypeName(outer + "." + simple, type) == qualified)
      return outer + "." + simple;
  }
  return std::string(qualified);
}

// ---- index construction ------------------------------------------------------

namespace {

Access typeAccess(const corpus::TypeDecl &td, const CompilationUnit &unit) {
  if (td.outer >= 0 && unit.types[td.outer].kind == corpus::TypeKind::Interface)
    return Access::Public;
  return td.mods.access;
}

TypeEntry skeleton(const CompilationUnit &unit, int i, const std::string &project) {
  const auto &td = unit.types[i];
  TypeEntry e;
  e.qualifiedName = td.qualifiedName;
  e.simpleName = td.name;
  e.packageName = unit.packageName;
  e.outer = td.outer >= 0 ? unit.types[td.outer].qualifiedName : std::string();
  e.kind = td.kind == corpus::TypeKind::Class       ? TypeKind::Class
           : td.kind == corpus::TypeKind::Interface ? TypeKind::Interface
                                                    : TypeKind::Enum;
  e.isAbstract = td.mods.isAbstract || td.kind == corpus::TypeKind::Interface;
  e.isStatic = td.outer < 0 || td.mods.isStatic || td.kind != corpus::TypeKind::Class;
  e.access = typeAccess(td, unit);
  e.typeParams = td.typeParams;
  e.source = TypeSource::Project;
  e.file = unit.path;
  e.project = project;
  return e;
}

} // namespace

TypeIndex buildTypeIndex(const std::vector<const CompilationUnit *> &units,
                         std::vector<TypeEntry> stubs,
                         const std::vector<std::string> &projects) {
  auto projectOf = [&](size_t u) {
    return u < projects.size() ? projects[u] : std::string();
  };
  TypeIndex names;
  for (const auto &s : stubs)
    names.add(s);
  for (size_t u = 0; u < units.size(); ++u)
    for (size_t i = 0; i < units[u]->types.size(); ++i)
      names.add(skeleton(*units[u], static_cast<int>(i), projectOf(u)));

  TypeIndex index;
  for (auto &s : stubs)
    index.add(std::move(s));
  for (size_t u = 0; u < units.size(); ++u) {
    const CompilationUnit &unit = *units[u];
    UnitContext ctx(unit, names);
    for (size_t ii = 0; ii < unit.types.size(); ++ii) {
      int i = static_cast<int>(ii);
      const auto &td = unit.types[i];
      TypeEntry e = skeleton(unit, i, projectOf(u));
      auto classVars = ctx.typeVarsAt(i, -1);
      for (const auto &st : td.supertypes)
        e.supertypes.push_back(ctx.resolveTypeName(st.name, td.outer >= 0 ? td.outer : i, classVars));
      if (td.kind == corpus::TypeKind::Enum && names.contains("java.lang.Enum"))
        e.supertypes.push_back("java.lang.Enum");
      for (const auto &f : td.fields) {
        MemberSig m;
        m.name = f.name;
        m.kind = MemberKind::Field;
        m.isStatic = f.mods.isStatic;
        m.access = f.mods.access;
        m.type = ctx.resolveTypeRef(f.type, i, -1).name;
        m.declared = f.type.erasedText();
        e.members.push_back(std::move(m));
      }
      for (size_t mi = 0; mi < td.methods.size(); ++mi) {
        const auto &md = td.methods[mi];
        MemberSig m;
        m.name = md.isCtor ? td.name : md.name;
        m.kind = md.isCtor ? MemberKind::Constructor : MemberKind::Method;
        m.isStatic = md.mods.isStatic;
        m.isAbstract = md.mods.isAbstract;
        m.access = md.mods.access;
        int mIdx = static_cast<int>(mi);
        m.type = md.isCtor ? td.qualifiedName : ctx.resolveTypeRef(md.returnType, i, mIdx).name;
        m.declared = md.returnType.erasedText();
        for (const auto &p : md.params) {
          ParamSig ps;
          ps.name = p.name;
          ps.type = ctx.resolveTypeRef(p.type, i, mIdx).name;
          ps.declared = p.type.erasedText();
          m.varargs = m.varargs || p.type.varargs;
          m.params.push_back(std::move(ps));
        }
        e.members.push_back(std::move(m));
      }
      index.add(std::move(e));
    }
  }
  index.finalize();
  return index;
}

} // namespace argrec::types
