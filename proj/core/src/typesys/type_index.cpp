// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/typesys/type_index.hpp"

#include "argrec/common.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace argrec::types {

std::string_view typeKindName(TypeKind k) {
  switch (k) {
  case TypeKind::Class:
    return "class";
  case TypeKind::Interface:
    return "interface";
  case TypeKind::Enum:
    return "enum";
  case TypeKind::Primitive:
    return "primitive";
  case TypeKind::Array:
    return "array";
  }
  return "class";
}

std::string_view memberKindName(MemberKind k) {
  switch (k) {
  case MemberKind::Field:
    return "field";
  case MemberKind::Method:
    return "method";
  case MemberKind::Constructor:
    return "constructor";
  }
  return "method";
}

std::string_view accessName(Access a) {
  switch (a) {
  case Access::Public:
    return "public";
  case Access::Protected:
    return "protected";
  case Access::Package:
    return "package";
  case Access::Private:
    return "private";
  }
  return "public";
}

void TypeIndex::add(TypeEntry entry) {
  auto it = entries_.find(entry.qualifiedName);
  if (it != entries_.end()) {
    std::string a = it->second.file.empty() ? "<stub>" : it->second.file;
    std::string b = entry.file.empty() ? "<stub>" : entry.file;
    throw IndexError("duplicate type " + entry.qualifiedName + " declared in " +
                     a + " and " + b);
  }
  std::string key = entry.qualifiedName;
  entries_.emplace(std::move(key), std::move(entry));
}

void TypeIndex::finalize() {
  closures_.clear();
  implicitCtors_.clear();
  for (auto &[name, e] : entries_) {
    std::vector<std::string> resolved;
    for (const auto &s : e.supertypes) {
      if (entries_.count(s)) {
        resolved.push_back(s);
      } else {
        warnings_.push_back({e.file, "unresolved supertype " + s + " of " + name +
                                         "; assuming java.lang.Object"});
      }
    }
    if (name != kObject && resolved.empty() && entries_.count(std::string(kObject)))
      resolved.push_back(std::string(kObject));
    std::sort(resolved.begin(), resolved.end());
    resolved.erase(std::unique(resolved.begin(), resolved.end()), resolved.end());
    // Keep declaration order for determinism of closure traversal.
    std::vector<std::string> ordered;
    for (const auto &s : e.supertypes)
      if (std::binary_search(resolved.begin(), resolved.end(), s) &&
          std::find(ordered.begin(), ordered.end(), s) == ordered.end())
        ordered.push_back(s);
    for (const auto &s : resolved)
      if (std::find(ordered.begin(), ordered.end(), s) == ordered.end())
        ordered.push_back(s);
    e.supertypes = std::move(ordered);
  }
  // Break cycles: drop any edge whose target already reaches the source.
  for (auto &[name, e] : entries_) {
    std::vector<std::string> kept;
    for (const auto &s : e.supertypes) {
      std::set<std::string> seen;
      std::deque<std::string> q{s};
      bool cycle = false;
      while (!q.empty()) {
        std::string cur = q.front();
        q.pop_front();
        if (cur == name) {
          cycle = true;
          break;
        }
        if (!seen.insert(cur).second)
          continue;
        if (auto *t = find(cur))
          for (const auto &n : t->supertypes)
            q.push_back(n);
      }
      if (cycle)
        warnings_.push_back({e.file, "cyclic supertype " + s + " of " + name + " ignored"});
      else
        kept.push_back(s);
    }
    e.supertypes = std::move(kept);
    if (name != kObject && e.supertypes.empty() && entries_.count(std::string(kObject)))
      e.supertypes.push_back(std::string(kObject));
  }
  for (auto &[name, e] : entries_) {
    for (auto &m : e.members)
      m.declaredIn = name;
    bool hasCtor = std::any_of(e.members.begin(), e.members.end(), [](const MemberSig &m) {
      return m.kind == MemberKind::Constructor;
    });
    if (!hasCtor && e.kind == TypeKind::Class) {
      MemberSig c;
      c.name = e.simpleName;
      c.kind = MemberKind::Constructor;
      c.access = Access::Public;
      c.type = name;
      c.declaredIn = name;
      implicitCtors_.emplace(name, c);
    }
  }
}

const TypeEntry *TypeIndex::find(std::string_view qualified) const {
  auto it = entries_.find(qualified);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> TypeIndex::typesInPackage(std::string_view pkg) const {
  std::vector<std::string> out;
  for (const auto &[name, e] : entries_)
    if (e.packageName == pkg)
      out.push_back(name);
  return out;
}

const std::vector<std::string> &TypeIndex::closure(std::string_view qualified) const {
  std::string key(qualified);
  std::lock_guard lock(closureMu_);
  auto it = closures_.find(key);
  if (it != closures_.end())
    return it->second;
  std::vector<std::string> out;
  std::deque<std::string> q{key};
  std::set<std::string> seen;
  bool sawObject = false;
  while (!q.empty()) {
    std::string cur = q.front();
    q.pop_front();
    if (!seen.insert(cur).second)
      continue;
    if (cur == kObject) {
      sawObject = true;
      continue;
    }
    out.push_back(cur);
    if (auto *t = find(cur))
      for (const auto &s : t->supertypes)
        q.push_back(s);
    else if (cur == key && isReference(cur) && !isArray(cur) && cur != kNull)
      q.push_back(std::string(kObject));
  }
  if (sawObject)
    out.push_back(std::string(kObject));
  return closures_.emplace(key, std::move(out)).first->second;
}

std::vector<std::string> TypeIndex::supertypeChain(std::string_view qualified) const {
  const auto &c = closure(qualified);
  return {c.begin() + (c.empty() ? 0 : 1), c.end()};
}

bool TypeIndex::isSubtype(std::string_view sub, std::string_view sup) const {
  if (sub == sup)
    return true;
  const auto &c = closure(sub);
  return std::find(c.begin(), c.end(), sup) != c.end();
}

namespace {

bool sameParams(const MemberSig &a, const MemberSig &b) {
  if (a.params.size() != b.params.size())
    return false;
  for (size_t i = 0; i < a.params.size(); ++i)
    if (a.params[i].type != b.params[i].type)
      return false;
  return true;
}

} // namespace

std::vector<const MemberSig *> TypeIndex::methods(std::string_view type,
                                                  std::string_view name) const {
  std::vector<const MemberSig *> out;
  for (const auto &t : closure(type)) {
    const TypeEntry *e = find(t);
    if (!e)
      continue;
    for (const auto &m : e->members) {
      if (m.kind != MemberKind::Method || m.name != name)
        continue;
      bool overridden = std::any_of(out.begin(), out.end(),
                                    [&](const MemberSig *o) { return sameParams(*o, m); });
      if (!overridden)
        out.push_back(&m);
    }
  }
  return out;
}

std::vector<const MemberSig *> TypeIndex::allMethods(std::string_view type) const {
  std::vector<const MemberSig *> out;
  for (const auto &t : closure(type)) {
    const TypeEntry *e = find(t);
    if (!e)
      continue;
    for (const auto &m : e->members) {
      if (m.kind != MemberKind::Method)
        continue;
      bool overridden = std::any_of(out.begin(), out.end(), [&](const MemberSig *o) {
        return o->name == m.name && sameParams(*o, m);
      });
      if (!overridden)
        out.push_back(&m);
    }
  }
  return out;
}

std::vector<const MemberSig *> TypeIndex::fields(std::string_view type) const {
  std::vector<const MemberSig *> out;
  for (const auto &t : closure(type)) {
    const TypeEntry *e = find(t);
    if (!e)
      continue;
    for (const auto &m : e->members) {
      if (m.kind != MemberKind::Field)
        continue;
      bool hidden = std::any_of(out.begin(), out.end(),
                                [&](const MemberSig *o) { return o->name == m.name; });
      if (!hidden)
        out.push_back(&m);
    }
  }
  return out;
}

std::vector<const MemberSig *> TypeIndex::constructors(std::string_view type) const {
  std::vector<const MemberSig *> out;
  const TypeEntry *e = find(type);
  if (!e)
    return out;
  for (const auto &m : e->members)
    if (m.kind == MemberKind::Constructor)
      out.push_back(&m);
  if (out.empty()) {
    auto it = implicitCtors_.find(std::string(type));
    if (it != implicitCtors_.end())
      out.push_back(&it->second);
  }
  return out;
}

std::string TypeIndex::topLevelOf(std::string_view qualified) const {
  std::string cur(qualified);
  while (const TypeEntry *e = find(cur)) {
    if (e->outer.empty())
      break;
    cur = e->outer;
  }
  return cur;
}

bool TypeIndex::accessible(const MemberSig &m, std::string_view fromType,
                           std::string_view fromPackage) const {
  const TypeEntry *owner = find(m.declaredIn);
  std::string ownerPkg = owner ? owner->packageName : std::string();
  switch (m.access) {
  case Access::Public:
    return true;
  case Access::Private:
    return !fromType.empty() && topLevelOf(fromType) == topLevelOf(m.declaredIn);
  case Access::Package:
    return ownerPkg == fromPackage;
  case Access::Protected:
    if (ownerPkg == fromPackage)
      return true;
    for (std::string cur(fromType); !cur.empty();) {
      if (isSubtype(cur, m.declaredIn))
        return true;
      const TypeEntry *e = find(cur);
      cur = e ? e->outer : std::string();
    }
    return false;
  }
  return false;
}

bool TypeIndex::typeAccessible(const TypeEntry &t, std::string_view fromType,
                               std::string_view fromPackage) const {
  switch (t.access) {
  case Access::Public:
    break;
  case Access::Private:
    if (fromType.empty() || topLevelOf(fromType) != topLevelOf(t.qualifiedName))
      return false;
    break;
  case Access::Package:
  case Access::Protected:
    if (t.packageName != fromPackage)
      return false;
    break;
  }
  if (!t.outer.empty())
    if (const TypeEntry *o = find(t.outer))
      return typeAccessible(*o, fromType, fromPackage);
  return true;
}

bool isCompatible(std::string_view tPrime, std::string_view t, const TypeIndex &index,
                  bool strict) {
  if (tPrime.empty() || t.empty() || tPrime == "void" || t == "void")
    return false;
  if (tPrime == t)
    return true;
  if (tPrime == kNull)
    return isReference(t);
  bool pPrim = isPrimitive(tPrime), tPrim = isPrimitive(t);
  if (pPrim && tPrim)
    return !strict && widensTo(tPrime, t);
  if (pPrim) {
    if (strict)
      return false;
    std::string boxed = boxOf(tPrime);
    return index.isSubtype(boxed, t) || (t == kObject);
  }
  if (tPrim) {
    if (strict)
      return false;
    std::string unboxed = unboxOf(tPrime);
    return !unboxed.empty() && (unboxed == t || widensTo(unboxed, t));
  }
  if (isArray(tPrime)) {
    if (t == kObject || t == "java.lang.Cloneable" || t == "java.io.Serializable")
      return true;
    if (!isArray(t))
      return false;
    std::string a = componentOf(tPrime), b = componentOf(t);
    if (isPrimitive(a) || isPrimitive(b))
      return a == b;
    return isCompatible(a, b, index, true);
  }
  if (isArray(t))
    return false;
  return index.isSubtype(tPrime, t);
}

} // namespace argrec::types
