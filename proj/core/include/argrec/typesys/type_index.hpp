// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/ast.hpp"
#include "argrec/typesys/type.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace argrec::types {

using corpus::Access;

enum class TypeKind { Class, Interface, Enum, Primitive, Array };
enum class MemberKind { Field, Method, Constructor };
enum class TypeSource { Project, Stub };

std::string_view typeKindName(TypeKind k);
std::string_view memberKindName(MemberKind k);
std::string_view accessName(Access a);

struct ParamSig {
  std::string name;
  std::string type;     // erased, qualified
  std::string declared; // as written; keeps type-variable names
};

struct MemberSig {
  std::string name; // constructors carry the simple class name
  MemberKind kind = MemberKind::Method;
  bool isStatic = false;
  bool isAbstract = false;
  bool varargs = false;
  Access access = Access::Public;
  std::vector<ParamSig> params;
  std::string type; // return or field type, erased
  std::string declared;
  std::string declaredIn; // qualified owner
};

struct TypeEntry {
  std::string qualifiedName;
  std::string simpleName;
  std::string packageName;
  std::string outer; // qualified enclosing type, empty for top-level
  TypeKind kind = TypeKind::Class;
  bool isAbstract = false;
  bool isStatic = true; // false for inner (non-static nested) classes
  Access access = Access::Public;
  std::vector<std::string> supertypes;
  std::vector<std::string> typeParams;
  std::vector<MemberSig> members;
  TypeSource source = TypeSource::Stub;
  std::string file;
  std::string project;
};

struct IndexWarning {
  std::string file;
  std::string message;
};

// Universe of known reference types. Built once, then read-only.
class TypeIndex {
public:
  TypeIndex() = default;
  TypeIndex(const TypeIndex &o) { *this = o; }
  TypeIndex &operator=(const TypeIndex &o) {
    if (this != &o) {
      entries_ = o.entries_;
      warnings_ = o.warnings_;
      implicitCtors_ = o.implicitCtors_;
      std::lock_guard lock(closureMu_);
      closures_.clear();
    }
    return *this;
  }

  // Throws IndexError when the qualified name is already present.
  void add(TypeEntry entry);
  // Resolves supertypes (unknown names fall back to java.lang.Object with a
  // warning), breaks cycles, and fills lookup caches. Call after the last add.
  void finalize();

  const TypeEntry *find(std::string_view qualified) const;
  bool contains(std::string_view qualified) const { return find(qualified); }
  const std::map<std::string, TypeEntry, std::less<>> &entries() const {
    return entries_;
  }
  const std::vector<IndexWarning> &warnings() const { return warnings_; }
  std::vector<std::string> typesInPackage(std::string_view pkg) const;

  // The type followed by all of its ancestors, breadth-first, deduplicated;
  // java.lang.Object comes last for reference types.
  const std::vector<std::string> &closure(std::string_view qualified) const;
  // Ancestors only (the supertype chain), e.g. [B, java.lang.Object].
  std::vector<std::string> supertypeChain(std::string_view qualified) const;
  // Reachability in the supertype graph (reflexive).
  bool isSubtype(std::string_view sub, std::string_view sup) const;

  // Methods named `name` visible on `type`, overriding signatures collapsed
  // onto the most derived declaration.
  std::vector<const MemberSig *> methods(std::string_view type,
                                         std::string_view name) const;
  std::vector<const MemberSig *> allMethods(std::string_view type) const;
  std::vector<const MemberSig *> fields(std::string_view type) const;
  // Declared constructors, or an implicit public no-arg one for classes.
  std::vector<const MemberSig *> constructors(std::string_view type) const;

  // Java access check restricted to the subset. `fromType` is the qualified
  // type containing the use site, `fromPackage` its package.
  bool accessible(const MemberSig &m, std::string_view fromType,
                  std::string_view fromPackage) const;
  bool typeAccessible(const TypeEntry &t, std::string_view fromType,
                      std::string_view fromPackage) const;
  std::string topLevelOf(std::string_view qualified) const;

private:
  std::map<std::string, TypeEntry, std::less<>> entries_;
  std::vector<IndexWarning> warnings_;
  mutable std::mutex closureMu_;
  mutable std::unordered_map<std::string, std::vector<std::string>> closures_;
  std::unordered_map<std::string, MemberSig> implicitCtors_;
};

// Compatibility without casting: identity, inheritance, widening, boxing and
// unboxing (the last two disabled by `strict`), null to any reference type,
// covariant arrays, and arrays to Object.
bool isCompatible(std::string_view tPrime, std::string_view t,
                  const TypeIndex &index, bool strict = false);

} // namespace argrec::types
