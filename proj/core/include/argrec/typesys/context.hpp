// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/ast.hpp"
#include "argrec/corpus/scope_tree.hpp"
#include "argrec/typesys/type_index.hpp"

#include <optional>
#include <string>
#include <vector>

namespace argrec::types {

using corpus::CompilationUnit;
using corpus::Expr;
using corpus::TypeRef;
using corpus::VarDecl;
using corpus::VarKind;

// A position inside a unit together with its lexical situation.
struct Site {
  SourcePos pos;
  int type = -1;   // TypeDecl index
  int method = -1; // MethodDecl index within the type
  bool isStatic = false;
  int block = 0; // innermost ScopeTree block
};

// A variable visible at a site.
struct VarRef {
  std::string name;
  StaticType type;
  VarKind kind = VarKind::Local;
  int block = 0; // ScopeTree block holding the declaration
  bool isStatic = false;
  std::string declaringType; // fields only
  SourcePos pos;
};

struct CalleeInfo {
  bool resolved = false;
  std::vector<const MemberSig *> overloads;
  StaticType receiverType; // declaring type for unqualified calls
  bool staticReceiver = false;
  bool isConstructor = false;
};

// Per-unit view over the type index: name resolution, variable lookup and
// static typing of expressions. Read-only after construction.
class UnitContext {
public:
  UnitContext(const CompilationUnit &unit, const TypeIndex &index, bool strict = false);

  const CompilationUnit &unit() const { return *unit_; }
  const corpus::ScopeTree &scopes() const { return scopes_; }
  const TypeIndex &index() const { return *index_; }
  bool strict() const { return strict_; }

  std::string qualifiedOf(int typeDecl) const;
  const corpus::MethodDecl *methodOf(const Site &s) const;
  Site siteAt(const SourcePos &pos) const;
  Site siteFor(const corpus::CallSite &cs, const SourcePos &pos) const;

  std::vector<std::string> typeVarsAt(int type, int method) const;
  std::string resolveTypeName(std::string_view name, int type,
                              const std::vector<std::string> &typeVars = {}) const;
  StaticType resolveTypeRef(const TypeRef &t, int type, int method) const;

  std::optional<VarRef> lookupVar(std::string_view name, const Site &s) const;
  // All variables visible at the site, innermost declarations first; names
  // hidden by an inner declaration are reported once with `shadowed` fields
  // appended to `hiddenFields`.
  std::vector<VarRef> visibleVars(const Site &s, std::vector<VarRef> *hiddenFields = nullptr) const;

  StaticType typeOf(const Expr &e, const Site &s) const;
  // Qualified type named by a Name/FieldAccess chain that is not a variable.
  std::optional<std::string> asTypeName(const Expr &e, const Site &s) const;
  CalleeInfo resolveCall(const Expr &call, const Site &s) const;

  // Shortest spelling of a qualified type that resolves back to it here.
  std::string displayName(std::string_view qualified, int type) const;
  // Class body block of a TypeDecl in the scope tree.
  int classBodyBlock(int typeDecl) const;

private:
  StaticType typeOfImpl(const Expr &e, const Site &s, int depth) const;
  std::optional<VarRef> staticImportField(std::string_view name) const;

  const CompilationUnit *unit_;
  const TypeIndex *index_;
  corpus::ScopeTree scopes_;
  bool strict_;
};

// Builds the index from parsed project units plus stub types.
TypeIndex buildTypeIndex(const std::vector<const CompilationUnit *> &units,
                         std::vector<TypeEntry> stubs,
                         const std::vector<std::string> &projects = {});

} // namespace argrec::types
