// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/common.hpp"
#include "argrec/corpus/lexer.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace argrec::corpus {

// A type as written in source, e.g. "Map.Entry<K, V>[]".
struct TypeRef {
  std::string name;
  std::vector<TypeRef> args;
  int dims = 0;
  bool varargs = false;

  bool empty() const { return name.empty(); }
  // Erased spelling with array suffixes, without type arguments.
  std::string erasedText() const;
  std::string text() const;
};

enum class ExprKind {
  Name,
  FieldAccess, // target.name
  MethodCall,  // [target.]name(args); target may be This/Super
  New,         // new type(args)
  NewArray,    // new type[dims...] or new type[]{...}
  ArrayAccess,
  Cast,
  Literal,
  This,
  Super,
  ClassLit, // type.class
  Lambda,
  MethodRef,
  Binary,
  Unary,
  Conditional,
  Assign,
  InstanceOf,
  Paren,
  ArrayInit,
  Hole,
  Opaque, // switch expressions and other skipped forms
};

enum class LiteralKind { None, String, Char, Int, Float, Boolean, Null };

struct Expr {
  ExprKind kind = ExprKind::Hole;
  SourceSpan span;
  // Identifier, operator, or literal spelling depending on kind.
  std::string name;
  LiteralKind literal = LiteralKind::None;
  // Cast/New/NewArray/ClassLit/InstanceOf type.
  TypeRef type;
  // Receiver, operand, or array expression.
  std::unique_ptr<Expr> target;
  // Call arguments, array dims, binary operands, initializer elements.
  std::vector<std::unique_ptr<Expr>> args;
  // Position of the callee identifier for calls (or `new` for creations).
  SourcePos namePos;
  // Anonymous class body present after `new T(...)`.
  bool hasBody = false;
  // `new T[]{...}`: args holds no dims, init holds the initializer.
  std::unique_ptr<Expr> init;
};

enum class Access { Public, Protected, Package, Private };

struct Modifiers {
  Access access = Access::Package;
  bool isStatic = false;
  bool isAbstract = false;
  bool isFinal = false;
  bool isDefault = false;
};

struct Param {
  std::string name;
  TypeRef type;
  SourcePos pos;
};

struct FieldDecl {
  std::string name;
  Modifiers mods;
  TypeRef type;
  SourceSpan span;
};

struct MethodDecl {
  std::string name; // constructors carry the class name
  bool isCtor = false;
  Modifiers mods;
  std::vector<std::string> typeParams;
  TypeRef returnType;
  std::vector<Param> params;
  SourceSpan span;
  // Block index of the body in CompilationUnit::blocks, or -1 if abstract.
  int body = -1;
};

enum class TypeKind { Class, Interface, Enum };

struct TypeDecl {
  std::string name;
  std::string qualifiedName;
  TypeKind kind = TypeKind::Class;
  Modifiers mods;
  std::vector<std::string> typeParams;
  std::vector<TypeRef> supertypes; // extends first, then implements
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  std::vector<int> nested;
  int outer = -1;
  bool local = false;
  int body = -1; // class-body block
  SourceSpan span;
};

enum class BlockKind { Outermost, ClassBody, MethodBody, Statement };

enum class VarKind { Local, Param, Field };

struct VarDecl {
  std::string name;
  TypeRef type;
  VarKind kind = VarKind::Local;
  SourcePos pos;
  // Visible at positions >= visibleFrom (end of its declarator for locals).
  SourcePos visibleFrom;
  bool isStatic = false;
  // Initializer, used to infer `var` declarations.
  const Expr *init = nullptr;
};

// Block record emitted by the parser; the tree links are derived by
// buildScopeTree from span containment.
struct BlockDecl {
  BlockKind kind = BlockKind::Statement;
  SourceSpan span;
  std::vector<VarDecl> vars;
  int type = -1;   // enclosing type decl
  int method = -1; // enclosing method within that type, -1 outside methods
};

struct CallSite {
  const Expr *call = nullptr; // MethodCall or New
  int type = -1;
  int method = -1; // -1 for field initializers and initializer blocks
  bool inStaticContext = false;
};

struct Import {
  std::string name;
  bool isStatic = false;
  bool onDemand = false;
};

struct CompilationUnit {
  std::string path;
  std::string packageName;
  std::vector<Import> imports;
  std::vector<TypeDecl> types; // flat; see topLevel and TypeDecl::nested
  std::vector<int> topLevel;
  std::vector<Token> tokens; // includes zero-width Hole tokens
  std::vector<BlockDecl> blocks;
  std::vector<CallSite> calls; // in source order of the callee position
  std::vector<SourceSpan> opaque;
  std::vector<SourcePos> holes;
  std::vector<std::unique_ptr<Expr>> exprs; // owned expression roots

  // Innermost type declaration whose span contains pos, or -1.
  int typeAt(const SourcePos &pos) const;
  // Top-level type declaration containing pos, or -1.
  int topLevelAt(const SourcePos &pos) const;
  // Canonical token text of a span (see joinTokens).
  std::string textOf(const SourceSpan &span) const;
  // Index of the first token at or after `offset`.
  size_t tokenIndexAt(uint32_t offset) const;
};

// Joins token texts with single spaces only where needed: between two
// word-like tokens, after a comma, and after ')' before a word (casts).
std::string joinTokens(const std::vector<std::string_view> &toks);

} // namespace argrec::corpus
