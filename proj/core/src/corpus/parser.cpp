// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/parser.hpp"

#include <algorithm>
#include <array>

namespace argrec::corpus {

namespace {

// Recoverable failure: the enclosing statement or member becomes opaque.
struct Bail {};

constexpr std::array<std::string_view, 8> kPrimitives = {
    "boolean", "byte", "char", "short", "int", "long", "float", "double"};

bool isPrimitiveName(std::string_view s) {
  return std::find(kPrimitives.begin(), kPrimitives.end(), s) !=
         kPrimitives.end();
}

SourcePos endOf(const Token &t) {
  auto n = static_cast<uint32_t>(t.text.size());
  return {t.pos.offset + n, t.pos.line, t.pos.col + n};
}

std::unique_ptr<Expr> makeExpr(ExprKind kind) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  return e;
}

class Parser {
public:
  Parser(std::vector<Token> toks, std::string_view src, std::string path)
      : toks_(std::move(toks)), srcSize_(static_cast<uint32_t>(src.size())) {
    unit_.path = std::move(path);
    eofPos_ = toks_.empty() ? SourcePos{srcSize_, 1, 1} : endOf(toks_.back());
    eofPos_.offset = srcSize_;
  }

  CompilationUnit parseUnit() {
    BlockDecl outer;
    outer.kind = BlockKind::Outermost;
    outer.span = {SourcePos{0, 1, 1}, eofPos_};
    unit_.blocks.push_back(outer);
    blockStack_.push_back(0);

    skipAnnotations();
    if (at("package")) {
      ++i_;
      unit_.packageName = qualifiedName();
      expect(";");
    }
    while (at("import")) {
      ++i_;
      Import imp;
      if (at("static")) {
        imp.isStatic = true;
        ++i_;
      }
      imp.name = ident();
      while (at(".")) {
        ++i_;
        if (at("*")) {
          ++i_;
          imp.onDemand = true;
          break;
        }
        imp.name += "." + ident();
      }
      expect(";");
      unit_.imports.push_back(imp);
    }
    while (!eof()) {
      if (at(";")) {
        ++i_;
        continue;
      }
      size_t start = i_;
      try {
        Modifiers mods = modifiers();
        if (!atTypeDeclKeyword())
          throw Bail{};
        typeDecl(mods, -1, false);
      } catch (const Bail &) {
        i_ = start;
        skipOpaqueMember();
      }
    }
    finish();
    return std::move(unit_);
  }

  std::unique_ptr<Expr> parseStandaloneExpr() {
    auto e = expression();
    if (!eof())
      throw Bail{};
    return e;
  }

private:
  // ---- token helpers -------------------------------------------------------

  bool eof() const { return i_ >= toks_.size(); }
  const Token &peek(size_t k = 0) const {
    static const Token kEof{"", TokenKind::Operator, {}};
    return i_ + k < toks_.size() ? toks_[i_ + k] : kEof;
  }
  bool at(std::string_view s, size_t k = 0) const {
    return i_ + k < toks_.size() && toks_[i_ + k].is(s);
  }
  bool atIdent(size_t k = 0) const {
    return i_ + k < toks_.size() && toks_[i_ + k].isIdent();
  }
  void expect(std::string_view s) {
    if (!at(s))
      throw Bail{};
    ++i_;
  }
  bool accept(std::string_view s) {
    if (!at(s))
      return false;
    ++i_;
    return true;
  }
  std::string ident() {
    if (!atIdent())
      throw Bail{};
    return toks_[i_++].text;
  }
  std::string qualifiedName() {
    std::string n = ident();
    while (at(".") && atIdent(1)) {
      ++i_;
      n += "." + ident();
    }
    return n;
  }
  SourcePos posHere() const { return eof() ? eofPos_ : toks_[i_].pos; }
  SourcePos prevEnd() const { return i_ == 0 ? SourcePos{} : endOf(toks_[i_ - 1]); }

  // Index just past the bracket matching the opener at i.
  size_t matching(size_t i) const {
    int depth = 0;
    for (size_t j = i; j < toks_.size(); ++j) {
      const Token &t = toks_[j];
      if (t.kind != TokenKind::Operator)
        continue;
      if (t.text == "(" || t.text == "[" || t.text == "{")
        ++depth;
      else if (t.text == ")" || t.text == "]" || t.text == "}") {
        if (--depth == 0)
          return j + 1;
      }
    }
    return toks_.size();
  }

  void skipBalanced() {
    if (!(at("(") || at("[") || at("{")))
      throw Bail{};
    i_ = matching(i_);
  }

  // ---- declarations ----------------------------------------------------------

  void skipAnnotations() {
    while (at("@") && !at("interface", 1)) {
      ++i_;
      qualifiedName();
      if (at("("))
        skipBalanced();
    }
  }

  Modifiers modifiers() {
    Modifiers m;
    while (true) {
      skipAnnotations();
      const Token &t = peek();
      if (t.is("public"))
        m.access = Access::Public;
      else if (t.is("protected"))
        m.access = Access::Protected;
      else if (t.is("private"))
        m.access = Access::Private;
      else if (t.is("static"))
        m.isStatic = true;
      else if (t.is("abstract"))
        m.isAbstract = true;
      else if (t.is("final"))
        m.isFinal = true;
      else if (t.is("default") && !at(":", 1) && !at("->", 1))
        m.isDefault = true;
      else if (t.is("synchronized") && !at("(", 1)) {
      } else if (t.is("native") || t.is("transient") || t.is("volatile") ||
                 t.is("strictfp")) {
      } else if (t.isIdent() && (t.text == "sealed") && !at("(", 1) &&
                 !at("=", 1) && !at(";", 1) && !at(".", 1)) {
      } else if (t.isIdent() && t.text == "non" && at("-", 1)) {
        i_ += 2; // non-sealed
      } else {
        break;
      }
      ++i_;
    }
    return m;
  }

  bool atTypeDeclKeyword() const {
    return at("class") || at("interface") || at("enum") ||
           (at("@") && at("interface", 1)) ||
           (atIdent() && peek().text == "record" && atIdent(1));
  }

  std::vector<std::string> typeParamNames() {
    std::vector<std::string> names;
    if (!at("<"))
      return names;
    size_t close = skipTypeArgs(i_);
    if (close == 0)
      throw Bail{};
    int depth = 0;
    for (size_t j = i_; j < close; ++j) {
      const Token &t = toks_[j];
      if (t.is("<"))
        ++depth;
      else if (t.is(">"))
        --depth;
      else if (depth == 1 && t.isIdent() &&
               (toks_[j - 1].is("<") || toks_[j - 1].is(",")))
        names.push_back(t.text);
    }
    i_ = close;
    return names;
  }

  void typeDecl(Modifiers mods, int outer, bool local) {
    size_t declStart = i_;
    if ((at("@") && at("interface", 1)) ||
        (atIdent() && peek().text == "record")) {
      SourcePos b = posHere();
      while (!eof() && !at("{"))
        ++i_;
      skipBalanced();
      unit_.opaque.push_back({b, prevEnd()});
      return;
    }
    TypeDecl td;
    td.kind = at("class")       ? TypeKind::Class
              : at("interface") ? TypeKind::Interface
                                : TypeKind::Enum;
    td.span.begin = toks_[declStart].pos;
    ++i_;
    td.name = ident();
    td.mods = mods;
    td.outer = outer;
    td.local = local;
    td.typeParams = typeParamNames();
    if (accept("extends")) {
      td.supertypes.push_back(type());
      while (accept(","))
        td.supertypes.push_back(type());
    }
    if (accept("implements")) {
      td.supertypes.push_back(type());
      while (accept(","))
        td.supertypes.push_back(type());
    }
    if (atIdent() && peek().text == "permits") {
      ++i_;
      type();
      while (accept(","))
        type();
    }
    if (outer >= 0)
      td.qualifiedName = unit_.types[outer].qualifiedName + "." + td.name;
    else if (!unit_.packageName.empty())
      td.qualifiedName = unit_.packageName + "." + td.name;
    else
      td.qualifiedName = td.name;
    if (td.kind == TypeKind::Interface && outer >= 0 && !mods.isStatic)
      td.mods.isStatic = true;

    if (!at("{"))
      throw Bail{};
    int idx = static_cast<int>(unit_.types.size());
    unit_.types.push_back(std::move(td));
    if (outer >= 0)
      unit_.types[outer].nested.push_back(idx);
    else if (!local)
      unit_.topLevel.push_back(idx);

    int bodyBlock = openBlock(BlockKind::ClassBody, idx, -1);
    unit_.types[idx].body = bodyBlock;
    ++i_; // {
    if (unit_.types[idx].kind == TypeKind::Enum)
      enumConstants(idx);
    while (!eof() && !at("}"))
      member(idx);
    expect("}");
    closeBlock(bodyBlock);
    unit_.types[idx].span.end = prevEnd();
  }

  void enumConstants(int idx) {
    while (!eof() && !at(";") && !at("}")) {
      skipAnnotations();
      SourcePos b = posHere();
      FieldDecl f;
      f.name = ident();
      f.mods.access = Access::Public;
      f.mods.isStatic = true;
      f.mods.isFinal = true;
      f.type.name = unit_.types[idx].name;
      if (at("("))
        skipBalanced();
      if (at("{"))
        skipBalanced();
      f.span = {b, prevEnd()};
      addField(idx, f);
      if (!accept(","))
        break;
    }
    accept(";");
  }

  void addField(int typeIdx, const FieldDecl &f) {
    unit_.types[typeIdx].fields.push_back(f);
    VarDecl v;
    v.name = f.name;
    v.type = f.type;
    v.kind = VarKind::Field;
    v.pos = f.span.begin;
    v.visibleFrom = unit_.types[typeIdx].span.begin;
    v.isStatic = f.mods.isStatic;
    unit_.blocks[unit_.types[typeIdx].body].vars.push_back(v);
  }

  void member(int typeIdx) {
    if (accept(";"))
      return;
    size_t start = i_;
    Checkpoint cp = checkpoint();
    try {
      memberInner(typeIdx);
    } catch (const Bail &) {
      rollback(cp);
      i_ = start;
      skipOpaqueMember();
    }
  }

  void memberInner(int typeIdx) {
    const TypeDecl &owner = unit_.types[typeIdx];
    bool isInterface = owner.kind == TypeKind::Interface;
    if (at("{") || (at("static") && at("{", 1))) {
      bool isStatic = accept("static");
      initializerBlock(typeIdx, isStatic);
      return;
    }
    SourcePos memberBegin = posHere();
    Modifiers mods = modifiers();
    if (isInterface) {
      if (mods.access == Access::Package)
        mods.access = Access::Public;
    }
    if (atTypeDeclKeyword()) {
      typeDecl(mods, typeIdx, false);
      return;
    }
    std::vector<std::string> tparams = typeParamNames();
    // Constructor: Name '('
    if (atIdent() && peek().text == owner.name && at("(", 1)) {
      MethodDecl m;
      m.isCtor = true;
      m.name = ident();
      m.mods = mods;
      m.typeParams = tparams;
      m.returnType.name = owner.name;
      methodRest(typeIdx, m, memberBegin);
      return;
    }
    TypeRef t = type();
    std::string name = ident();
    if (at("(")) {
      MethodDecl m;
      m.name = name;
      m.mods = mods;
      if (isInterface && !mods.isStatic && !mods.isDefault &&
          mods.access != Access::Private)
        m.mods.isAbstract = true;
      m.typeParams = tparams;
      m.returnType = t;
      methodRest(typeIdx, m, memberBegin);
      return;
    }
    if (isInterface) {
      mods.isStatic = true;
      mods.isFinal = true;
    }
    // Field declarators.
    while (true) {
      FieldDecl f;
      f.name = name;
      f.mods = mods;
      f.type = t;
      while (at("[") && at("]", 1)) {
        i_ += 2;
        ++f.type.dims;
      }
      if (accept("=")) {
        StaticScope ss(*this, mods.isStatic);
        MethodScope ms(*this, typeIdx, -1);
        auto init = at("{") ? arrayInit() : expression();
        unit_.exprs.push_back(std::move(init));
      }
      f.span = {memberBegin, prevEnd()};
      addField(typeIdx, f);
      if (!accept(","))
        break;
      name = ident();
    }
    expect(";");
  }

  void methodRest(int typeIdx, MethodDecl &m, const SourcePos &memberBegin) {
    SourcePos paramsBegin = posHere();
    expect("(");
    std::vector<VarDecl> paramVars;
    while (!at(")")) {
      modifiers();
      Param p;
      p.type = type();
      if (accept("...")) {
        p.type.varargs = true;
        ++p.type.dims;
      }
      if (at("this")) { // receiver parameter
        ++i_;
        accept(",");
        continue;
      }
      p.pos = posHere();
      p.name = ident();
      while (at("[") && at("]", 1)) {
        i_ += 2;
        ++p.type.dims;
      }
      m.params.push_back(p);
      VarDecl v;
      v.name = p.name;
      v.type = p.type;
      v.kind = VarKind::Param;
      v.pos = p.pos;
      v.visibleFrom = p.pos;
      paramVars.push_back(v);
      if (!accept(","))
        break;
    }
    expect(")");
    while (at("[") && at("]", 1)) {
      i_ += 2;
      ++m.returnType.dims;
    }
    if (accept("throws")) {
      type();
      while (accept(","))
        type();
    }
    int methodIdx = static_cast<int>(unit_.types[typeIdx].methods.size());
    if (accept("default")) { // annotation element default
      skipToSemicolon();
    }
    if (accept(";")) {
      m.span = {memberBegin, prevEnd()};
      unit_.types[typeIdx].methods.push_back(std::move(m));
      return;
    }
    if (!at("{"))
      throw Bail{};
    unit_.types[typeIdx].methods.push_back(m);
    int body = openBlock(BlockKind::MethodBody, typeIdx, methodIdx);
    unit_.blocks[body].span.begin = paramsBegin;
    for (auto &v : paramVars)
      unit_.blocks[body].vars.push_back(v);
    {
      StaticScope ss(*this, m.mods.isStatic);
      MethodScope ms(*this, typeIdx, methodIdx);
      ++i_; // {
      statementsUntilClose();
    }
    expect("}");
    closeBlock(body);
    MethodDecl &stored = unit_.types[typeIdx].methods[methodIdx];
    stored.body = body;
    stored.span = {memberBegin, prevEnd()};
  }

  void initializerBlock(int typeIdx, bool isStatic) {
    int b = openBlock(BlockKind::MethodBody, typeIdx, -1);
    StaticScope ss(*this, isStatic);
    MethodScope ms(*this, typeIdx, -1);
    ++i_;
    statementsUntilClose();
    expect("}");
    closeBlock(b);
  }

  void skipToSemicolon() {
    while (!eof() && !at(";")) {
      if (at("(") || at("[") || at("{"))
        i_ = matching(i_);
      else
        ++i_;
    }
  }

  // Skips one member or statement we cannot parse: up to a top-level ';' or
  // through the first balanced {...} group, never past the enclosing '}'.
  void skipOpaqueMember() {
    SourcePos b = posHere();
    size_t start = i_;
    while (!eof()) {
      if (at("}"))
        break;
      if (at(";")) {
        ++i_;
        break;
      }
      if (at("{")) {
        i_ = matching(i_);
        if (at(";") || at(")") || at(","))
          continue;
        break;
      }
      if (at("(") || at("["))
        i_ = matching(i_);
      else
        ++i_;
    }
    if (i_ == start && !eof() && !at("}"))
      ++i_;
    if (i_ > start)
      unit_.opaque.push_back({b, prevEnd()});
  }

  // ---- scopes and checkpoints -----------------------------------------------

  struct StaticScope {
    StaticScope(Parser &p, bool s) : p(p), saved(p.static_) { p.static_ = s; }
    ~StaticScope() { p.static_ = saved; }
    Parser &p;
    bool saved;
  };
  struct MethodScope {
    MethodScope(Parser &p, int t, int m)
        : p(p), savedT(p.curType_), savedM(p.curMethod_) {
      p.curType_ = t;
      p.curMethod_ = m;
    }
    ~MethodScope() {
      p.curType_ = savedT;
      p.curMethod_ = savedM;
    }
    Parser &p;
    int savedT, savedM;
  };

  struct Checkpoint {
    size_t calls, blocks, holes, types, exprs, opaque, stack;
    std::vector<size_t> varCounts; // per block on the stack
    std::vector<size_t> nestedCounts;
    std::vector<size_t> methodCounts;
    std::vector<size_t> fieldCounts;
  };

  Checkpoint checkpoint() const {
    Checkpoint c{unit_.calls.size(), unit_.blocks.size(), unit_.holes.size(),
                 unit_.types.size(), unit_.exprs.size(), unit_.opaque.size(),
                 blockStack_.size(), {}, {}, {}, {}};
    for (int b : blockStack_)
      c.varCounts.push_back(unit_.blocks[b].vars.size());
    for (const auto &t : unit_.types) {
      c.nestedCounts.push_back(t.nested.size());
      c.methodCounts.push_back(t.methods.size());
      c.fieldCounts.push_back(t.fields.size());
    }
    return c;
  }

  void rollback(const Checkpoint &c) {
    unit_.calls.resize(c.calls);
    unit_.blocks.resize(c.blocks);
    unit_.holes.resize(c.holes);
    unit_.types.resize(c.types);
    unit_.exprs.resize(c.exprs);
    unit_.opaque.resize(c.opaque);
    blockStack_.resize(c.stack);
    for (size_t k = 0; k < blockStack_.size(); ++k)
      unit_.blocks[blockStack_[k]].vars.resize(c.varCounts[k]);
    for (size_t k = 0; k < unit_.types.size(); ++k) {
      unit_.types[k].nested.resize(c.nestedCounts[k]);
      unit_.types[k].methods.resize(c.methodCounts[k]);
      unit_.types[k].fields.resize(c.fieldCounts[k]);
    }
    unit_.topLevel.erase(std::remove_if(unit_.topLevel.begin(), unit_.topLevel.end(),
                                        [&](int t) { return t >= static_cast<int>(c.types); }),
                         unit_.topLevel.end());
  }

  int openBlock(BlockKind kind, int type, int method) {
    BlockDecl b;
    b.kind = kind;
    b.span.begin = posHere();
    b.type = type;
    b.method = method;
    unit_.blocks.push_back(b);
    int idx = static_cast<int>(unit_.blocks.size()) - 1;
    blockStack_.push_back(idx);
    return idx;
  }

  void closeBlock(int idx) {
    unit_.blocks[idx].span.end = prevEnd();
    while (!blockStack_.empty() && blockStack_.back() != idx)
      blockStack_.pop_back();
    if (!blockStack_.empty())
      blockStack_.pop_back();
  }

  void declareLocal(VarDecl v) {
    unit_.blocks[blockStack_.back()].vars.push_back(std::move(v));
  }

  // ---- statements ------------------------------------------------------------

  void statementsUntilClose() {
    while (!eof() && !at("}"))
      statement();
  }

  void statement() {
    size_t start = i_;
    Checkpoint cp = checkpoint();
    try {
      statementInner();
    } catch (const Bail &) {
      rollback(cp);
      i_ = start;
      skipOpaqueMember();
    }
  }

  void block(BlockKind kind = BlockKind::Statement) {
    int b = openBlock(kind, curType_, curMethod_);
    expect("{");
    statementsUntilClose();
    expect("}");
    closeBlock(b);
  }

  // Braces that belong to an already open for/try/catch block.
  void bracedBodyIn() {
    expect("{");
    statementsUntilClose();
    expect("}");
  }

  void exprRoot(std::unique_ptr<Expr> e) { unit_.exprs.push_back(std::move(e)); }

  void parenExpr() {
    expect("(");
    exprRoot(expression());
    expect(")");
  }

  void statementInner() {
    if (at("{")) {
      block();
      return;
    }
    if (accept(";"))
      return;
    if (accept("if")) {
      parenExpr();
      statement();
      if (accept("else"))
        statement();
      return;
    }
    if (at("for")) {
      forStatement();
      return;
    }
    if (accept("while")) {
      parenExpr();
      statement();
      return;
    }
    if (accept("do")) {
      statement();
      expect("while");
      parenExpr();
      expect(";");
      return;
    }
    if (at("try")) {
      tryStatement();
      return;
    }
    if (at("switch")) {
      switchStatement();
      return;
    }
    if (accept("return")) {
      if (!at(";"))
        exprRoot(expression());
      expect(";");
      return;
    }
    if (accept("throw")) {
      exprRoot(expression());
      expect(";");
      return;
    }
    if (at("break") || at("continue")) {
      ++i_;
      if (atIdent())
        ++i_;
      expect(";");
      return;
    }
    if (atIdent() && peek().text == "yield" && !at("=", 1) && !at("(", 1) &&
        !at(".", 1)) {
      ++i_;
      exprRoot(expression());
      expect(";");
      return;
    }
    if (accept("assert")) {
      exprRoot(expression());
      if (accept(":"))
        exprRoot(expression());
      expect(";");
      return;
    }
    if (at("synchronized") && at("(", 1)) {
      ++i_;
      parenExpr();
      block();
      return;
    }
    if (atIdent() && at(":", 1)) { // label
      i_ += 2;
      statement();
      return;
    }
    {
      size_t save = i_;
      Modifiers m = modifiers();
      if (atTypeDeclKeyword()) {
        typeDecl(m, curType_, true);
        return;
      }
      i_ = save;
    }
    if (looksLikeLocalVarDecl()) {
      localVarDecl();
      endStatement();
      return;
    }
    exprRoot(expression());
    endStatement();
  }

  // Partial code often lacks the final ';' before a closing brace.
  void endStatement() {
    if (accept(";") || at("}"))
      return;
    throw Bail{};
  }

  bool looksLikeLocalVarDecl() {
    size_t save = i_;
    bool ok = false;
    try {
      modifiers();
      if (atIdent() || isPrimitiveName(peek().text)) {
        type();
        ok = atIdent() && (at("=", 1) || at(";", 1) || at(",", 1) ||
                           at("[", 1) || at(":", 1));
      }
    } catch (const Bail &) {
      ok = false;
    }
    i_ = save;
    return ok;
  }

  // Parses `[mods] Type a [= x], b ...` without the trailing ';'.
  void localVarDecl() {
    modifiers();
    TypeRef t = type();
    while (true) {
      VarDecl v;
      v.kind = VarKind::Local;
      v.type = t;
      v.pos = posHere();
      v.name = ident();
      while (at("[") && at("]", 1)) {
        i_ += 2;
        ++v.type.dims;
      }
      if (accept("=")) {
        auto init = at("{") ? arrayInit() : expression();
        v.init = init.get();
        exprRoot(std::move(init));
      }
      v.visibleFrom = prevEnd();
      declareLocal(std::move(v));
      if (!accept(","))
        break;
    }
  }

  void forStatement() {
    int b = openBlock(BlockKind::Statement, curType_, curMethod_);
    expect("for");
    expect("(");
    // Enhanced for: [mods] Type name ':' expr
    bool enhanced = false;
    {
      size_t save = i_;
      try {
        modifiers();
        TypeRef t = type();
        if (atIdent() && at(":", 1)) {
          VarDecl v;
          v.kind = VarKind::Local;
          v.type = t;
          v.pos = posHere();
          v.name = ident();
          expect(":");
          auto e = expression();
          v.visibleFrom = posHere();
          exprRoot(std::move(e));
          declareLocal(std::move(v));
          enhanced = true;
        } else {
          i_ = save;
        }
      } catch (const Bail &) {
        i_ = save;
      }
    }
    if (!enhanced) {
      if (!at(";")) {
        if (looksLikeLocalVarDecl()) {
          localVarDecl();
        } else {
          exprRoot(expression());
          while (accept(","))
            exprRoot(expression());
        }
      }
      expect(";");
      if (!at(";"))
        exprRoot(expression());
      expect(";");
      if (!at(")")) {
        exprRoot(expression());
        while (accept(","))
          exprRoot(expression());
      }
    }
    expect(")");
    if (at("{"))
      bracedBodyIn();
    else
      statement();
    closeBlock(b);
  }

  void tryStatement() {
    int b = openBlock(BlockKind::Statement, curType_, curMethod_);
    expect("try");
    if (accept("(")) {
      while (!at(")")) {
        if (looksLikeLocalVarDecl())
          localVarDecl();
        else
          exprRoot(expression());
        if (!accept(";"))
          break;
      }
      expect(")");
    }
    bracedBodyIn();
    closeBlock(b);
    while (at("catch")) {
      int c = openBlock(BlockKind::Statement, curType_, curMethod_);
      ++i_;
      expect("(");
      modifiers();
      TypeRef t = type();
      while (accept("|"))
        type();
      VarDecl v;
      v.kind = VarKind::Local;
      v.type = t;
      v.pos = posHere();
      v.name = ident();
      v.visibleFrom = prevEnd();
      declareLocal(std::move(v));
      expect(")");
      bracedBodyIn();
      closeBlock(c);
    }
    if (accept("finally"))
      block();
  }

  void switchStatement() {
    size_t start = i_;
    expect("switch");
    parenExpr();
    if (!at("{"))
      throw Bail{};
    size_t close = matching(i_);
    // Arrow-form switches stay opaque.
    int depth = 0;
    for (size_t j = i_; j < close; ++j) {
      const Token &t = toks_[j];
      if (t.is("{") || t.is("(") || t.is("["))
        ++depth;
      else if (t.is("}") || t.is(")") || t.is("]"))
        --depth;
      else if (depth == 1 && t.is("->") && j > 0 &&
               !toks_[j - 1].is(")") && !toks_[j - 1].isIdent()) {
        // `case X ->` has a literal/ident before the arrow; lambdas inside
        // cases are nested deeper than depth 1.
      }
      if (depth == 1 && t.is("->")) {
        unit_.opaque.push_back({toks_[start].pos, endOf(toks_[close - 1])});
        i_ = close;
        return;
      }
    }
    int b = openBlock(BlockKind::Statement, curType_, curMethod_);
    expect("{");
    while (!eof() && !at("}")) {
      if (accept("case")) {
        exprRoot(expression());
        while (accept(","))
          exprRoot(expression());
        expect(":");
      } else if (at("default") && at(":", 1)) {
        i_ += 2;
      } else {
        statement();
      }
    }
    expect("}");
    closeBlock(b);
  }

  // ---- types -------------------------------------------------------------------

  // Returns index past a balanced <...> starting at i, or 0 if not type args.
  size_t skipTypeArgs(size_t i) const {
    if (i >= toks_.size() || !toks_[i].is("<"))
      return 0;
    int depth = 0;
    for (size_t j = i; j < toks_.size(); ++j) {
      const Token &t = toks_[j];
      if (t.is("<"))
        ++depth;
      else if (t.is(">")) {
        if (--depth == 0)
          return j + 1;
      } else if (t.isIdent() || t.is(",") || t.is(".") || t.is("?") ||
                 t.is("extends") || t.is("super") || t.is("[") || t.is("]") ||
                 t.is("&") || t.is("@") || isPrimitiveName(t.text)) {
        continue;
      } else {
        return 0;
      }
    }
    return 0;
  }

  std::vector<TypeRef> typeArgs() {
    std::vector<TypeRef> args;
    expect("<");
    if (accept(">"))
      return args; // diamond
    while (true) {
      skipAnnotations();
      if (accept("?")) {
        TypeRef w;
        w.name = "?";
        if (accept("extends") || accept("super"))
          w = type();
        args.push_back(w);
      } else {
        args.push_back(type());
      }
      if (!accept(","))
        break;
    }
    expect(">");
    return args;
  }

  TypeRef type() {
    skipAnnotations();
    TypeRef t;
    if (isPrimitiveName(peek().text) || at("void")) {
      t.name = toks_[i_++].text;
    } else {
      t.name = ident();
      if (at("<")) {
        if (!skipTypeArgs(i_))
          throw Bail{};
        t.args = typeArgs();
      }
      while (at(".") && atIdent(1)) {
        ++i_;
        t.name += "." + ident();
        if (at("<")) {
          if (!skipTypeArgs(i_))
            throw Bail{};
          t.args = typeArgs();
        }
      }
    }
    while (at("[") && at("]", 1)) {
      i_ += 2;
      ++t.dims;
    }
    return t;
  }

  // ---- expressions -----------------------------------------------------------

  static void setSpan(Expr &e, const SourcePos &b, const SourcePos &end) {
    e.span = {b, end};
  }

  bool atLambdaStart() const {
    if (atIdent() && at("->", 1))
      return true;
    if (!at("("))
      return false;
    size_t close = matching(i_);
    return close < toks_.size() && toks_[close].is("->");
  }

  std::unique_ptr<Expr> lambda() {
    SourcePos b = posHere();
    if (at("("))
      i_ = matching(i_);
    else
      ++i_;
    expect("->");
    if (at("{")) {
      skipBalanced();
    } else {
      // Expression body: up to a delimiter at depth 0.
      while (!eof() && !at(",") && !at(")") && !at(";") && !at("}") &&
             !at("]") && !at(":")) {
        if (at("(") || at("[") || at("{"))
          i_ = matching(i_);
        else
          ++i_;
      }
    }
    auto e = makeExpr(ExprKind::Lambda);
    setSpan(*e, b, prevEnd());
    unit_.opaque.push_back(e->span);
    return e;
  }

  std::unique_ptr<Expr> expression() {
    if (atLambdaStart())
      return lambda();
    return assignment();
  }

  std::optional<std::string> assignOp() {
    static constexpr std::array<std::string_view, 10> ops = {
        "=", "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=", "<<="};
    for (auto op : ops)
      if (at(op)) {
        ++i_;
        return std::string(op);
      }
    // >>= and >>>= arrive as '>' '>=' / '>' '>' '>='
    if (at(">") && at(">=", 1) && adjacent(0, 1)) {
      i_ += 2;
      return ">>=";
    }
    if (at(">") && at(">", 1) && at(">=", 2) && adjacent(0, 1) && adjacent(1, 2)) {
      i_ += 3;
      return ">>>=";
    }
    return std::nullopt;
  }

  bool adjacent(size_t a, size_t b) const {
    return i_ + b < toks_.size() &&
           toks_[i_ + a].pos.offset + toks_[i_ + a].text.size() ==
               toks_[i_ + b].pos.offset;
  }

  std::unique_ptr<Expr> assignment() {
    SourcePos b = posHere();
    auto lhs = conditional();
    if (auto op = assignOp()) {
      auto e = makeExpr(ExprKind::Assign);
      e->name = *op;
      e->target = std::move(lhs);
      e->args.push_back(expression());
      setSpan(*e, b, prevEnd());
      return e;
    }
    return lhs;
  }

  std::unique_ptr<Expr> conditional() {
    SourcePos b = posHere();
    auto c = binary(1);
    if (!accept("?"))
      return c;
    auto e = makeExpr(ExprKind::Conditional);
    e->target = std::move(c);
    e->args.push_back(expression());
    expect(":");
    e->args.push_back(atLambdaStart() ? lambda() : conditional());
    setSpan(*e, b, prevEnd());
    return e;
  }

  // Returns (operator, precedence, token count) of a binary op at i_.
  std::optional<std::tuple<std::string, int, int>> binaryOp() const {
    if (eof())
      return std::nullopt;
    const Token &t = peek();
    if (t.kind != TokenKind::Operator && !t.is("instanceof"))
      return std::nullopt;
    if (t.is(">")) {
      if (at(">", 1) && adjacent(0, 1)) {
        if (at(">", 2) && adjacent(1, 2))
          return std::make_tuple(std::string(">>>"), 8, 3);
        if (at(">=", 1))
          return std::nullopt;
        return std::make_tuple(std::string(">>"), 8, 2);
      }
      if (at(">=", 1) && adjacent(0, 1))
        return std::nullopt;
      return std::make_tuple(std::string(">"), 7, 1);
    }
    static const std::array<std::pair<std::string_view, int>, 17> ops = {{
        {"||", 1}, {"&&", 2}, {"|", 3}, {"^", 4}, {"&", 5}, {"==", 6},
        {"!=", 6}, {"<", 7}, {"<=", 7}, {">=", 7}, {"instanceof", 7},
        {"<<", 8}, {"+", 9}, {"-", 9}, {"*", 10}, {"/", 10}, {"%", 10}}};
    for (auto [op, prec] : ops)
      if (t.text == op)
        return std::make_tuple(std::string(op), prec, 1);
    return std::nullopt;
  }

  std::unique_ptr<Expr> binary(int minPrec) {
    SourcePos b = posHere();
    auto lhs = unary();
    while (true) {
      auto op = binaryOp();
      if (!op || std::get<1>(*op) < minPrec)
        break;
      auto [name, prec, ntoks] = *op;
      i_ += ntoks;
      if (name == "instanceof") {
        auto e = makeExpr(ExprKind::InstanceOf);
        accept("final");
        e->type = type();
        if (atIdent()) // pattern binding
          ++i_;
        e->target = std::move(lhs);
        setSpan(*e, b, prevEnd());
        lhs = std::move(e);
        continue;
      }
      auto rhs = binary(prec + 1);
      auto e = makeExpr(ExprKind::Binary);
      e->name = name;
      e->args.push_back(std::move(lhs));
      e->args.push_back(std::move(rhs));
      setSpan(*e, b, prevEnd());
      lhs = std::move(e);
    }
    return lhs;
  }

  bool startsOperand(const Token &t) const {
    if (t.isIdent() || t.isLiteral())
      return true;
    return t.is("(") || t.is("!") || t.is("~") || t.is("this") ||
           t.is("super") || t.is("new") || t.is("true") || t.is("false") ||
           t.is("null") || isPrimitiveName(t.text);
  }

  std::unique_ptr<Expr> unary() {
    SourcePos b = posHere();
    if (at("+") || at("-") || at("!") || at("~") || at("++") || at("--")) {
      auto e = makeExpr(ExprKind::Unary);
      e->name = toks_[i_++].text;
      e->target = unary();
      setSpan(*e, b, prevEnd());
      return e;
    }
    if (at("(")) {
      if (auto cast = tryCast())
        return cast;
    }
    return postfix();
  }

  std::unique_ptr<Expr> tryCast() {
    size_t save = i_;
    SourcePos b = posHere();
    try {
      ++i_;
      TypeRef t = type();
      while (accept("&"))
        type();
      if (!at(")")) {
        i_ = save;
        return nullptr;
      }
      ++i_;
      bool primitive = isPrimitiveName(t.name) && t.dims == 0;
      bool ok = primitive ? (startsOperand(peek()) || at("+") || at("-"))
                          : (startsOperand(peek()) || atLambdaStart());
      if (!ok || eof()) {
        i_ = save;
        return nullptr;
      }
      auto e = makeExpr(ExprKind::Cast);
      e->type = t;
      e->target = atLambdaStart() ? lambda() : unary();
      setSpan(*e, b, prevEnd());
      return e;
    } catch (const Bail &) {
      i_ = save;
      return nullptr;
    }
  }

  void registerCall(const Expr *e) {
    unit_.calls.push_back({e, curType_, curMethod_, static_});
  }

  void hole(std::vector<std::unique_ptr<Expr>> &into) {
    auto h = makeExpr(ExprKind::Hole);
    SourcePos p = posHere();
    setSpan(*h, p, p);
    unit_.holes.push_back(p);
    into.push_back(std::move(h));
  }

  void arguments(Expr &call) {
    expect("(");
    if (accept(")"))
      return;
    while (true) {
      if (at(",") || at(")"))
        hole(call.args);
      else
        call.args.push_back(expression());
      if (accept(","))
        continue;
      expect(")");
      break;
    }
  }

  std::unique_ptr<Expr> postfix() {
    SourcePos b = posHere();
    auto e = primary();
    while (true) {
      if (at(".")) {
        ++i_;
        if (at("<")) {
          size_t close = skipTypeArgs(i_);
          if (!close)
            throw Bail{};
          i_ = close;
        }
        if (accept("class")) {
          auto c = makeExpr(ExprKind::ClassLit);
          c->type.name = dottedName(*e);
          if (c->type.name.empty())
            throw Bail{};
          setSpan(*c, b, prevEnd());
          e = std::move(c);
          continue;
        }
        if (accept("this")) {
          auto t = makeExpr(ExprKind::This);
          t->name = dottedName(*e);
          setSpan(*t, b, prevEnd());
          e = std::move(t);
          continue;
        }
        if (at("new")) {
          auto n = primary(); // inner class creation; qualifier dropped
          e = std::move(n);
          continue;
        }
        SourcePos np = posHere();
        std::string name = ident();
        if (at("(")) {
          auto c = makeExpr(ExprKind::MethodCall);
          c->name = name;
          c->namePos = np;
          c->target = std::move(e);
          arguments(*c);
          setSpan(*c, b, prevEnd());
          registerCall(c.get());
          e = std::move(c);
        } else {
          auto f = makeExpr(ExprKind::FieldAccess);
          f->name = name;
          f->namePos = np;
          f->target = std::move(e);
          setSpan(*f, b, prevEnd());
          e = std::move(f);
        }
        continue;
      }
      if (at("[")) {
        if (at("]", 1)) {
          // Type[].class, or an array access with an empty index slot.
          size_t j = i_;
          int dims = 0;
          while (j + 1 < toks_.size() && toks_[j].is("[") && toks_[j + 1].is("]")) {
            j += 2;
            ++dims;
          }
          if (j + 1 < toks_.size() && toks_[j].is(".") && toks_[j + 1].is("class")) {
            auto c = makeExpr(ExprKind::ClassLit);
            c->type.name = dottedName(*e);
            c->type.dims = dims;
            i_ = j + 2;
            setSpan(*c, b, prevEnd());
            e = std::move(c);
            continue;
          }
          if (j < toks_.size() && toks_[j].is("::")) {
            i_ = j + 1;
            auto m = makeExpr(ExprKind::MethodRef);
            m->target = std::move(e);
            m->name = at("new") ? toks_[i_++].text : ident();
            setSpan(*m, b, prevEnd());
            e = std::move(m);
            continue;
          }
          auto a = makeExpr(ExprKind::ArrayAccess);
          a->target = std::move(e);
          ++i_;
          hole(a->args);
          expect("]");
          setSpan(*a, b, prevEnd());
          e = std::move(a);
          continue;
        }
        ++i_;
        auto a = makeExpr(ExprKind::ArrayAccess);
        a->target = std::move(e);
        a->args.push_back(expression());
        expect("]");
        setSpan(*a, b, prevEnd());
        e = std::move(a);
        continue;
      }
      if (at("::")) {
        ++i_;
        auto m = makeExpr(ExprKind::MethodRef);
        m->target = std::move(e);
        if (at("<")) {
          size_t close = skipTypeArgs(i_);
          if (!close)
            throw Bail{};
          i_ = close;
        }
        m->name = at("new") ? toks_[i_++].text : ident();
        setSpan(*m, b, prevEnd());
        e = std::move(m);
        continue;
      }
      if (at("++") || at("--")) {
        auto u = makeExpr(ExprKind::Unary);
        u->name = toks_[i_++].text + "post";
        u->target = std::move(e);
        setSpan(*u, b, prevEnd());
        e = std::move(u);
        continue;
      }
      break;
    }
    return e;
  }

  // "a.b.c" for Name/FieldAccess chains of plain names, else "".
  static std::string dottedName(const Expr &e) {
    if (e.kind == ExprKind::Name)
      return e.name;
    if (e.kind == ExprKind::FieldAccess && e.target) {
      std::string head = dottedName(*e.target);
      return head.empty() ? "" : head + "." + e.name;
    }
    return "";
  }

  std::unique_ptr<Expr> arrayInit() {
    SourcePos b = posHere();
    auto e = makeExpr(ExprKind::ArrayInit);
    expect("{");
    while (!at("}")) {
      e->args.push_back(at("{") ? arrayInit() : expression());
      if (!accept(","))
        break;
    }
    expect("}");
    setSpan(*e, b, prevEnd());
    return e;
  }

  std::unique_ptr<Expr> literal(LiteralKind k) {
    auto e = makeExpr(ExprKind::Literal);
    e->literal = k;
    e->name = toks_[i_].text;
    setSpan(*e, toks_[i_].pos, endOf(toks_[i_]));
    ++i_;
    return e;
  }

  std::unique_ptr<Expr> primary() {
    if (eof())
      throw Bail{};
    SourcePos b = posHere();
    const Token &t = peek();
    switch (t.kind) {
    case TokenKind::IntLiteral:
      return literal(LiteralKind::Int);
    case TokenKind::FloatLiteral:
      return literal(LiteralKind::Float);
    case TokenKind::StringLiteral:
      return literal(LiteralKind::String);
    case TokenKind::CharLiteral:
      return literal(LiteralKind::Char);
    default:
      break;
    }
    if (t.is("true") || t.is("false"))
      return literal(LiteralKind::Boolean);
    if (t.is("null"))
      return literal(LiteralKind::Null);
    if (t.is("this") || t.is("super")) {
      bool isThis = t.is("this");
      SourcePos np = t.pos;
      ++i_;
      if (at("(")) { // explicit constructor invocation
        auto c = makeExpr(ExprKind::MethodCall);
        c->name = isThis ? "this" : "super";
        c->namePos = np;
        arguments(*c);
        setSpan(*c, b, prevEnd());
        registerCall(c.get());
        return c;
      }
      auto e = makeExpr(isThis ? ExprKind::This : ExprKind::Super);
      setSpan(*e, b, prevEnd());
      return e;
    }
    if (t.is("new"))
      return creator();
    if (t.is("(")) {
      ++i_;
      auto inner = expression();
      expect(")");
      auto e = makeExpr(ExprKind::Paren);
      e->target = std::move(inner);
      setSpan(*e, b, prevEnd());
      return e;
    }
    if (t.is("{"))
      return arrayInit();
    if (t.is("switch")) {
      ++i_;
      if (!at("("))
        throw Bail{};
      skipBalanced();
      if (!at("{"))
        throw Bail{};
      skipBalanced();
      auto e = makeExpr(ExprKind::Opaque);
      setSpan(*e, b, prevEnd());
      unit_.opaque.push_back(e->span);
      return e;
    }
    if (isPrimitiveName(t.text) || t.is("void")) {
      TypeRef ty = type();
      if (accept("::")) {
        auto m = makeExpr(ExprKind::MethodRef);
        m->type = ty;
        m->name = at("new") ? toks_[i_++].text : ident();
        setSpan(*m, b, prevEnd());
        return m;
      }
      expect(".");
      expect("class");
      auto e = makeExpr(ExprKind::ClassLit);
      e->type = ty;
      setSpan(*e, b, prevEnd());
      return e;
    }
    if (t.isIdent()) {
      // Generic type before '::', e.g. List<String>::size.
      if (at("<", 1)) {
        size_t close = skipTypeArgs(i_ + 1);
        if (close && close < toks_.size() && toks_[close].is("::")) {
          auto n = makeExpr(ExprKind::Name);
          n->name = t.text;
          i_ = close;
          setSpan(*n, b, prevEnd());
          return n;
        }
      }
      SourcePos np = t.pos;
      std::string name = toks_[i_++].text;
      if (at("(")) {
        auto c = makeExpr(ExprKind::MethodCall);
        c->name = name;
        c->namePos = np;
        arguments(*c);
        setSpan(*c, b, prevEnd());
        registerCall(c.get());
        return c;
      }
      auto n = makeExpr(ExprKind::Name);
      n->name = name;
      n->namePos = np;
      setSpan(*n, b, prevEnd());
      return n;
    }
    throw Bail{};
  }

  std::unique_ptr<Expr> creator() {
    SourcePos b = posHere();
    expect("new");
    TypeRef t;
    skipAnnotations();
    if (isPrimitiveName(peek().text)) {
      t.name = toks_[i_++].text;
    } else {
      t.name = ident();
      if (at("<"))
        t.args = typeArgs();
      while (at(".") && atIdent(1)) {
        ++i_;
        t.name += "." + ident();
        if (at("<"))
          t.args = typeArgs();
      }
    }
    if (at("[")) {
      auto e = makeExpr(ExprKind::NewArray);
      e->namePos = b;
      int dims = 0;
      while (at("[")) {
        ++i_;
        ++dims;
        if (at("]")) {
          if (dims == 1 && !at("{", 1) && !at("[", 1))
            hole(e->args); // `new T[]` with an empty dimension slot
          ++i_;
          continue;
        }
        e->args.push_back(expression());
        expect("]");
      }
      t.dims = dims;
      e->type = t;
      if (at("{"))
        e->init = arrayInit();
      setSpan(*e, b, prevEnd());
      return e;
    }
    auto e = makeExpr(ExprKind::New);
    e->type = t;
    e->namePos = b;
    e->name = t.name;
    arguments(*e);
    if (at("{")) {
      SourcePos bb = posHere();
      skipBalanced();
      e->hasBody = true;
      unit_.opaque.push_back({bb, prevEnd()});
    }
    setSpan(*e, b, prevEnd());
    registerCall(e.get());
    return e;
  }

  // ---- finalization ----------------------------------------------------------

  void finish() {
    std::stable_sort(unit_.calls.begin(), unit_.calls.end(),
                     [](const CallSite &a, const CallSite &b) {
                       return a.call->namePos.offset < b.call->namePos.offset;
                     });
    std::sort(unit_.holes.begin(), unit_.holes.end());
    unit_.holes.erase(std::unique(unit_.holes.begin(), unit_.holes.end()),
                      unit_.holes.end());
    std::vector<Token> merged;
    merged.reserve(toks_.size() + unit_.holes.size());
    size_t h = 0;
    for (auto &t : toks_) {
      while (h < unit_.holes.size() && unit_.holes[h].offset <= t.pos.offset) {
        merged.push_back({"", TokenKind::Hole, unit_.holes[h]});
        ++h;
      }
      merged.push_back(std::move(t));
    }
    for (; h < unit_.holes.size(); ++h)
      merged.push_back({"", TokenKind::Hole, unit_.holes[h]});
    unit_.tokens = std::move(merged);
  }

  std::vector<Token> toks_;
  uint32_t srcSize_;
  SourcePos eofPos_;
  size_t i_ = 0;
  CompilationUnit unit_;
  std::vector<int> blockStack_;
  int curType_ = -1;
  int curMethod_ = -1;
  bool static_ = false;
};

} // namespace

CompilationUnit parseUnit(std::string_view source, const std::string &path) {
  Parser p(tokenize(source, path), source, path);
  return p.parseUnit();
}

std::unique_ptr<Expr> parseExpression(std::string_view text) {
  auto toks = tokenize(text, "<expr>");
  Parser p(std::move(toks), text, "<expr>");
  try {
    return p.parseStandaloneExpr();
  } catch (const Bail &) {
    throw ParseError("<expr>", 1, 1, "not a well-formed expression");
  }
}

} // namespace argrec::corpus
