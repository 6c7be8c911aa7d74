// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/candgen/generator.hpp"
#include "argrec/candgen/render.hpp"
#include "argrec/corpus/parser.hpp"
#include "argrec/typesys/stubs.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace argrec;
using namespace argrec::candgen;

namespace {

struct Fixture {
  explicit Fixture(const std::string &src)
      : unit(corpus::parseUnit(src, "A.java")),
        index(types::buildTypeIndex({&unit}, types::bundledStubs())), ctx(unit, index) {}

  corpus::ArRequest request(const std::string &callee, int pos) {
    auto r = corpus::requestForCallee(unit, ctx, callee, pos);
    EXPECT_TRUE(r) << callee;
    return *r;
  }
  types::ExpectedSet expected(const corpus::ArRequest &r) {
    auto s = ctx.siteFor(unit.calls[r.callIndex], r.location);
    return types::expectedTypes(ctx.resolveCall(*r.call, s), r.pos);
  }
  std::vector<Candidate> generate(const std::string &callee, int pos, int depth = 1) {
    auto r = request(callee, pos);
    return generateCandidates(r, types::accessibleElements(r, ctx), expected(r), ctx, {depth});
  }

  corpus::CompilationUnit unit;
  types::TypeIndex index;
  types::UnitContext ctx;
};

std::set<std::string> texts(const std::vector<Candidate> &cs) {
  std::set<std::string> out;
  for (const auto &c : cs)
    out.insert(c.rendered);
  return out;
}

const Candidate *find(const std::vector<Candidate> &cs, const std::string &text) {
  for (const auto &c : cs)
    if (c.rendered == text)
      return &c;
  return nullptr;
}

// Independent depth-1 enumeration straight from the index.
std::set<std::string> bruteForce(const corpus::ArRequest &r, const types::AccessibleSet &acc,
                                 const types::ExpectedSet &exp, const types::UnitContext &ctx) {
  const auto &idx = ctx.index();
  std::string from = ctx.qualifiedOf(acc.site.type);
  const std::string &pkg = ctx.unit().packageName;
  auto fits = [&](const std::string &t) {
    for (const auto &e : exp.types)
      if (types::isCompatible(t, e.type, idx))
        return true;
    return false;
  };
  auto args = [](size_t n) {
    std::string s = "(";
    for (size_t i = 1; i < n; ++i)
      s += ", ";
    return s + ")";
  };
  std::set<std::string> out;
  std::set<std::string> unqualified;
  for (const auto &v : acc.vars) {
    unqualified.insert(v.declaringType + "#" + v.name);
    if (fits(v.type.name))
      out.insert(v.name);
    if (types::isArray(v.type.name)) {
      if (fits("int"))
        out.insert(v.name + ".length");
      if (fits(types::componentOf(v.type.name)))
        out.insert(v.name + "[]");
      continue;
    }
    for (const auto *f : idx.fields(v.type.name))
      if (!f->isStatic && idx.accessible(*f, from, pkg) && fits(f->type))
        out.insert(v.name + "." + f->name);
    for (const auto *m : idx.allMethods(v.type.name))
      if (m->kind == types::MemberKind::Method && !m->isStatic &&
          idx.accessible(*m, from, pkg) && fits(m->type))
        out.insert(v.name + "." + m->name + args(m->params.size()));
  }
  for (const auto &v : acc.hiddenFields)
    if (fits(v.type.name))
      out.insert("this." + v.name);
  std::set<std::string> methodNames;
  for (const auto &am : acc.methods) {
    methodNames.insert(am.sig->name);
    if (am.sig->kind == types::MemberKind::Method && fits(am.sig->type))
      out.insert(am.sig->name + args(am.sig->params.size()));
  }
  for (const auto &q : acc.staticTypes) {
    std::string shown = ctx.displayName(q, acc.site.type);
    for (const auto *f : idx.fields(q))
      if (f->isStatic && idx.accessible(*f, from, pkg) && fits(f->type) &&
          !unqualified.count(f->declaredIn + "#" + f->name))
        out.insert(shown + "." + f->name);
    for (const auto *m : idx.allMethods(q))
      if (m->kind == types::MemberKind::Method && m->isStatic && idx.accessible(*m, from, pkg) &&
          fits(m->type) && !methodNames.count(m->name))
        out.insert(shown + "." + m->name + args(m->params.size()));
    if (fits("java.lang.Class"))
      out.insert(shown + ".class");
    const auto *e = idx.find(q);
    if (e->kind == types::TypeKind::Class && !e->isAbstract && fits(q))
      for (const auto *k : idx.constructors(q))
        if (idx.accessible(*k, from, pkg))
          out.insert("new " + shown + (e->typeParams.empty() ? "" : "<>") + args(k->params.size()));
  }
  for (const char *lit : {"\"<EMPTY_STRING>\"", "0", "0L", "0.0", "0.0f", "false", "true", "'\\0'", "null"}) {
    auto toks = corpus::tokenize(lit);
    std::string t = toks[0].kind == corpus::TokenKind::StringLiteral ? "java.lang.String"
                    : toks[0].kind == corpus::TokenKind::CharLiteral ? "char"
                    : toks[0].text == "null"                        ? "null"
                    : toks[0].text == "true" || toks[0].text == "false" ? "boolean"
                    : toks[0].text == "0L"                          ? "long"
                    : toks[0].text == "0.0f"                        ? "float"
                    : toks[0].text == "0.0"                         ? "double"
                                                                    : "int";
    if (fits(t))
      out.insert(lit);
  }
  if (acc.thisAvailable && fits(acc.thisType))
    out.insert("this");
  for (const auto &e : exp.types) {
    if (types::isArray(e.type) && !types::isArray(types::componentOf(e.type)))
      out.insert("new " + ctx.displayName(types::componentOf(e.type), acc.site.type) + "[]");
    if (!types::isReference(e.type) || types::isArray(e.type) || e.type == types::kObject)
      continue;
    for (const auto &v : acc.vars)
      if (v.type.name != e.type && !types::isPrimitive(v.type.name) &&
          idx.isSubtype(e.type, v.type.name))
        out.insert("(" + ctx.displayName(e.type, acc.site.type) + ") " + v.name);
  }
  (void)r;
  return out;
}

const char *kIntFixture = R"(package p;
class Box {
  int size;
  String label;
  int count() { return 0; }
  long total(int a, int b) { return 0; }
}
class A {
  static final int LIMIT = 3;
  int[] data;
  void take(int v) {}
  int half(int x) { return x / 2; }
  void g() {
    int a = 1;
    int b = 2;
    Box box = new Box();
    take(a);
  }
})";

} // namespace

TEST(Placeholder, Examples) {
  auto u = corpus::parseUnit(R"(class A { void g() {
    f(new Point(1, 2));
    f(arr[i + 1]);
    f(g(s));
    f(new int[n]);
    f(new java.util.ArrayList<String>());
  } })", "A.java");
  std::vector<std::string> got;
  std::vector<int> holes;
  for (const auto &cs : u.calls)
    if (cs.call->name == "f") {
      got.push_back(placeholderize(*cs.call->args[0], u));
      holes.push_back(holeCount(*cs.call->args[0]));
    }
  EXPECT_EQ(got, (std::vector<std::string>{"new Point(, )", "arr[]", "g()", "new int[]",
                                           "new java.util.ArrayList<>()"}));
  EXPECT_EQ(holes, (std::vector<int>{2, 1, 1, 1, 0}));
}

TEST(Placeholder, HoleArgs) {
  EXPECT_EQ(holeArgs(0), "()");
  EXPECT_EQ(holeArgs(1), "()");
  EXPECT_EQ(holeArgs(3), "(, , )");
}

TEST(Render, NormalizeText) {
  EXPECT_EQ(normalizeText("a . b ( x ,y )"), "a.b(x, y)");
  EXPECT_EQ(normalizeText("( String )  o"), "(String) o");
  EXPECT_EQ(normalizeText("new  Foo ( )"), "new Foo()");
}

TEST(Generate, StringExample) {
  Fixture f(R"(class Token { String getImage() { return null; } }
  class A {
    void use(String s) {}
    void g(Token tokenID) {
      String s = "x";
      use(s);
    }
    String getImage() { return null; }
  })");
  auto cs = f.generate("use", 1);
  auto t = texts(cs);
  for (const char *want : {"s", "getImage()", "tokenID.getImage()", "\"<EMPTY_STRING>\"", "null"})
    EXPECT_TRUE(t.count(want)) << want;
  EXPECT_FALSE(t.count("0"));
  EXPECT_FALSE(t.count("tokenID"));
}

TEST(Generate, BooleanWithEmptyAccessibleSet) {
  Fixture f("class A { void set(boolean b) {} void g() { set(true); } }");
  auto r = f.request("set", 1);
  types::AccessibleSet acc;
  acc.site = f.ctx.siteFor(f.unit.calls[r.callIndex], r.location);
  auto cs = generateCandidates(r, acc, f.expected(r), f.ctx);
  EXPECT_EQ(texts(cs), (std::set<std::string>{"false", "true"}));
}

TEST(Generate, IntMatchesBruteForce) {
  Fixture f(kIntFixture);
  auto r = f.request("take", 1);
  auto acc = types::accessibleElements(r, f.ctx);
  auto exp = f.expected(r);
  auto cs = generateCandidates(r, acc, exp, f.ctx);
  EXPECT_EQ(texts(cs), bruteForce(r, acc, exp, f.ctx));
  auto t = texts(cs);
  for (const char *want : {"a", "b", "0", "box.size", "box.count()", "LIMIT", "half()",
                           "data.length", "data[]", "Integer.MAX_VALUE"})
    EXPECT_TRUE(t.count(want)) << want;
  // Unqualified forms win over Enclosing.F; long does not narrow to int.
  EXPECT_FALSE(t.count("A.LIMIT"));
  EXPECT_FALSE(t.count("box.total(, )"));
  EXPECT_FALSE(t.count("0L"));
}

TEST(Generate, Placeholderized) {
  Fixture f(R"(class Point { Point(int x, int y) {} }
  class A {
    void put(Point p) {}
    void fill(int[] xs) {}
    String f(String s) { return s; }
    void say(String s) {}
    void g(int[] arr) { put(null); fill(null); say(null); }
  })");
  auto pc = f.generate("put", 1);
  const Candidate *np = find(pc, "new Point(, )");
  ASSERT_TRUE(np);
  EXPECT_EQ(np->holes, 2);
  EXPECT_EQ(np->exprType, ExprType::ObjectCreation);
  auto fc = f.generate("fill", 1);
  ASSERT_TRUE(find(fc, "new int[]"));
  EXPECT_EQ(find(fc, "new int[]")->exprType, ExprType::ArrayCreation);
  auto sc = f.generate("say", 1);
  const Candidate *fs = find(sc, "f()");
  ASSERT_TRUE(fs);
  EXPECT_EQ(fs->holes, 1);
  EXPECT_EQ(fs->resultType, "java.lang.String");
  auto ic = f.generate("fill", 1);
  EXPECT_TRUE(find(ic, "arr"));
}

TEST(Generate, ArrayAccessResultType) {
  Fixture f("class A { void take(int v) {} void g(int[] arr) { take(0); } }");
  auto cs = f.generate("take", 1);
  const Candidate *c = find(cs, "arr[]");
  ASSERT_TRUE(c);
  EXPECT_EQ(c->resultType, "int");
  EXPECT_EQ(c->holes, 1);
  EXPECT_FALSE(c->isVariable);
}

TEST(Generate, CastThisTypeLiteralAndHiddenField) {
  Fixture f(R"(class Animal {}
  class Dog extends Animal {}
  class A {
    int n;
    void pet(Dog d) {}
    void load(Class<?> c) {}
    void own(A a) {}
    void count(int v) {}
    void g(Animal pet, int n) { pet(null); load(null); own(null); count(n); }
  })");
  auto pc = f.generate("pet", 1);
  const Candidate *cast = find(pc, "(Dog) pet");
  ASSERT_TRUE(cast);
  EXPECT_EQ(cast->exprType, ExprType::CastExpr);
  EXPECT_FALSE(find(pc, "pet"));
  auto lc = f.generate("load", 1);
  ASSERT_TRUE(find(lc, "Dog.class"));
  EXPECT_EQ(find(lc, "Dog.class")->exprType, ExprType::TypeLiteral);
  auto oc = f.generate("own", 1);
  ASSERT_TRUE(find(oc, "this"));
  auto cc = f.generate("count", 1);
  const Candidate *hf = find(cc, "this.n");
  ASSERT_TRUE(hf);
  EXPECT_EQ(hf->exprType, ExprType::FieldAccess);
  EXPECT_TRUE(hf->isVariable);
}

TEST(Generate, GenericReceiverSubstitution) {
  Fixture f(R"(import java.util.List;
  class A {
    void say(String s) {}
    void g(List<String> names) { say(null); }
  })");
  auto cs = f.generate("say", 1);
  EXPECT_TRUE(find(cs, "names.get()"));
}

TEST(Generate, StaticDerivedFlags) {
  Fixture f(kIntFixture);
  auto cs = f.generate("take", 1);
  const Candidate *c = find(cs, "Integer.MAX_VALUE");
  ASSERT_TRUE(c);
  EXPECT_TRUE(c->staticDerived);
  EXPECT_TRUE(c->isVariable);
  EXPECT_EQ(c->declBlock, 0);
  EXPECT_EQ(c->owner, "java.lang.Integer");
  const Candidate *bs = find(cs, "box.size");
  ASSERT_TRUE(bs);
  EXPECT_FALSE(bs->staticDerived);
  EXPECT_TRUE(bs->isVariable);
  EXPECT_EQ(bs->varName, "box");
}

TEST(Generate, SoundAndSorted) {
  for (const char *src : {kIntFixture}) {
    Fixture f(src);
    for (int depth : {1, 2}) {
      auto r = f.request("take", 1);
      auto exp = f.expected(r);
      auto cs = generateCandidates(r, types::accessibleElements(r, f.ctx), exp, f.ctx, {depth});
      for (size_t i = 0; i < cs.size(); ++i) {
        const auto &c = cs[i];
        auto e = corpus::parseExpression(c.rendered);
        EXPECT_EQ(corpus::classifyExpr(*e), c.exprType) << c.rendered;
        EXPECT_NE(c.exprType, ExprType::LambdaExpr);
        EXPECT_NE(c.exprType, ExprType::CompoundExpr);
        bool ok = false;
        for (const auto &t : exp.types)
          ok = ok || types::isCompatible(c.resultType, t.type, f.index);
        EXPECT_TRUE(ok) << c.rendered;
        if (i) {
          EXPECT_TRUE(std::make_pair(cs[i - 1].exprType, cs[i - 1].rendered) <
                      std::make_pair(c.exprType, c.rendered));
        }
      }
    }
  }
}

TEST(Generate, DepthTwoReachesChains) {
  Fixture f(R"(class Inner { int v; }
  class Outer { Inner inner; Inner get() { return null; } }
  class A { void take(int x) {} void g(Outer o) { take(0); } })");
  EXPECT_FALSE(find(f.generate("take", 1, 1), "o.inner.v"));
  auto cs = f.generate("take", 1, 2);
  EXPECT_TRUE(find(cs, "o.inner.v"));
  ASSERT_TRUE(find(cs, "o.get().v"));
  EXPECT_EQ(find(cs, "o.get().v")->exprType, ExprType::FieldAccess);
}
