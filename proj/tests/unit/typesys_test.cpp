// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/parser.hpp"
#include "argrec/typesys/accessible.hpp"
#include "argrec/typesys/expected.hpp"
#include "argrec/typesys/stubs.hpp"

#include <gtest/gtest.h>

#include <deque>
#include <random>
#include <set>

using namespace argrec;
using namespace argrec::types;

namespace {

struct Fixture {
  explicit Fixture(const std::string &src, bool strict = false)
      : unit(corpus::parseUnit(src, "A.java")),
        index(buildTypeIndex({&unit}, bundledStubs())), ctx(unit, index, strict) {}

  corpus::ArRequest request(const std::string &callee, int pos) {
    auto r = corpus::requestForCallee(unit, ctx, callee, pos);
    EXPECT_TRUE(r) << callee;
    return *r;
  }
  ExpectedSet expected(const std::string &callee, int pos) {
    auto r = request(callee, pos);
    Site s = ctx.siteFor(unit.calls[r.callIndex], r.location);
    return expectedTypes(ctx.resolveCall(*r.call, s), pos);
  }

  corpus::CompilationUnit unit;
  TypeIndex index;
  UnitContext ctx;
};

std::vector<std::string> typeNames(const ExpectedSet &s) {
  std::vector<std::string> out;
  for (auto &t : s.types)
    out.push_back(t.type);
  return out;
}

} // namespace

TEST(TypeIndex, SupertypeChainThroughStub) {
  auto stubs = bundledStubs();
  TypeEntry b;
  b.qualifiedName = "lib.B";
  b.simpleName = "B";
  b.packageName = "lib";
  stubs.push_back(b);
  auto u = corpus::parseUnit("import lib.B; class A extends B {}", "A.java");
  auto idx = buildTypeIndex({&u}, stubs);
  EXPECT_EQ(idx.supertypeChain("A"), (std::vector<std::string>{"lib.B", "java.lang.Object"}));
  EXPECT_TRUE(idx.warnings().empty());
}

TEST(TypeIndex, UnknownSupertypeFallsBackWithWarning) {
  auto u = corpus::parseUnit("class A extends Unknown {}", "A.java");
  auto idx = buildTypeIndex({&u}, bundledStubs());
  EXPECT_EQ(idx.supertypeChain("A"), std::vector<std::string>{"java.lang.Object"});
  ASSERT_EQ(idx.warnings().size(), 1u);
  EXPECT_NE(idx.warnings()[0].message.find("Unknown"), std::string::npos);
}

TEST(TypeIndex, DuplicateQualifiedNameNamesBothFiles) {
  auto u1 = corpus::parseUnit("package p; class A {}", "one/A.java");
  auto u2 = corpus::parseUnit("package p; class A {}", "two/A.java");
  try {
    buildTypeIndex({&u1, &u2}, bundledStubs());
    FAIL() << "expected IndexError";
  } catch (const IndexError &e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("one/A.java"), std::string::npos);
    EXPECT_NE(msg.find("two/A.java"), std::string::npos);
  }
}

TEST(TypeIndex, StubRoundTrip) {
  auto stubs = bundledStubs();
  std::vector<const TypeEntry *> ptrs;
  for (auto &s : stubs)
    ptrs.push_back(&s);
  std::string text = writeStubs(ptrs, "x");
  auto again = parseStubs(text, "x");
  ASSERT_EQ(again.size(), stubs.size());
  std::vector<const TypeEntry *> ptrs2;
  for (auto &s : again)
    ptrs2.push_back(&s);
  EXPECT_EQ(writeStubs(ptrs2, "x"), text);
}

TEST(Compat, Examples) {
  TypeIndex idx;
  for (auto &s : bundledStubs())
    idx.add(s);
  idx.finalize();
  EXPECT_TRUE(isCompatible("java.lang.String", "java.lang.Object", idx));
  EXPECT_FALSE(isCompatible("java.lang.Object", "java.lang.String", idx));
  EXPECT_TRUE(isCompatible("int", "long", idx));
  EXPECT_FALSE(isCompatible("long", "int", idx));
  EXPECT_TRUE(isCompatible("int", "java.lang.Integer", idx));
  EXPECT_TRUE(isCompatible("java.lang.Integer", "long", idx));
  EXPECT_TRUE(isCompatible("int", "java.lang.Object", idx));
  EXPECT_TRUE(isCompatible("null", "java.lang.String", idx));
  EXPECT_FALSE(isCompatible("null", "int", idx));
  EXPECT_TRUE(isCompatible("java.lang.String[]", "java.lang.Object[]", idx));
  EXPECT_TRUE(isCompatible("int[]", "java.lang.Object", idx));
  EXPECT_FALSE(isCompatible("int[]", "long[]", idx));
  // Strict mode keeps only identity and inheritance.
  EXPECT_FALSE(isCompatible("int", "long", idx, true));
  EXPECT_FALSE(isCompatible("int", "java.lang.Integer", idx, true));
  EXPECT_TRUE(isCompatible("java.lang.String", "java.lang.CharSequence", idx, true));
}

// Reference compatibility equals reachability on random hierarchies.
TEST(Compat, ReferenceCaseMatchesDagReachability) {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    TypeIndex idx;
    TypeEntry obj;
    obj.qualifiedName = "java.lang.Object";
    obj.simpleName = "Object";
    idx.add(obj);
    int n = 8;
    std::vector<std::vector<int>> parents(n);
    for (int i = 0; i < n; ++i) {
      TypeEntry e;
      e.qualifiedName = "T" + std::to_string(i);
      e.simpleName = e.qualifiedName;
      for (int j = 0; j < i; ++j)
        if (rng() % 3 == 0) {
          parents[i].push_back(j);
          e.supertypes.push_back("T" + std::to_string(j));
        }
      idx.add(e);
    }
    idx.finalize();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        std::set<int> seen;
        std::deque<int> q{a};
        while (!q.empty()) {
          int c = q.front();
          q.pop_front();
          if (seen.insert(c).second)
            for (int p : parents[c])
              q.push_back(p);
        }
        EXPECT_EQ(isCompatible("T" + std::to_string(a), "T" + std::to_string(b), idx),
                  seen.count(b) > 0);
      }
  }
}

TEST(Expected, OverloadsUnion) {
  Fixture f(R"(class A {
    int getPosition(Character c) { return 0; }
    int getPosition(String s) { return 0; }
    void g() { getPosition(null); }
  })");
  EXPECT_EQ(typeNames(f.expected("getPosition", 1)),
            (std::vector<std::string>{"java.lang.Character", "java.lang.String"}));
}

TEST(Expected, SingleParamName) {
  Fixture f("class A { void f(int x) {} void g() { f(1); } }");
  auto e = f.expected("f", 1);
  ASSERT_EQ(e.types.size(), 1u);
  EXPECT_EQ(e.types[0].type, "int");
  EXPECT_EQ(e.types[0].paramNames, std::vector<std::string>{"x"});
}

TEST(Expected, NoParamsIsUnresolvable) {
  Fixture f("class A { void f() {} void g() { f(1); } }");
  auto e = f.expected("f", 1);
  EXPECT_TRUE(e.empty());
  EXPECT_TRUE(e.unresolved);
}

TEST(Expected, VarargsSlot) {
  Fixture f(R"(class A {
    void log(String fmt, Object... args) {}
    void g(String s) { log(s, s, s); }
  })");
  EXPECT_EQ(typeNames(f.expected("log", 2)),
            (std::vector<std::string>{"java.lang.Object", "java.lang.Object[]"}));
  EXPECT_EQ(typeNames(f.expected("log", 3)), std::vector<std::string>{"java.lang.Object"});
}

TEST(Expected, ObjectMappingRefinesContainsKey) {
  Fixture f(R"(import java.util.HashMap;
  class A {
    void g() { HashMap<String, Integer> m = new HashMap<>(); m.containsKey(null); }
  })");
  auto e = f.expected("containsKey", 1);
  EXPECT_EQ(typeNames(e), std::vector<std::string>{"java.lang.Object"});
  mapObjectToTypeParam(e, f.index);
  EXPECT_EQ(typeNames(e), std::vector<std::string>{"java.lang.String"});
}

TEST(Expected, ObjectMappingLeavesNonGenericAlone) {
  Fixture f(R"(class A {
    void take(Object key) {}
    void g() { take(null); }
  })");
  auto e = f.expected("take", 1);
  mapObjectToTypeParam(e, f.index);
  EXPECT_EQ(typeNames(e), std::vector<std::string>{"java.lang.Object"});
}

TEST(Expected, ObjectMappingNeedsSameNamedSibling) {
  Fixture f(R"(import java.util.HashMap;
  class A {
    void g() { HashMap<String, Integer> m = new HashMap<>(); m.equals(null); }
  })");
  auto e = f.expected("equals", 1);
  mapObjectToTypeParam(e, f.index);
  EXPECT_EQ(typeNames(e), std::vector<std::string>{"java.lang.Object"});
}

TEST(Accessible, ParamsAndPriorLocals) {
  Fixture f(R"(class Svc {
    void use(Object o) {}
    void handle(String user) {
      Object provider = user;
      use(provider);
      Object later = user;
    }
  })");
  auto r = f.request("use", 1);
  auto acc = accessibleElements(r, f.ctx);
  std::set<std::string> names;
  for (auto &v : acc.vars)
    names.insert(v.name);
  EXPECT_TRUE(names.count("user"));
  EXPECT_TRUE(names.count("provider"));
  EXPECT_FALSE(names.count("later"));
}

TEST(Accessible, PrivateFieldOfUnrelatedClassExcluded) {
  auto other = corpus::parseUnit("package q; public class Other { private int secret; public int open; }",
                                 "Other.java");
  auto mine = corpus::parseUnit(R"(package p;
  import q.Other;
  class A extends Other { void f(int v) {} void g() { f(0); } })", "A.java");
  auto idx = buildTypeIndex({&other, &mine}, bundledStubs());
  UnitContext ctx(mine, idx);
  auto r = corpus::requestForCallee(mine, ctx, "f", 1);
  ASSERT_TRUE(r);
  auto acc = accessibleElements(*r, ctx);
  std::set<std::string> names;
  for (auto &v : acc.vars)
    names.insert(v.name);
  EXPECT_TRUE(names.count("open"));
  EXPECT_FALSE(names.count("secret"));
}

TEST(Accessible, StaticUniverse) {
  Fixture f(R"(package p;
  import java.util.List;
  class A { void f(Object o) {} void g() { java.util.HashMap m = null; f(null); } })");
  auto acc = accessibleElements(f.request("f", 1), f.ctx);
  auto has = [&](const char *q) {
    return std::find(acc.staticTypes.begin(), acc.staticTypes.end(), q) != acc.staticTypes.end();
  };
  EXPECT_TRUE(has("java.util.List"));
  EXPECT_TRUE(has("java.lang.Integer"));
  EXPECT_TRUE(has("p.A"));
  EXPECT_FALSE(has("java.util.TreeMap"));
}

// Extending the context never removes an accessible element.
TEST(Accessible, MonotoneInContextPrefix) {
  Fixture f(R"(class A {
    void use(int v) {}
    void g(int p) {
      int a = 1;
      use(a);
      int b = 2;
      use(b);
      int c = 3;
      use(c);
    }
  })");
  std::vector<std::set<std::string>> sets;
  for (auto &cs : f.unit.calls) {
    if (cs.call->name != "use")
      continue;
    corpus::ArRequest r;
    auto reqs = corpus::extractRequests(f.unit, f.ctx);
    for (auto &q : reqs)
      if (q.call == cs.call)
        r = q;
    auto acc = accessibleElements(r, f.ctx);
    std::set<std::string> names;
    for (auto &v : acc.vars)
      names.insert(v.name);
    for (auto &m : acc.methods)
      names.insert(m.sig->name + "()");
    names.insert(acc.staticTypes.begin(), acc.staticTypes.end());
    sets.push_back(names);
  }
  ASSERT_EQ(sets.size(), 3u);
  for (size_t i = 1; i < sets.size(); ++i)
    EXPECT_TRUE(std::includes(sets[i].begin(), sets[i].end(), sets[i - 1].begin(), sets[i - 1].end()));
}
