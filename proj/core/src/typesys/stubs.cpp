// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/typesys/stubs.hpp"

#include "argrec/common.hpp"

#include <json.hpp>

#include <algorithm>

namespace argrec::types {
namespace {

using nlohmann::json;

Access parseAccess(const std::string &s) {
  if (s == "private")
    return Access::Private;
  if (s == "protected")
    return Access::Protected;
  if (s == "package")
    return Access::Package;
  return Access::Public;
}

TypeKind parseKind(const std::string &s) {
  if (s == "interface")
    return TypeKind::Interface;
  if (s == "enum")
    return TypeKind::Enum;
  return TypeKind::Class;
}

MemberKind parseMemberKind(const std::string &s) {
  if (s == "field")
    return MemberKind::Field;
  if (s == "constructor")
    return MemberKind::Constructor;
  return MemberKind::Method;
}

std::string eraseType(const std::string &declared, const std::vector<std::string> &vars) {
  std::string base = declared;
  std::string dims;
  while (base.size() > 2 && base.substr(base.size() - 2) == "[]") {
    dims += "[]";
    base.resize(base.size() - 2);
  }
  if (auto lt = base.find('<'); lt != std::string::npos)
    base.resize(lt);
  if (std::find(vars.begin(), vars.end(), base) != vars.end())
    base = std::string(kObject);
  return base + dims;
}

} // namespace

std::vector<TypeEntry> parseStubs(std::string_view text, const std::string &origin) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception &e) {
    throw Error("stub " + origin + ": " + e.what());
  }
  const json &types = doc.is_array() ? doc : doc.value("types", json::array());
  std::vector<TypeEntry> out;
  try {
    for (const auto &t : types) {
      TypeEntry e;
      e.qualifiedName = t.at("qualifiedName").get<std::string>();
      auto dot = e.qualifiedName.rfind('.');
      e.kind = parseKind(t.value("kind", "class"));
      e.outer = t.value("outer", "");
      e.simpleName = dot == std::string::npos ? e.qualifiedName : e.qualifiedName.substr(dot + 1);
      std::string pkgDefault;
      if (!e.outer.empty()) {
        auto od = e.outer.rfind('.');
        pkgDefault = od == std::string::npos ? "" : e.outer.substr(0, od);
      } else if (dot != std::string::npos) {
        pkgDefault = e.qualifiedName.substr(0, dot);
      }
      e.packageName = t.value("package", pkgDefault);
      e.isAbstract = t.value("abstract", e.kind == TypeKind::Interface);
      e.isStatic = t.value("static", true);
      e.access = parseAccess(t.value("access", "public"));
      e.supertypes = t.value("supertypes", std::vector<std::string>{});
      e.typeParams = t.value("typeParams", std::vector<std::string>{});
      e.source = t.value("source", "stub") == "project" ? TypeSource::Project : TypeSource::Stub;
      e.file = t.value("file", "");
      e.project = t.value("project", "");
      for (const auto &m : t.value("members", json::array())) {
        MemberSig ms;
        ms.name = m.at("name").get<std::string>();
        ms.kind = parseMemberKind(m.value("kind", "method"));
        ms.isStatic = m.value("static", false);
        ms.isAbstract = m.value("abstract", false);
        ms.varargs = m.value("varargs", false);
        ms.access = parseAccess(m.value("access", "public"));
        auto vars = e.typeParams;
        auto mvars = m.value("typeParams", std::vector<std::string>{});
        vars.insert(vars.end(), mvars.begin(), mvars.end());
        for (const auto &p : m.value("params", json::array())) {
          ParamSig ps;
          ps.name = p.value("name", "");
          ps.declared = p.at("type").get<std::string>();
          ps.type = eraseType(ps.declared, vars);
          ms.params.push_back(std::move(ps));
        }
        if (ms.kind == MemberKind::Constructor) {
          ms.declared = e.qualifiedName;
          ms.type = e.qualifiedName;
          ms.name = e.simpleName;
        } else {
          ms.declared = m.value("returnType", m.value("type", "void"));
          ms.type = eraseType(ms.declared, vars);
        }
        ms.declaredIn = e.qualifiedName;
        e.members.push_back(std::move(ms));
      }
      out.push_back(std::move(e));
    }
  } catch (const json::exception &ex) {
    throw Error("stub " + origin + ": " + ex.what());
  }
  return out;
}

std::string writeStubs(const std::vector<const TypeEntry *> &entries,
                       const std::string &library) {
  std::vector<const TypeEntry *> sorted = entries;
  std::sort(sorted.begin(), sorted.end(), [](const TypeEntry *a, const TypeEntry *b) {
    return a->qualifiedName < b->qualifiedName;
  });
  json types = json::array();
  for (const TypeEntry *e : sorted) {
    json t;
    t["qualifiedName"] = e->qualifiedName;
    t["kind"] = std::string(typeKindName(e->kind));
    t["package"] = e->packageName;
    if (!e->outer.empty())
      t["outer"] = e->outer;
    t["abstract"] = e->isAbstract;
    t["static"] = e->isStatic;
    t["access"] = std::string(accessName(e->access));
    t["supertypes"] = e->supertypes;
    t["typeParams"] = e->typeParams;
    t["source"] = e->source == TypeSource::Project ? "project" : "stub";
    if (!e->file.empty())
      t["file"] = e->file;
    if (!e->project.empty())
      t["project"] = e->project;
    json members = json::array();
    for (const auto &m : e->members) {
      json jm;
      jm["name"] = m.name;
      jm["kind"] = std::string(memberKindName(m.kind));
      jm["static"] = m.isStatic;
      if (m.isAbstract)
        jm["abstract"] = true;
      if (m.varargs)
        jm["varargs"] = true;
      jm["access"] = std::string(accessName(m.access));
      json params = json::array();
      for (const auto &p : m.params) {
        // Type variables keep their declared spelling so erasure and the
        // Object mapping can be recomputed on load.
        std::string declaredBase = p.declared.substr(0, p.declared.find('['));
        bool isVar = std::find(e->typeParams.begin(), e->typeParams.end(), declaredBase) !=
                     e->typeParams.end();
        params.push_back({{"name", p.name}, {"type", isVar ? p.declared : p.type}});
      }
      jm["params"] = params;
      if (m.kind != MemberKind::Constructor) {
        std::string declaredBase = m.declared.substr(0, m.declared.find('['));
        bool isVar = std::find(e->typeParams.begin(), e->typeParams.end(), declaredBase) !=
                     e->typeParams.end();
        jm["returnType"] = isVar ? m.declared : m.type;
      }
      members.push_back(std::move(jm));
    }
    t["members"] = std::move(members);
    types.push_back(std::move(t));
  }
  json doc;
  doc["library"] = library;
  doc["types"] = std::move(types);
  return doc.dump(1) + "\n";
}

std::vector<TypeEntry> bundledStubs() {
  return parseStubs(bundledStubJson(), "bundled jdk-min");
}

} // namespace argrec::types
