// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/typesys/expected.hpp"

#include <algorithm>
#include <map>

namespace argrec::types {

bool ExpectedSet::contains(std::string_view t) const {
  return std::any_of(types.begin(), types.end(),
                     [&](const ExpectedType &e) { return e.type == t; });
}

namespace {

void addSource(std::map<std::string, ExpectedType> &acc, const std::string &type,
               const MemberSig *m, int idx) {
  ExpectedType &e = acc[type];
  e.type = type;
  const std::string &name = m->params[idx].name;
  if (!name.empty() && std::find(e.paramNames.begin(), e.paramNames.end(), name) == e.paramNames.end())
    e.paramNames.push_back(name);
  e.sources.emplace_back(m, idx);
}

std::vector<ExpectedType> flatten(std::map<std::string, ExpectedType> &acc) {
  std::vector<ExpectedType> out;
  for (auto &[k, v] : acc)
    out.push_back(std::move(v));
  return out;
}

} // namespace

ExpectedSet expectedTypes(const CalleeInfo &callee, int pos) {
  ExpectedSet set;
  set.callee = callee;
  std::map<std::string, ExpectedType> acc;
  for (const MemberSig *m : callee.overloads) {
    int n = static_cast<int>(m->params.size());
    if (n == 0)
      continue;
    if (pos <= n) {
      const ParamSig &p = m->params[pos - 1];
      if (m->varargs && pos == n) {
        set.varargs = true;
        addSource(acc, p.type, m, pos - 1);
        addSource(acc, componentOf(p.type), m, pos - 1);
      } else {
        addSource(acc, p.type, m, pos - 1);
      }
    } else if (m->varargs) {
      set.varargs = true;
      addSource(acc, componentOf(m->params[n - 1].type), m, n - 1);
    }
  }
  set.types = flatten(acc);
  set.unresolved = set.types.empty();
  return set;
}

void mapObjectToTypeParam(ExpectedSet &set, const TypeIndex &index) {
  const StaticType &recv = set.callee.receiverType;
  if (recv.args.empty())
    return;
  const TypeEntry *recvEntry = index.find(recv.name);
  if (!recvEntry || recvEntry->typeParams.size() != recv.args.size())
    return;
  auto argFor = [&](const std::string &typeVar) -> std::string {
    auto it = std::find(recvEntry->typeParams.begin(), recvEntry->typeParams.end(), typeVar);
    if (it == recvEntry->typeParams.end())
      return {};
    return recv.args[static_cast<size_t>(it - recvEntry->typeParams.begin())];
  };
  std::map<std::string, ExpectedType> acc;
  bool changed = false;
  for (const auto &et : set.types) {
    for (auto [m, idx] : et.sources) {
      std::string refined = et.type;
      const ParamSig &p = m->params[idx];
      const TypeEntry *owner = index.find(m->declaredIn);
      bool generic = owner && !owner->typeParams.empty();
      if (generic && et.type == kObject) {
        // Direct type-variable parameter, then a same-named sibling.
        std::string var;
        if (std::find(owner->typeParams.begin(), owner->typeParams.end(), p.declared) !=
            owner->typeParams.end())
          var = p.declared;
        for (const auto &sib : owner->members) {
          if (!var.empty())
            break;
          for (const auto &sp : sib.params)
            if (sp.name == p.name &&
                std::find(owner->typeParams.begin(), owner->typeParams.end(), sp.declared) !=
                    owner->typeParams.end()) {
              var = sp.declared;
              break;
            }
        }
        // Receiver arguments are positional over the receiver's own type
        // parameters, which match the owner's when names agree.
        if (!var.empty()) {
          std::string a = argFor(var);
          if (!a.empty() && a != kObject) {
            refined = a;
            changed = true;
          }
        }
      }
      addSource(acc, refined, m, idx);
    }
  }
  if (changed)
    set.types = flatten(acc);
}

} // namespace argrec::types
