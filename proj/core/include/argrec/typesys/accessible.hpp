// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/requests.hpp"
#include "argrec/typesys/context.hpp"

#include <string>
#include <vector>

namespace argrec::types {

struct AccessibleMethod {
  const MemberSig *sig = nullptr;
  std::string owner; // enclosing type it is inherited into, or import owner
  bool viaStaticImport = false;
};

struct AccessibleSet {
  Site site;
  std::vector<VarRef> vars;         // locals and params innermost first, then fields
  std::vector<VarRef> hiddenFields; // fields shadowed by a local, reachable via this.
  std::vector<AccessibleMethod> methods; // callable without a qualifier
  // Types usable for static access, creation and type literals: imports,
  // same package, java.lang, types named earlier in the unit, and types
  // declared in the unit.
  std::vector<std::string> staticTypes;
  bool thisAvailable = false;
  std::string thisType;
};

AccessibleSet accessibleElements(const corpus::ArRequest &r, const UnitContext &ctx);

} // namespace argrec::types
