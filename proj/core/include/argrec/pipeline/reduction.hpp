// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/candgen/candidate.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/typesys/expected.hpp"

#include <set>
#include <string>
#include <vector>

namespace argrec::pipeline {

// Object, String, numeric primitives and their boxes.
bool isCommonType(std::string_view type);

enum Rule : unsigned {
  kRuleSharedSubtoken = 1u << 0,
  kRuleRecentlyUsedClass = 1u << 1,
  kRuleBoundary = 1u << 2,
  kRuleEnclosingClass = 1u << 3,
  kRuleSamePackage = 1u << 4,
};

std::string ruleNames(unsigned mask);

// Facts about the request that the rules test against.
struct ReductionContext {
  std::set<std::string> subtokens;     // callee, receiver, receiver type, method
  std::set<std::string> accessedTypes; // qualified types used as `T.` before r
  std::set<std::string> enclosing;     // enclosing types and their supertypes
  std::string package;
  const types::TypeIndex *index = nullptr;
};

ReductionContext reductionContext(const corpus::ArRequest &r, const types::UnitContext &ctx,
                                  const types::ExpectedSet &expected);

// True when the candidate is subject to the rules.
bool ruleSubject(const candgen::Candidate &c, const types::ExpectedSet &expected);

// Bitmask of satisfied rules.
unsigned firedRules(const candgen::Candidate &c, const ReductionContext &rc);

// Subject candidates need at least one rule; the rest pass. `fired`, when
// given, receives the mask for every kept candidate.
std::vector<candgen::Candidate> applyReductionRules(std::vector<candgen::Candidate> cands,
                                                   const ReductionContext &rc,
                                                   const types::ExpectedSet &expected,
                                                   std::vector<unsigned> *fired = nullptr);

} // namespace argrec::pipeline
