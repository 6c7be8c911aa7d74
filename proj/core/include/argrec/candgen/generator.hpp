// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/candgen/candidate.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/typesys/accessible.hpp"
#include "argrec/typesys/expected.hpp"

#include <vector>

namespace argrec::candgen {

struct GenOptions {
  int depth = 1; // member access / call levels on a receiver (1 or 2)
};

// Valid candidates sorted by (exprType, rendered), unique by rendered text.
std::vector<Candidate> generateCandidates(const corpus::ArRequest &r,
                                          const types::AccessibleSet &acc,
                                          const types::ExpectedSet &expected,
                                          const types::UnitContext &ctx,
                                          const GenOptions &opts = {});

} // namespace argrec::candgen
