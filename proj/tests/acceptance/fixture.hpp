// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/corpus_files.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/typesys/context.hpp"

#include <memory>
#include <string>
#include <vector>

namespace argrec::acceptance {

inline std::string fixturePath(const std::string &rel) {
  return std::string(ARGREC_FIXTURE_DIR) + "/" + rel;
}

// A parsed corpus with its index and one context per unit. Requests keep
// pointers into `corpus.units`, so the struct is not copyable.
struct IndexedCorpus {
  corpus::LoadedCorpus corpus;
  types::TypeIndex index;
  std::vector<std::unique_ptr<types::UnitContext>> contexts;

  IndexedCorpus() = default;
  IndexedCorpus(const IndexedCorpus &) = delete;
  IndexedCorpus &operator=(const IndexedCorpus &) = delete;
};

std::unique_ptr<IndexedCorpus> loadIndexed(const std::vector<corpus::SourceFile> &files);

struct FixtureRequest {
  corpus::ArRequest request;
  const types::UnitContext *ctx = nullptr;
  size_t unit = 0;
};

// Non-hole requests whose callee resolves and whose gold type is generated.
std::vector<FixtureRequest> supportedRequests(const IndexedCorpus &c);
std::vector<FixtureRequest> allRequests(const IndexedCorpus &c);

} // namespace argrec::acceptance
