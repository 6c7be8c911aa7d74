// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "fixture.hpp"

#include "argrec/typesys/stubs.hpp"

namespace argrec::acceptance {

std::unique_ptr<IndexedCorpus> loadIndexed(const std::vector<corpus::SourceFile> &files) {
  auto c = std::make_unique<IndexedCorpus>();
  c->corpus = corpus::parseFiles(files);
  std::vector<const corpus::CompilationUnit *> units;
  for (const auto &u : c->corpus.units)
    units.push_back(&u);
  c->index = types::buildTypeIndex(units, types::bundledStubs(), c->corpus.projects);
  for (const auto &u : c->corpus.units)
    c->contexts.push_back(std::make_unique<types::UnitContext>(u, c->index));
  return c;
}

std::vector<FixtureRequest> allRequests(const IndexedCorpus &c) {
  std::vector<FixtureRequest> out;
  for (size_t i = 0; i < c.corpus.units.size(); ++i)
    for (auto &r : corpus::extractRequests(c.corpus.units[i], *c.contexts[i]))
      out.push_back({std::move(r), c.contexts[i].get(), i});
  return out;
}

std::vector<FixtureRequest> supportedRequests(const IndexedCorpus &c) {
  std::vector<FixtureRequest> out;
  for (auto &fr : allRequests(c))
    if (!fr.request.isHole() && !fr.request.unresolved &&
        corpus::isSupported(fr.request.gold->type))
      out.push_back(std::move(fr));
  return out;
}

} // namespace argrec::acceptance
