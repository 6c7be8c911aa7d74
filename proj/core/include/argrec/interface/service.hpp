// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/interface/bundle.hpp"
#include "argrec/pipeline/heavy_scorer.hpp"
#include "argrec/pipeline/recommender.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace argrec::interface {

struct ServiceOptions {
  std::optional<pipeline::PipelineConfig> cfg; // defaults to the bundle's
  bool strict = false;
  pipeline::HeavyScorer *heavy = nullptr;
  int defaultK = 10;
};

struct Recommendation {
  corpus::ArRequest request;
  pipeline::RankedList list;
};

// Recommendations against a loaded bundle. The file cache of a path is
// rebuilt from the source prefix on every request, so identical requests
// give identical answers.
class Service {
public:
  Service(Bundle &bundle, ServiceOptions opts = {});

  // Request document: {"id", "file" | "text" (+ optional "path"),
  // "line"+"col" | "callee"+"pos", "k"}. Never throws; failures become
  // {"id", "error": {"code", "message"}}.
  std::string handle(const std::string &line);

  // Parses `source` and recommends for the argument slot at the cursor
  // (when callee is empty) or for `callee`'s argument `pos`. Throws Error
  // when no slot matches.
  std::string recommendJson(const std::string &source, const std::string &path, uint32_t line,
                            uint32_t col, const std::string &callee, int pos, int k,
                            const std::string &idJson = "null");

  // Reads request lines until EOF, writing one response line each.
  void serve(std::istream &in, std::ostream &out);

private:
  Bundle &bundle_;
  ServiceOptions opts_;
};

} // namespace argrec::interface
