// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "argrec/corpus/ast.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace argrec::corpus {

struct SourceFile {
  std::string path;    // as listed, relative to the manifest/split directory
  std::string project; // project root name
  std::string absPath;
  std::string content;
  uint64_t hash = 0; // FNV-1a of content
};

uint64_t contentHash(std::string_view text);
std::string hashHex(uint64_t h);

// Manifest: one project root per line, relative to the manifest's
// directory; `#` starts a comment. Every `.java` file below a root is
// included, sorted by path.
std::vector<SourceFile> readManifest(const std::string &manifestPath);

struct Split {
  std::vector<SourceFile> train;
  std::vector<SourceFile> test;
};

// Lines are `train<TAB>path` or `test<TAB>path`, relative to the split
// file's directory; the project is the first path component. Throws Error
// when a path is listed on both sides.
Split readSplit(const std::string &splitPath);

SourceFile readSourceFile(const std::string &absPath, const std::string &displayPath,
                          const std::string &project);

struct LoadedCorpus {
  std::vector<SourceFile> files;
  std::vector<CompilationUnit> units; // parallel to files
  std::vector<std::string> projects;  // parallel to files
  std::vector<std::string> errors;    // files that failed to parse (skipped)
};

LoadedCorpus parseFiles(std::vector<SourceFile> files);

} // namespace argrec::corpus
