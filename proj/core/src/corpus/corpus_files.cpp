// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/corpus_files.hpp"

#include "argrec/common.hpp"
#include "argrec/corpus/parser.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace fs = std::filesystem;

namespace argrec::corpus {

uint64_t contentHash(std::string_view text) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hashHex(uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SourceFile readSourceFile(const std::string &absPath, const std::string &displayPath,
                          const std::string &project) {
  std::ifstream in(absPath, std::ios::binary);
  if (!in)
    throw Error("cannot read " + absPath);
  std::ostringstream ss;
  ss << in.rdbuf();
  SourceFile f;
  f.path = displayPath;
  f.project = project;
  f.absPath = absPath;
  f.content = ss.str();
  f.hash = contentHash(f.content);
  return f;
}

namespace {

std::string trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

} // namespace

std::vector<SourceFile> readManifest(const std::string &manifestPath) {
  std::ifstream in(manifestPath);
  if (!in)
    throw Error("cannot read corpus manifest " + manifestPath);
  fs::path base = fs::path(manifestPath).parent_path();
  std::vector<SourceFile> out;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#')
      continue;
    fs::path root = base / line;
    if (!fs::is_directory(root))
      throw Error("project root " + root.string() + " listed in " + manifestPath +
                  " is not a directory");
    std::string project = fs::path(line).lexically_normal().filename().string();
    if (project.empty())
      project = fs::path(line).lexically_normal().parent_path().filename().string();
    std::vector<fs::path> files;
    for (const auto &e : fs::recursive_directory_iterator(root))
      if (e.is_regular_file() && e.path().extension() == ".java")
        files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto &p : files) {
      std::string display = fs::relative(p, base).lexically_normal().generic_string();
      out.push_back(readSourceFile(p.string(), display, project));
    }
  }
  return out;
}

Split readSplit(const std::string &splitPath) {
  std::ifstream in(splitPath);
  if (!in)
    throw Error("cannot read split file " + splitPath);
  fs::path base = fs::path(splitPath).parent_path();
  Split s;
  std::set<std::string> trainPaths, testPaths;
  std::string line;
  size_t lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    line = trim(line);
    if (line.empty() || line[0] == '#')
      continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw Error(splitPath + ":" + std::to_string(lineNo) + ": expected `train|test<TAB>path`");
    std::string side = line.substr(0, tab);
    std::string rel = fs::path(trim(line.substr(tab + 1))).lexically_normal().generic_string();
    if (side != "train" && side != "test")
      throw Error(splitPath + ":" + std::to_string(lineNo) + ": unknown side '" + side + "'");
    std::string project = fs::path(rel).begin()->string();
    auto f = readSourceFile((base / rel).string(), rel, project);
    if (side == "train") {
      trainPaths.insert(rel);
      s.train.push_back(std::move(f));
    } else {
      testPaths.insert(rel);
      s.test.push_back(std::move(f));
    }
  }
  for (const auto &p : testPaths)
    if (trainPaths.count(p))
      throw Error("split error: " + p + " is listed as both train and test");
  return s;
}

LoadedCorpus parseFiles(std::vector<SourceFile> files) {
  LoadedCorpus c;
  for (auto &f : files) {
    try {
      auto unit = parseUnit(f.content, f.path);
      c.units.push_back(std::move(unit));
      c.projects.push_back(f.project);
      c.files.push_back(std::move(f));
    } catch (const ParseError &e) {
      c.errors.push_back(e.what());
    }
  }
  return c;
}

} // namespace argrec::corpus
