// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/interface/bundle.hpp"

#include "argrec/common.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/lm/lm_tokens.hpp"
#include "argrec/typesys/context.hpp"
#include "argrec/typesys/stubs.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace argrec::interface {

lm::TokenStream unitStream(const corpus::CompilationUnit &unit) {
  return {unit.packageName, lm::lmTokens(unit.tokens)};
}

namespace {

features::RecentnessTables uniformTables(int cap) {
  features::RecentnessTables t;
  t.cap = cap;
  t.probD.assign(static_cast<size_t>(cap + 2), 1.0 / (cap + 2));
  t.probU.assign(static_cast<size_t>(cap + 3), 1.0 / (cap + 3));
  return t;
}

std::vector<features::RecentnessSample> recentnessSamples(const corpus::CompilationUnit &unit,
                                                          const types::UnitContext &ctx) {
  std::vector<features::RecentnessSample> out;
  for (const auto &r : corpus::extractRequests(unit, ctx)) {
    if (!r.gold || r.gold->type != corpus::ExprType::SimpleName || !r.gold->expr)
      continue;
    auto site = ctx.siteFor(unit.calls[r.callIndex], r.location);
    auto v = ctx.lookupVar(r.gold->expr->name, site);
    if (!v)
      continue;
    features::RecentnessSample s;
    s.createDis = features::creatingDistance(v->block, site.block, ctx.scopes());
    s.accessRec = features::accessingRecentness(v->name, r);
    out.push_back(s);
  }
  return out;
}


void writeText(const fs::path &p, const std::string &text) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out)
    throw Error("cannot write " + p.string());
  out << text;
  if (!out)
    throw Error("write failed for " + p.string());
}

std::string readText(const fs::path &p) {
  std::ifstream in(p, std::ios::binary);
  if (!in)
    throw Error("bundle is missing " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string tableText(const lm::CountTable &t) {
  std::ostringstream ss;
  t.write(ss);
  return ss.str();
}

void readTable(const fs::path &p, lm::CountTable &t) {
  std::istringstream in(readText(p));
  t.read(in);
}

json lmConfigJson(const lm::LmConfig &c) {
  return {{"order", c.order},
          {"lambda", c.lambda},
          {"layer_weight", c.layerWeight},
          {"min_count", c.minCount}};
}

lm::LmConfig lmConfigFrom(const json &j) {
  lm::LmConfig c;
  c.order = j.at("order").get<int>();
  c.lambda = j.at("lambda").get<double>();
  c.layerWeight = j.at("layer_weight").get<double>();
  c.minCount = j.at("min_count").get<int>();
  return c;
}

} // namespace

Bundle trainBundle(const corpus::LoadedCorpus &corpus, const TrainOptions &opts) {
  if (corpus.units.empty())
    throw Error("cannot train on an empty corpus");
  pipeline::validate(opts.pipeline);
  Bundle b;
  b.config = opts.pipeline;

  std::vector<lm::TokenStream> streams;
  std::vector<const corpus::CompilationUnit *> units;
  for (const auto &u : corpus.units) {
    streams.push_back(unitStream(u));
    units.push_back(&u);
  }
  b.model = lm::NGramModel::train(streams, opts.lm);
  if (opts.heavy) {
    lm::LmConfig hc = opts.lm;
    hc.order = opts.heavyOrder;
    b.heavy = lm::NGramModel::train(streams, hc);
  }

  auto index = types::buildTypeIndex(units, types::bundledStubs(), corpus.projects);
  for (const auto &w : index.warnings())
    b.warnings.push_back(w.file + ": " + w.message);
  std::vector<features::RecentnessSample> samples;
  for (const auto &u : corpus.units) {
    types::UnitContext ctx(u, index, opts.strict);
    auto s = recentnessSamples(u, ctx);
    samples.insert(samples.end(), s.begin(), s.end());
  }
  b.recentnessSamples = samples.size();
  if (samples.empty()) {
    b.tables = uniformTables(features::kDefaultBucketCap);
    b.warnings.push_back("no variable arguments in training; recentness tables are uniform");
  } else {
    b.tables = features::fitRecentnessTables(samples);
  }

  for (const auto &[name, e] : index.entries())
    if (e.source == types::TypeSource::Project)
      b.types.push_back(e);
  for (const auto &f : corpus.files)
    b.files.push_back({f.path, f.project, corpus::hashHex(f.hash)});
  return b;
}

void writeBundle(const Bundle &b, const std::string &dirPath) {
  fs::path dir(dirPath);
  fs::create_directories(dir / "counts");

  std::string vocab;
  for (const auto &t : b.model.vocab().tokens())
    vocab += t + "\n";
  writeText(dir / "vocab.txt", vocab);

  writeText(dir / "counts" / "global.txt", tableText(b.model.global()));
  json packages = json::array();
  size_t n = 0;
  for (const auto &[pkg, table] : b.model.packages()) {
    std::string file = "counts/pkg-" + std::to_string(n++) + ".txt";
    writeText(dir / file, tableText(table));
    packages.push_back({{"package", pkg}, {"counts", file}});
  }

  json rec = {{"cap", b.tables.cap}, {"probD", b.tables.probD}, {"probU", b.tables.probU},
              {"samples", b.recentnessSamples}};
  writeText(dir / "recentness.json", rec.dump(2) + "\n");

  std::vector<const types::TypeEntry *> entries;
  for (const auto &e : b.types)
    entries.push_back(&e);
  writeText(dir / "types.json", types::writeStubs(entries, "training"));

  json heavy = nullptr;
  if (b.heavy) {
    fs::create_directories(dir / "heavy");
    writeText(dir / "heavy" / "global.txt", tableText(b.heavy->global()));
    heavy = {{"lm", lmConfigJson(b.heavy->config())}, {"counts", "heavy/global.txt"}};
  }

  json selective = json::array();
  for (auto t : b.config.selective)
    selective.push_back(std::string(corpus::exprTypeName(t)));
  json files = json::array();
  for (const auto &f : b.files)
    files.push_back({{"path", f.path}, {"project", f.project}, {"hash", f.hash}});

  json m;
  m["format"] = "argrec-bundle";
  m["version"] = kBundleVersion;
  m["schemas"] = {{"counts", std::string(kCountsFormat)},
                  {"types", "argrec-stubs-v1"},
                  {"recentness", "argrec-recentness-v1"},
                  {"request", "argrec-request-v1"},
                  {"response", "argrec-response-v1"},
                  {"report", "argrec-report-v1"}};
  m["lm"] = lmConfigJson(b.model.config());
  m["vocab"] = {{"file", "vocab.txt"}, {"size", b.model.vocab().size()}};
  m["counts"] = {{"global", "counts/global.txt"}, {"packages", packages}};
  m["recentness"] = "recentness.json";
  m["types"] = "types.json";
  m["heavy"] = heavy;
  m["pipeline"] = {{"rt", b.config.rt},
                   {"selective", selective},
                   {"parasim_floor", b.config.parasimFloor},
                   {"depth", b.config.depth},
                   {"rules", b.config.rules},
                   {"static_features", b.config.staticFeatures},
                   {"object_mapping", b.config.objectMapping}};
  m["training_files"] = files;
  writeText(dir / "manifest.json", m.dump(2) + "\n");
}

Bundle loadBundle(const std::string &dirPath) {
  fs::path dir(dirPath);
  if (!fs::is_directory(dir))
    throw Error("bundle directory " + dirPath + " does not exist");
  json m;
  try {
    m = json::parse(readText(dir / "manifest.json"));
    if (m.value("format", "") != "argrec-bundle")
      throw Error("not an argrec bundle: " + dirPath);
    if (m.at("version").get<int>() != kBundleVersion)
      throw Error("unsupported bundle version in " + dirPath);
    if (m.at("schemas").at("counts").get<std::string>() != kCountsFormat)
      throw Error("unsupported count-table format in " + dirPath);

    Bundle b;
    std::vector<std::string> tokens;
    std::istringstream vin(readText(dir / m.at("vocab").at("file").get<std::string>()));
    std::string line;
    while (std::getline(vin, line))
      tokens.push_back(line);
    auto vocab = lm::Vocabulary::fromTokens(tokens);
    b.model = lm::NGramModel(lmConfigFrom(m.at("lm")), vocab);
    readTable(dir / m.at("counts").at("global").get<std::string>(), b.model.mutableGlobal());
    for (const auto &p : m.at("counts").at("packages"))
      readTable(dir / p.at("counts").get<std::string>(),
                b.model.package(p.at("package").get<std::string>()));

    if (!m.at("heavy").is_null()) {
      b.heavy.emplace(lmConfigFrom(m.at("heavy").at("lm")), vocab);
      readTable(dir / m.at("heavy").at("counts").get<std::string>(), b.heavy->mutableGlobal());
    }

    json rec = json::parse(readText(dir / m.at("recentness").get<std::string>()));
    b.tables.cap = rec.at("cap").get<int>();
    b.tables.probD = rec.at("probD").get<std::vector<double>>();
    b.tables.probU = rec.at("probU").get<std::vector<double>>();
    b.recentnessSamples = rec.value("samples", size_t{0});
    if (b.tables.probD.size() != static_cast<size_t>(b.tables.cap + 2) ||
        b.tables.probU.size() != static_cast<size_t>(b.tables.cap + 3))
      throw Error("recentness table sizes do not match the bucket cap");

    b.types = types::parseStubs(readText(dir / m.at("types").get<std::string>()), "types.json");

    const json &p = m.at("pipeline");
    b.config.rt = p.at("rt").get<int>();
    b.config.selective.clear();
    for (const auto &s : p.at("selective")) {
      auto t = corpus::exprTypeFromName(s.get<std::string>());
      if (!t)
        throw Error("unknown expression type in selective set: " + s.get<std::string>());
      b.config.selective.insert(*t);
    }
    b.config.parasimFloor = p.at("parasim_floor").get<double>();
    b.config.depth = p.at("depth").get<int>();
    b.config.rules = p.at("rules").get<bool>();
    b.config.staticFeatures = p.at("static_features").get<bool>();
    b.config.objectMapping = p.at("object_mapping").get<bool>();
    pipeline::validate(b.config);

    for (const auto &f : m.at("training_files"))
      b.files.push_back({f.at("path").get<std::string>(), f.at("project").get<std::string>(),
                         f.at("hash").get<std::string>()});
    return b;
  } catch (const json::exception &e) {
    throw Error("malformed bundle " + dirPath + ": " + e.what());
  }
}

types::TypeIndex indexWithUnits(const Bundle &b,
                                const std::vector<const corpus::CompilationUnit *> &units,
                                const std::vector<std::string> &projects) {
  std::set<std::string, std::less<>> declared;
  for (const auto *u : units)
    for (const auto &t : u->types)
      declared.insert(t.qualifiedName);
  std::vector<types::TypeEntry> extra;
  for (const auto &e : b.types)
    if (!declared.count(e.qualifiedName))
      extra.push_back(e);
  for (auto &e : types::bundledStubs())
    extra.push_back(std::move(e));
  return types::buildTypeIndex(units, std::move(extra), projects);
}

} // namespace argrec::interface
