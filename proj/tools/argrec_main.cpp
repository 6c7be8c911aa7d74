// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

// argrec command-line tool: train, recommend, evaluate, stats, serve, heavy.
// Results go to stdout as JSON; a one-line human summary goes to stderr.

#include "argrec/common.hpp"
#include "argrec/corpus/corpus_files.hpp"
#include "argrec/interface/bundle.hpp"
#include "argrec/interface/evaluate.hpp"
#include "argrec/interface/service.hpp"
#include "argrec/interface/stats.hpp"
#include "argrec/pipeline/heavy_scorer.hpp"
#include "argrec/typesys/stubs.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace argrec;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

class UsageError : public Error {
public:
  using Error::Error;
};

int fail(const std::string &code, const std::string &message, int exitCode) {
  std::cout << json{{"error", {{"code", code}, {"message", message}}}}.dump() << std::endl;
  std::cerr << "argrec: " << message << std::endl;
  return exitCode;
}

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int heavyTimeoutMs() {
  if (const char *v = std::getenv("ARGREC_HEAVY_TIMEOUT_MS")) {
    char *end = nullptr;
    long ms = std::strtol(v, &end, 10);
    if (end && *end == '\0' && ms > 0)
      return static_cast<int>(ms);
    throw UsageError("ARGREC_HEAVY_TIMEOUT_MS must be a positive integer");
  }
  return pipeline::kDefaultHeavyTimeoutMs;
}

interface::Bundle requireBundle(const std::string &dir) {
  if (dir.empty())
    throw UsageError("no bundle given (use --bundle or ARGREC_BUNDLE)");
  if (!fs::is_directory(dir))
    throw UsageError("bundle directory " + dir + " does not exist");
  return interface::loadBundle(dir);
}

// Shared pipeline flags.
struct PipelineFlags {
  bool strict = false;
  bool objectMapping = false;
  bool noRules = false;
  int rt = 0;
  bool heavy = false;

  void add(CLI::App *cmd) {
    cmd->add_flag("--strict-compat", strict, "Identity, subtyping and null only");
    cmd->add_flag("--object-mapping", objectMapping, "Map Object parameters to type arguments");
    cmd->add_flag("--no-rules", noRules, "Disable the candidate reduction rules");
    cmd->add_option("--rt", rt, "Reducing threshold (default: from the bundle)");
    cmd->add_flag("--heavy", heavy, "Score selected candidates with the bundle's heavy model");
  }

  pipeline::PipelineConfig apply(pipeline::PipelineConfig cfg) const {
    if (rt > 0)
      cfg.rt = rt;
    if (noRules)
      cfg.rules = false;
    if (objectMapping)
      cfg.objectMapping = true;
    pipeline::validate(cfg);
    return cfg;
  }

  // The heavy model runs in a child process speaking the line protocol.
  std::unique_ptr<pipeline::HeavyScorer> scorer(const interface::Bundle &b,
                                                const std::string &bundleDir) const {
    if (!heavy)
      return nullptr;
    if (!b.heavy)
      throw UsageError("bundle has no heavy model (train with --heavy)");
    std::string self = fs::read_symlink("/proc/self/exe").string();
    return std::make_unique<pipeline::ProcessHeavyScorer>(
        std::vector<std::string>{self, "heavy", "--bundle", bundleDir}, heavyTimeoutMs());
  }
};

int runTrain(const std::string &manifest, const std::string &split, const std::string &out,
             const interface::TrainOptions &opts) {
  if (manifest.empty() == split.empty())
    throw UsageError("train needs exactly one of --corpus or --split");
  std::vector<corpus::SourceFile> files;
  if (!manifest.empty()) {
    if (!fs::exists(manifest))
      throw UsageError("corpus manifest " + manifest + " does not exist");
    files = corpus::readManifest(manifest);
  } else {
    if (!fs::exists(split))
      throw UsageError("split file " + split + " does not exist");
    files = corpus::readSplit(split).train;
  }
  auto loaded = corpus::parseFiles(std::move(files));
  auto bundle = interface::trainBundle(loaded, opts);
  interface::writeBundle(bundle, out);
  json j;
  j["bundle"] = out;
  j["files"] = loaded.units.size();
  j["skipped"] = loaded.errors;
  j["vocab"] = bundle.model.vocab().size();
  j["packages"] = bundle.model.packages().size();
  j["types"] = bundle.types.size();
  j["recentness_samples"] = bundle.recentnessSamples;
  j["heavy"] = bundle.heavy.has_value();
  j["warnings"] = bundle.warnings;
  std::cout << j.dump(2) << std::endl;
  std::cerr << "trained on " << loaded.units.size() << " files (" << loaded.errors.size()
            << " skipped), vocabulary " << bundle.model.vocab().size() << ", bundle " << out
            << std::endl;
  return 0;
}

int runRecommend(const std::string &bundleDir, const std::string &file, int line, int col,
                 const std::string &callee, int pos, int k, const PipelineFlags &flags) {
  auto bundle = requireBundle(bundleDir);
  if (file.empty())
    throw UsageError("recommend needs --file");
  if (callee.empty() && (line < 1 || col < 1))
    throw UsageError("recommend needs --line and --col, or --callee and --pos");
  auto heavy = flags.scorer(bundle, bundleDir);
  interface::ServiceOptions so;
  so.cfg = flags.apply(bundle.config);
  so.strict = flags.strict;
  so.heavy = heavy.get();
  interface::Service service(bundle, so);
  std::string out = service.recommendJson(readFile(file), file, static_cast<uint32_t>(line),
                                          static_cast<uint32_t>(col), callee, pos, k);
  auto doc = json::parse(out);
  std::cout << doc.dump(2) << std::endl;
  if (doc.contains("error")) {
    std::cerr << "argrec: " << doc["error"]["message"].get<std::string>() << std::endl;
    return kExitRuntime;
  }
  std::cerr << doc["candidates"].size() << " candidates for argument "
            << doc["request"]["pos"] << " of " << doc["request"]["callee"].get<std::string>();
  if (!doc["candidates"].empty())
    std::cerr << "; top: " << doc["candidates"][0]["rendered"].get<std::string>();
  std::cerr << std::endl;
  return 0;
}

int runEvaluate(const std::string &bundleDir, const std::string &split,
                const std::string &scenario, const std::string &baseline, bool timing,
                const std::string &details, const PipelineFlags &flags) {
  auto bundle = requireBundle(bundleDir);
  if (split.empty() || !fs::exists(split))
    throw UsageError("evaluate needs an existing --split file");
  std::vector<interface::Scenario> scenarios;
  if (scenario == "all") {
    scenarios = {interface::Scenario::Static, interface::Scenario::Dynamic,
                 interface::Scenario::Maintenance};
  } else if (auto s = interface::scenarioFromName(scenario)) {
    scenarios = {*s};
  } else {
    throw UsageError("unknown scenario '" + scenario + "'");
  }
  if (baseline != "none" && baseline != "beam")
    throw UsageError("unknown baseline '" + baseline + "'");
  auto testFiles = corpus::readSplit(split).test;
  auto heavy = flags.scorer(bundle, bundleDir);
  std::vector<interface::EvalReport> reports;
  std::string tsv;
  for (auto s : scenarios) {
    interface::EvalOptions opts;
    opts.scenario = s;
    opts.cfg = flags.apply(bundle.config);
    opts.strict = flags.strict;
    opts.timing = timing;
    opts.beamBaseline = baseline == "beam";
    opts.heavy = heavy.get();
    reports.push_back(interface::evaluate(bundle, testFiles, opts));
    tsv += interface::outcomesTsv(reports.back());
  }
  if (!details.empty()) {
    std::ofstream out(details, std::ios::binary | std::ios::trunc);
    if (!out)
      throw Error("cannot write " + details);
    out << tsv;
  }
  std::cout << interface::reportsJson(reports);
  for (const auto &r : reports)
    std::cerr << interface::reportSummary(r) << std::endl;
  return 0;
}

int runStats(const std::string &manifest, const std::string &outDir) {
  if (manifest.empty() || !fs::exists(manifest))
    throw UsageError("stats needs an existing --corpus manifest");
  auto loaded = corpus::parseFiles(corpus::readManifest(manifest));
  if (loaded.units.empty())
    throw Error("no parseable files in " + manifest);
  std::vector<const corpus::CompilationUnit *> units;
  for (const auto &u : loaded.units)
    units.push_back(&u);
  auto index = types::buildTypeIndex(units, types::bundledStubs(), loaded.projects);
  auto rep = interface::corpusStats(units, loaded.projects, index);
  std::string doc = interface::statsJson(rep);
  if (!outDir.empty()) {
    fs::create_directories(outDir);
    std::ofstream(fs::path(outDir) / "stats.json", std::ios::binary) << doc;
    for (const auto &[name, csv] : interface::statsCsvs(rep))
      std::ofstream(fs::path(outDir) / name, std::ios::binary) << csv;
  }
  std::cout << doc;
  std::cerr << interface::statsSummary(rep) << std::endl;
  return 0;
}

int runServe(const std::string &bundleDir, const PipelineFlags &flags) {
  auto bundle = requireBundle(bundleDir);
  auto heavy = flags.scorer(bundle, bundleDir);
  interface::ServiceOptions so;
  so.cfg = flags.apply(bundle.config);
  so.strict = flags.strict;
  so.heavy = heavy.get();
  interface::Service service(bundle, so);
  std::cerr << "argrec: serving " << bundleDir << std::endl;
  service.serve(std::cin, std::cout);
  return 0;
}

int runHeavy(const std::string &bundleDir) {
  auto bundle = requireBundle(bundleDir);
  if (!bundle.heavy)
    throw UsageError("bundle has no heavy model (train with --heavy)");
  pipeline::ModelHeavyScorer scorer(*bundle.heavy);
  std::string line;
  while (std::getline(std::cin, line)) {
    std::cout << pipeline::handleHeavyLine(scorer, line) << '\n';
    std::cout.flush();
  }
  return 0;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"argrec: argument recommendation for Java method calls"};
  app.require_subcommand(1);

  std::string manifest, split, out, bundleDir, file, callee, scenario = "static",
                                                      baseline = "none", details, statsOut;
  int line = 0, col = 0, pos = 1, k = 10;
  bool timing = false;
  interface::TrainOptions trainOpts;
  PipelineFlags flags;

  auto *train = app.add_subcommand("train", "Train a model bundle");
  train->add_option("--corpus", manifest, "Corpus manifest (one project root per line)");
  train->add_option("--split", split, "Split file; its train lines are used");
  train->add_option("--out", out, "Bundle directory to write")->required();
  train->add_option("--order", trainOpts.lm.order, "n-gram order")->capture_default_str();
  train->add_option("--lambda", trainOpts.lm.lambda, "Interpolation weight")
      ->capture_default_str();
  train->add_option("--min-count", trainOpts.lm.minCount, "Vocabulary cutoff")
      ->capture_default_str();
  train->add_option("--rt", trainOpts.pipeline.rt, "Reducing threshold")->capture_default_str();
  train->add_flag("--heavy", trainOpts.heavy, "Also train the order-10 heavy model");

  auto addBundle = [&](CLI::App *cmd) {
    cmd->add_option("--bundle", bundleDir, "Model bundle directory")->envname("ARGREC_BUNDLE");
  };

  auto *rec = app.add_subcommand("recommend", "Rank arguments for one call slot");
  addBundle(rec);
  rec->add_option("--file", file, "Java source file");
  rec->add_option("--line", line, "1-based cursor line");
  rec->add_option("--col", col, "1-based cursor column");
  rec->add_option("--callee", callee, "Callee name (instead of a cursor)");
  rec->add_option("--pos", pos, "1-based argument position with --callee");
  rec->add_option("-k", k, "Number of results")->capture_default_str();
  flags.add(rec);

  auto *eval = app.add_subcommand("evaluate", "Evaluate on the test side of a split");
  addBundle(eval);
  eval->add_option("--split", split, "Split file (train/test lines)");
  eval->add_option("--scenario", scenario, "static, dynamic, maintenance or all")
      ->capture_default_str();
  eval->add_option("--baseline", baseline, "none or beam")->capture_default_str();
  eval->add_flag("--timing", timing, "Report mean recommendation latency");
  eval->add_option("--details", details, "Write per-request outcomes (TSV) here");
  flags.add(eval);

  auto *stats = app.add_subcommand("stats", "Argument usage statistics of a corpus");
  stats->add_option("--corpus", manifest, "Corpus manifest");
  stats->add_option("--out", statsOut, "Directory for stats.json and CSV files");

  auto *serve = app.add_subcommand("serve", "Line-delimited JSON service on stdin/stdout");
  addBundle(serve);
  flags.add(serve);

  auto *heavy = app.add_subcommand("heavy", "Heavy-model scorer process (line protocol)");
  addBundle(heavy);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    return fail("usage", e.what(), kExitUsage);
  }

  try {
    if (train->parsed())
      return runTrain(manifest, split, out, trainOpts);
    if (rec->parsed())
      return runRecommend(bundleDir, file, line, col, callee, pos, k, flags);
    if (eval->parsed())
      return runEvaluate(bundleDir, split, scenario, baseline, timing, details, flags);
    if (stats->parsed())
      return runStats(manifest, statsOut);
    if (serve->parsed())
      return runServe(bundleDir, flags);
    if (heavy->parsed())
      return runHeavy(bundleDir);
  } catch (const UsageError &e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const ContractViolation &e) {
    return fail("usage", e.what(), kExitUsage);
  } catch (const IndexError &e) {
    return fail("index", e.what(), kExitRuntime);
  } catch (const ParseError &e) {
    return fail("parse", e.what(), kExitRuntime);
  } catch (const std::exception &e) {
    return fail("error", e.what(), kExitRuntime);
  }
  return kExitUsage;
}
