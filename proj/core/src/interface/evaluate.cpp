// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/interface/evaluate.hpp"

#include "argrec/common.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/interface/match.hpp"
#include "argrec/lm/lm_tokens.hpp"
#include "argrec/pipeline/recommender.hpp"
#include "argrec/typesys/context.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include <json.hpp>

using nlohmann::json;

namespace argrec::interface {

std::string_view scenarioName(Scenario s) {
  switch (s) {
  case Scenario::Static:
    return "static";
  case Scenario::Dynamic:
    return "dynamic";
  case Scenario::Maintenance:
    return "maintenance";
  }
  return "static";
}

std::optional<Scenario> scenarioFromName(std::string_view name) {
  for (auto s : {Scenario::Static, Scenario::Dynamic, Scenario::Maintenance})
    if (scenarioName(s) == name)
      return s;
  return std::nullopt;
}

namespace {

std::string calleeOrigin(const corpus::ArRequest &r, const types::UnitContext &ctx,
                         const std::string &project) {
  auto site = ctx.siteFor(ctx.unit().calls[r.callIndex], r.location);
  auto info = ctx.resolveCall(*r.call, site);
  if (!info.resolved || info.overloads.empty())
    return "unresolved";
  const types::TypeEntry *e = ctx.index().find(info.overloads.front()->declaredIn);
  if (e && e->source == types::TypeSource::Project && e->project == project)
    return "intra";
  return "inter";
}

std::string joinSpaced(const std::vector<std::string> &toks) {
  std::string s;
  for (const auto &t : toks) {
    if (!s.empty())
      s += ' ';
    s += t;
  }
  return s;
}

void checkOverlap(const Bundle &b, const std::vector<corpus::SourceFile> &test) {
  std::map<std::string, std::string> trained;
  for (const auto &f : b.files)
    trained.emplace(f.hash, f.path);
  for (const auto &f : test) {
    auto it = trained.find(corpus::hashHex(f.hash));
    if (it != trained.end())
      throw Error("split error: test file " + f.path + " overlaps training file " + it->second);
  }
}

} // namespace

EvalReport evaluate(Bundle &bundle, const std::vector<corpus::SourceFile> &testFiles,
                    const EvalOptions &opts) {
  checkOverlap(bundle, testFiles);
  EvalReport rep;
  rep.scenario = opts.scenario;
  rep.method = opts.beamBaseline ? "beam" : "pipeline";
  rep.timing = opts.timing;
  pipeline::PipelineConfig cfg = opts.cfg ? *opts.cfg : bundle.config;
  pipeline::validate(cfg);

  auto corpus = corpus::parseFiles(testFiles);
  for (const auto &e : corpus.errors)
    rep.warnings.push_back("skipped: " + e);
  std::vector<const corpus::CompilationUnit *> units;
  for (const auto &u : corpus.units)
    units.push_back(&u);
  auto index = indexWithUnits(bundle, units, corpus.projects);
  rep.files = units.size();

  lm::NGramModel &model = bundle.model;
  const int order = model.config().order;
  std::vector<std::vector<int>> streams;
  for (const auto &u : corpus.units)
    streams.push_back(model.vocab().encode(lm::lmTokens(u.tokens)));
  lm::CountTable all(order);
  if (opts.scenario == Scenario::Maintenance)
    for (const auto &s : streams)
      all.addStream(s);

  double latencySum = 0.0;
  size_t timed = 0;
  for (size_t fi = 0; fi < corpus.units.size(); ++fi) {
    const auto &unit = corpus.units[fi];
    const auto &file = corpus.files[fi];
    types::UnitContext ctx(unit, index, opts.strict);
    auto requests = corpus::extractRequests(unit, ctx);
    std::stable_sort(requests.begin(), requests.end(), [](const auto &a, const auto &b) {
      return a.location.offset < b.location.offset;
    });

    lm::LayerStack layers = model.stack(unit.packageName);
    lm::CountTable own(order);
    if (opts.scenario == Scenario::Maintenance) {
      own.addStream(streams[fi]);
      layers.push_back({&all, &own});
    }
    const std::string cacheKey = "evaluate:" + file.path;
    const bool cached = opts.scenario != Scenario::Static;
    size_t fed = 0;
    if (cached) {
      model.clearCache(cacheKey);
      model.updateCache(cacheKey, std::span<const int>());
      layers.push_back({model.cache(cacheKey), nullptr});
    }

    pipeline::RecommendDeps deps{&model, layers, &bundle.tables, opts.heavy};
    for (const auto &r : requests) {
      if (r.isHole())
        continue;
      if (cached) {
        size_t upto = unit.tokenIndexAt(r.location.offset);
        if (upto > fed) {
          auto ids = model.vocab().encode(lm::lmTokens(unit.tokens, fed, upto));
          model.updateCache(cacheKey, ids);
          fed = upto;
        }
      }
      RequestOutcome o;
      o.file = file.path;
      o.line = r.location.line;
      o.col = r.location.col;
      o.callee = r.callee;
      o.pos = r.pos;
      o.type = r.gold->type;
      o.supported = !r.unresolved && corpus::isSupported(o.type);
      o.origin = calleeOrigin(r, ctx, file.project);
      auto gold = canonicalizeGold(r, ctx);
      o.gold = gold.text;
      if (o.supported) {
        auto t0 = std::chrono::steady_clock::now();
        if (opts.beamBaseline) {
          const auto &span = r.gold->expr->span;
          std::string goldToks = joinSpaced(lm::lmTokens(
              unit.tokens, unit.tokenIndexAt(span.begin.offset), unit.tokenIndexAt(span.end.offset)));
          auto list = pipeline::beamBaselineRecommend(r, kReportedK.back(), model, layers,
                                                      opts.beamWidth, opts.beamMaxLen);
          o.candidates = list.items.size();
          for (size_t i = 0; i < list.items.size(); ++i)
            if (list.items[i].cand.rendered == goldToks) {
              o.rank = static_cast<int>(i + 1);
              break;
            }
        } else {
          auto list = pipeline::recommend(r, ctx, -1, cfg, deps);
          o.candidates = list.generated;
          for (const auto &w : list.warnings)
            rep.warnings.push_back(file.path + ":" + std::to_string(o.line) + ": " + w);
          for (size_t i = 0; i < list.items.size(); ++i)
            if (matchesGold(list.items[i].cand, gold)) {
              o.rank = static_cast<int>(i + 1);
              break;
            }
        }
        if (opts.timing) {
          o.latencyMs = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
          latencySum += o.latencyMs;
          ++timed;
        }
      }
      rep.total.add(o.supported, o.rank);
      rep.byExprType[std::string(corpus::exprTypeName(o.type))].add(o.supported, o.rank);
      rep.byOrigin[o.origin].add(o.supported, o.rank);
      rep.outcomes.push_back(std::move(o));
    }
    if (cached)
      model.clearCache(cacheKey);
  }
  if (timed)
    rep.latencyMsMean = latencySum / static_cast<double>(timed);
  return rep;
}

namespace {

json countsJson(const Counts &c) {
  json j;
  j["A"] = c.a;
  j["S"] = c.s;
  json r, p, rc;
  for (size_t i = 0; i < kReportedK.size(); ++i) {
    std::string k = std::to_string(kReportedK[i]);
    r[k] = c.r[i];
    auto pr = precisionAtK(c.r[i], c.s, c.a);
    auto re = recallAtK(c.r[i], c.s, c.a);
    p[k] = pr.value;
    rc[k] = re.value;
  }
  j["R"] = r;
  j["precision"] = p;
  j["recall"] = rc;
  j["top_k_accuracy"] = rc;
  j["top_inf_accuracy"] = c.a ? static_cast<double>(c.hits) / static_cast<double>(c.a) : 0.0;
  j["hits"] = c.hits;
  j["mrr"] = c.mrr();
  if (c.s == 0)
    j["precision_undefined"] = true;
  if (c.a == 0)
    j["recall_undefined"] = true;
  return j;
}

json reportObject(const EvalReport &r) {
  json j = countsJson(r.total);
  j["schema"] = "argrec-report-v1";
  j["scenario"] = std::string(scenarioName(r.scenario));
  j["method"] = r.method;
  j["files"] = r.files;
  json bt = json::object();
  for (const auto &[k, c] : r.byExprType)
    bt[k] = countsJson(c);
  j["by_expr_type"] = bt;
  json bo = json::object();
  for (const auto &[k, c] : r.byOrigin)
    bo[k] = countsJson(c);
  j["by_origin"] = bo;
  if (r.timing)
    j["latency_ms_mean"] = r.latencyMsMean;
  j["warnings"] = r.warnings;
  return j;
}

} // namespace

std::string reportJson(const EvalReport &r) { return reportObject(r).dump(2) + "\n"; }

std::string reportsJson(const std::vector<EvalReport> &reports) {
  if (reports.size() == 1)
    return reportJson(reports.front());
  json j;
  j["schema"] = "argrec-report-v1";
  json by = json::object();
  for (const auto &r : reports)
    by[std::string(scenarioName(r.scenario))] = reportObject(r);
  j["by_scenario"] = by;
  return j.dump(2) + "\n";
}

std::string outcomesTsv(const EvalReport &r) {
  std::ostringstream ss;
  ss << "file\tline\tcol\tcallee\tpos\texpr_type\tsupported\torigin\trank\tcandidates\tgold\n";
  for (const auto &o : r.outcomes)
    ss << o.file << '\t' << o.line << '\t' << o.col << '\t' << o.callee << '\t' << o.pos << '\t'
       << corpus::exprTypeName(o.type) << '\t' << (o.supported ? 1 : 0) << '\t' << o.origin
       << '\t' << (o.rank ? std::to_string(*o.rank) : "-") << '\t' << o.candidates << '\t'
       << o.gold << '\n';
  return ss.str();
}

std::string reportSummary(const EvalReport &r) {
  const auto &c = r.total;
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%s/%s: A=%lld S=%lld top-1 %.3f top-3 %.3f top-5 %.3f top-10 %.3f MRR %.3f",
                std::string(scenarioName(r.scenario)).c_str(), r.method.c_str(),
                static_cast<long long>(c.a), static_cast<long long>(c.s),
                recallAtK(c.r[0], c.s, c.a).value, recallAtK(c.r[1], c.s, c.a).value,
                recallAtK(c.r[2], c.s, c.a).value, recallAtK(c.r[3], c.s, c.a).value, c.mrr());
  std::string s = buf;
  if (r.timing) {
    std::snprintf(buf, sizeof buf, ", mean latency %.2f ms", r.latencyMsMean);
    s += buf;
  }
  return s;
}

} // namespace argrec::interface
