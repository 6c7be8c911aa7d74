// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/interface/stats.hpp"

#include "argrec/common.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/features/parasim.hpp"
#include "argrec/interface/match.hpp"
#include "argrec/typesys/context.hpp"
#include "argrec/typesys/expected.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

using nlohmann::json;

namespace argrec::interface {

void Distribution::add(const std::string &key, int64_t n) {
  total += n;
  for (auto &[k, c] : counts)
    if (k == key) {
      c += n;
      return;
    }
  counts.emplace_back(key, n);
}

double StatsReport::usageUniqueness() const {
  return usages ? static_cast<double>(uniqueUsages) / static_cast<double>(usages) : 0.0;
}

double StatsReport::argumentUniqueness() const {
  return usages ? static_cast<double>(uniqueArguments) / static_cast<double>(usages) : 0.0;
}

namespace {

std::string binLabel(int b) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "[%.1f,%.1f%c", b / 10.0, (b + 1) / 10.0, b == 9 ? ']' : ')');
  return buf;
}

} // namespace

StatsReport corpusStats(const std::vector<const corpus::CompilationUnit *> &units,
                        const std::vector<std::string> &projects,
                        const types::TypeIndex &index) {
  if (units.empty())
    throw ContractViolation("corpusStats needs at least one unit");
  StatsReport rep;
  rep.units = static_cast<int64_t>(units.size());
  for (int t = 0; t < corpus::kNumExprTypes; ++t)
    rep.exprTypes.counts.emplace_back(
        std::string(corpus::exprTypeName(static_cast<corpus::ExprType>(t))), 0);
  for (int b = 0; b < 10; ++b)
    rep.parasim.counts.emplace_back(binLabel(b), 0);

  std::vector<std::string> usageKeys, argKeys;
  std::map<std::string, int64_t> expected;
  for (size_t ui = 0; ui < units.size(); ++ui) {
    const auto &unit = *units[ui];
    const std::string project = ui < projects.size() ? projects[ui] : std::string();
    types::UnitContext ctx(unit, index);
    for (const auto &r : corpus::extractRequests(unit, ctx)) {
      if (r.isHole())
        continue;
      ++rep.usages;
      rep.exprTypes.add(std::string(corpus::exprTypeName(r.gold->type)));
      std::string arg = plainGold(r.gold->text, r.gold->type).text;

      auto site = ctx.siteFor(unit.calls[r.callIndex], r.location);
      auto info = ctx.resolveCall(*r.call, site);
      std::string calleeKey = r.callee;
      std::string origin = "unresolved";
      if (info.resolved && !info.overloads.empty()) {
        const auto *m = info.overloads.front();
        calleeKey = m->declaredIn + "#" + m->name;
        const types::TypeEntry *e = index.find(m->declaredIn);
        origin = e && e->source == types::TypeSource::Project && e->project == project
                     ? "intra"
                     : "inter";
      }
      rep.origins.add(origin);
      usageKeys.push_back(arg + '\x1f' + calleeKey + '\x1f' + std::to_string(r.pos));
      argKeys.push_back(arg);

      auto exp = types::expectedTypes(info, r.pos);
      if (exp.empty())
        ++expected["<unresolved>"];
      else if (exp.types.size() > 1)
        ++expected["<ambiguous>"];
      else
        ++expected[exp.types.front().type];

      if (!exp.empty()) {
        double best = 0.0;
        for (const auto &t : exp.types)
          for (const auto &p : t.paramNames)
            best = std::max(best, features::parasim(arg, p));
        int bin = std::min(9, static_cast<int>(best * 10.0));
        rep.parasim.add(binLabel(bin));
      }
    }
  }
  // Most frequent expected types first; ties by name.
  std::vector<std::pair<std::string, int64_t>> ex(expected.begin(), expected.end());
  std::stable_sort(ex.begin(), ex.end(),
                   [](const auto &a, const auto &b) { return a.second > b.second; });
  for (const auto &[k, n] : ex)
    rep.expectedTypes.add(k, n);

  auto singles = [](const std::vector<std::string> &keys) {
    std::unordered_map<std::string, int64_t> freq;
    for (const auto &k : keys)
      ++freq[k];
    int64_t n = 0;
    for (const auto &k : keys)
      n += freq[k] == 1;
    return n;
  };
  rep.uniqueUsages = singles(usageKeys);
  rep.uniqueArguments = singles(argKeys);
  return rep;
}

namespace {

json distJson(const Distribution &d) {
  json j = json::array();
  for (size_t i = 0; i < d.counts.size(); ++i)
    j.push_back({{"key", d.counts[i].first}, {"count", d.counts[i].second}, {"share", d.share(i)}});
  return j;
}

std::string csvField(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string distCsv(const Distribution &d, const std::string &keyName) {
  std::ostringstream ss;
  ss.precision(17);
  ss << keyName << ",count,share\n";
  for (size_t i = 0; i < d.counts.size(); ++i)
    ss << csvField(d.counts[i].first) << ',' << d.counts[i].second << ',' << d.share(i) << '\n';
  return ss.str();
}

} // namespace

std::string statsJson(const StatsReport &r) {
  json j;
  j["schema"] = "argrec-stats-v1";
  j["units"] = r.units;
  j["usages"] = r.usages;
  j["expr_types"] = distJson(r.exprTypes);
  j["expected_types"] = distJson(r.expectedTypes);
  j["callee_origin"] = distJson(r.origins);
  j["parasim_histogram"] = distJson(r.parasim);
  j["uniqueness"] = {{"unique_usages", r.uniqueUsages},
                     {"unique_arguments", r.uniqueArguments},
                     {"usage_uniqueness", r.usageUniqueness()},
                     {"argument_uniqueness", r.argumentUniqueness()}};
  return j.dump(2) + "\n";
}

std::map<std::string, std::string> statsCsvs(const StatsReport &r) {
  return {{"expr_types.csv", distCsv(r.exprTypes, "expr_type")},
          {"expected_types.csv", distCsv(r.expectedTypes, "expected_type")},
          {"callee_origin.csv", distCsv(r.origins, "origin")},
          {"parasim_histogram.csv", distCsv(r.parasim, "bin")}};
}

std::string statsSummary(const StatsReport &r) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "%lld units, %lld argument usages; unique usages %.1f%%, unique arguments %.1f%%",
                static_cast<long long>(r.units), static_cast<long long>(r.usages),
                100.0 * r.usageUniqueness(), 100.0 * r.argumentUniqueness());
  return buf;
}

} // namespace argrec::interface
