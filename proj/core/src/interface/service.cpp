// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/interface/service.hpp"

#include "argrec/common.hpp"
#include "argrec/corpus/parser.hpp"
#include "argrec/corpus/requests.hpp"
#include "argrec/lm/lm_tokens.hpp"
#include "argrec/pipeline/reduction.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

using nlohmann::json;

namespace argrec::interface {

namespace {

class RequestError : public Error {
public:
  RequestError(std::string code, const std::string &msg) : Error(msg), code_(std::move(code)) {}
  const std::string &code() const { return code_; }

private:
  std::string code_;
};

json errorDoc(const json &id, const std::string &code, const std::string &message) {
  return {{"id", id}, {"error", {{"code", code}, {"message", message}}}};
}

std::string readFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw RequestError("io", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json optionalInt(const std::optional<int> &v) { return v ? json(*v) : json(nullptr); }

json candidateJson(const pipeline::ScoredCandidate &s) {
  json d;
  d["light_prob"] = s.lightProb;
  d["prob"] = s.prob;
  d["heavy"] = s.heavy;
  d["parasim"] = s.features.parasimRaw;
  d["parasim_norm"] = s.features.parasimNorm;
  d["recent"] = s.recent ? json(*s.recent) : json(nullptr);
  d["create_dis"] = optionalInt(s.features.createDis);
  d["access_rec"] = optionalInt(s.features.accessRec);
  d["score_lr"] = s.scoreLr;
  d["rules"] = pipeline::ruleNames(s.rules);
  return {{"rendered", s.cand.rendered},
          {"exprType", std::string(corpus::exprTypeName(s.cand.exprType))},
          {"resultType", s.cand.resultType},
          {"score", s.score},
          {"diagnostics", d}};
}

} // namespace

Service::Service(Bundle &bundle, ServiceOptions opts) : bundle_(bundle), opts_(std::move(opts)) {}

std::string Service::recommendJson(const std::string &source, const std::string &path,
                                   uint32_t line, uint32_t col, const std::string &callee,
                                   int pos, int k, const std::string &idJson) {
  corpus::CompilationUnit unit;
  try {
    unit = corpus::parseUnit(source, path);
  } catch (const ParseError &e) {
    throw RequestError("parse", e.what());
  }
  auto index = indexWithUnits(bundle_, {&unit});
  types::UnitContext ctx(unit, index, opts_.strict);
  auto req = callee.empty() ? corpus::requestAtCursor(unit, ctx, line, col)
                            : corpus::requestForCallee(unit, ctx, callee, pos);
  if (!req)
    throw RequestError("no-request", callee.empty()
                                         ? "no call argument at " + std::to_string(line) + ":" +
                                               std::to_string(col)
                                         : "no call to " + callee + " with argument " +
                                               std::to_string(pos));
  auto cfg = opts_.cfg ? *opts_.cfg : bundle_.config;
  auto &model = bundle_.model;
  const std::string key = "serve:" + path;
  model.clearCache(key);
  size_t upto = unit.tokenIndexAt(req->location.offset);
  model.updateCache(key, model.vocab().encode(lm::lmTokens(unit.tokens, 0, upto)));
  pipeline::RecommendDeps deps{&model, model.stack(unit.packageName), &bundle_.tables,
                               opts_.heavy};
  deps.layers.push_back({model.cache(key), nullptr});
  pipeline::RankedList list;
  try {
    list = pipeline::recommend(*req, ctx, k, cfg, deps);
  } catch (...) {
    model.clearCache(key);
    throw;
  }
  model.clearCache(key);

  json out;
  out["id"] = json::parse(idJson);
  out["request"] = {{"callee", req->callee},
                    {"pos", req->pos},
                    {"line", req->location.line},
                    {"col", req->location.col}};
  if (list.unresolved) {
    out["error"] = {{"code", "unresolved"}, {"message", list.error}};
    return out.dump();
  }
  json cands = json::array();
  for (const auto &s : list.items)
    cands.push_back(candidateJson(s));
  out["candidates"] = cands;
  out["counts"] = {{"generated", list.generated},
                   {"after_rules", list.reduced},
                   {"after_light", list.survivors}};
  out["warnings"] = list.warnings;
  return out.dump();
}

std::string Service::handle(const std::string &line) {
  json id = nullptr;
  try {
    json req;
    try {
      req = json::parse(line);
    } catch (const json::exception &e) {
      throw RequestError("malformed", std::string("request is not JSON: ") + e.what());
    }
    if (!req.is_object())
      throw RequestError("malformed", "request must be a JSON object");
    if (req.contains("id"))
      id = req["id"];
    auto getInt = [&](const char *name, int dflt) {
      if (!req.contains(name))
        return dflt;
      if (!req[name].is_number_integer())
        throw RequestError("malformed", std::string("field '") + name + "' must be an integer");
      return req[name].get<int>();
    };
    auto getStr = [&](const char *name) {
      if (!req.contains(name))
        return std::string();
      if (!req[name].is_string())
        throw RequestError("malformed", std::string("field '") + name + "' must be a string");
      return req[name].get<std::string>();
    };
    std::string file = getStr("file");
    std::string text = getStr("text");
    if (file.empty() == text.empty())
      throw RequestError("malformed", "give exactly one of 'file' or 'text'");
    std::string path = getStr("path");
    if (path.empty())
      path = file.empty() ? "<inline>" : file;
    std::string source = file.empty() ? text : readFile(file);
    std::string callee = getStr("callee");
    int k = getInt("k", opts_.defaultK);
    if (k < 1)
      throw RequestError("malformed", "'k' must be positive");
    int line = getInt("line", 0), col = getInt("col", 0), pos = getInt("pos", 1);
    if (callee.empty() && (line < 1 || col < 1))
      throw RequestError("malformed", "give 'line' and 'col', or 'callee' and 'pos'");
    if (!callee.empty() && pos < 1)
      throw RequestError("malformed", "'pos' must be positive");
    return recommendJson(source, path, static_cast<uint32_t>(line), static_cast<uint32_t>(col),
                         callee, pos, k, id.dump());
  } catch (const RequestError &e) {
    return errorDoc(id, e.code(), e.what()).dump();
  } catch (const std::exception &e) {
    return errorDoc(id, "internal", e.what()).dump();
  }
}

void Service::serve(std::istream &in, std::ostream &out) {
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    out << handle(line) << '\n';
    out.flush();
  }
}

} // namespace argrec::interface
