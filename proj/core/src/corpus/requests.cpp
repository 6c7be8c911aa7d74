// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/requests.hpp"

#include "argrec/typesys/context.hpp"
#include "argrec/typesys/expected.hpp"

#include <tuple>

namespace argrec::corpus {

namespace {

std::string calleeName(const Expr &call) {
  if (call.kind == ExprKind::New)
    return call.type.name;
  return call.name;
}

ArRequest makeRequest(const CompilationUnit &unit, const types::UnitContext &ctx,
                      int callIndex, int argIndex) {
  const CallSite &cs = unit.calls[callIndex];
  const Expr &call = *cs.call;
  const Expr &arg = *call.args[argIndex];
  ArRequest r;
  r.unit = &unit;
  r.callIndex = callIndex;
  r.call = &call;
  r.callee = calleeName(call);
  r.receiver = call.kind == ExprKind::MethodCall ? call.target.get() : nullptr;
  r.pos = argIndex + 1;
  r.arity = static_cast<int>(call.args.size());
  r.location = arg.span.begin;
  r.calleePos = call.namePos;
  r.type = cs.type;
  r.method = cs.method;
  r.inStatic = cs.inStaticContext;
  if (arg.kind != ExprKind::Hole)
    r.gold = Gold{unit.textOf(arg.span), classifyExpr(arg), &arg};
  types::Site site = ctx.siteFor(cs, r.location);
  types::CalleeInfo ci = ctx.resolveCall(call, site);
  types::ExpectedSet es = types::expectedTypes(ci, r.pos);
  r.unresolved = !ci.resolved || es.unresolved;
  r.varargs = es.varargs;
  return r;
}

} // namespace

std::vector<ArRequest> extractRequests(const CompilationUnit &unit,
                                       const types::UnitContext &ctx) {
  std::vector<ArRequest> out;
  for (size_t c = 0; c < unit.calls.size(); ++c)
    for (size_t a = 0; a < unit.calls[c].call->args.size(); ++a)
      out.push_back(makeRequest(unit, ctx, static_cast<int>(c), static_cast<int>(a)));
  return out;
}

std::vector<ArRequest> extractRequests(const CompilationUnit &unit,
                                       const types::TypeIndex &index) {
  types::UnitContext ctx(unit, index);
  return extractRequests(unit, ctx);
}

std::optional<ArRequest> requestAtCursor(const CompilationUnit &unit,
                                         const types::UnitContext &ctx,
                                         uint32_t line, uint32_t col) {
  auto key = [](uint32_t l, uint32_t c) { return std::make_tuple(l, c); };
  auto cursor = key(line, col);
  std::optional<ArRequest> best;
  uint32_t bestStart = 0;
  for (size_t c = 0; c < unit.calls.size(); ++c) {
    const Expr &call = *unit.calls[c].call;
    for (size_t a = 0; a < call.args.size(); ++a) {
      const Expr &arg = *call.args[a];
      size_t ti = unit.tokenIndexAt(arg.span.begin.offset);
      // Step back over the hole token itself, if any, to the delimiter.
      while (ti > 0 && unit.tokens[ti - 1].kind == TokenKind::Hole)
        --ti;
      if (ti == 0)
        continue;
      const Token &delim = unit.tokens[ti - 1];
      auto lo = key(delim.pos.line, delim.pos.col + 1);
      auto hi = key(arg.span.end.line, arg.span.end.col);
      if (cursor < lo || hi < cursor)
        continue;
      if (!best || delim.pos.offset >= bestStart) {
        best = makeRequest(unit, ctx, static_cast<int>(c), static_cast<int>(a));
        bestStart = delim.pos.offset;
      }
    }
  }
  return best;
}

std::optional<ArRequest> requestForCallee(const CompilationUnit &unit,
                                          const types::UnitContext &ctx,
                                          const std::string &callee, int pos) {
  std::optional<ArRequest> first;
  for (size_t c = 0; c < unit.calls.size(); ++c) {
    const Expr &call = *unit.calls[c].call;
    if (calleeName(call) != callee || static_cast<int>(call.args.size()) < pos || pos < 1)
      continue;
    ArRequest r = makeRequest(unit, ctx, static_cast<int>(c), pos - 1);
    if (r.isHole())
      return r;
    if (!first)
      first = std::move(r);
  }
  return first;
}

} // namespace argrec::corpus
