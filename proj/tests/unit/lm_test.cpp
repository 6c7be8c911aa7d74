// Copyright 2026 The argrec Authors
// SPDX-License-Identifier: Apache-2.0

#include "argrec/corpus/lexer.hpp"
#include "argrec/lm/beam_search.hpp"
#include "argrec/lm/lm_tokens.hpp"
#include "argrec/lm/ngram_model.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

using namespace argrec;
using namespace argrec::lm;

namespace {

std::vector<std::string> words(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string w;
  while (in >> w)
    out.push_back(w);
  return out;
}

LmConfig cfg(int order, double lambda = 0.5, int minCount = 1) {
  LmConfig c;
  c.order = order;
  c.lambda = lambda;
  c.minCount = minCount;
  return c;
}

// Independent JM evaluation from raw n-gram occurrence lists.
double oracleJm(const std::vector<std::string> &stream, const std::vector<std::string> &ctx,
                const std::string &t, int order, double lambda, int vocabSize) {
  double p = 1.0 / vocabSize;
  for (int k = 1; k <= order; ++k) {
    if (static_cast<int>(ctx.size()) < k - 1)
      break;
    std::vector<std::string> c(ctx.end() - (k - 1), ctx.end());
    long total = 0, hit = 0;
    for (size_t i = 0; i + k <= stream.size(); ++i) {
      if (!std::equal(c.begin(), c.end(), stream.begin() + i))
        continue;
      ++total;
      hit += stream[i + k - 1] == t;
    }
    if (total == 0)
      break;
    p = lambda * static_cast<double>(hit) / total + (1 - lambda) * p;
  }
  return p;
}

} // namespace

TEST(Lm, BigramCounts) {
  auto m = NGramModel::train({{"p", words("a b a b")}}, cfg(2));
  const auto &v = m.vocab();
  std::vector<int> a{v.id("a")}, b{v.id("b")};
  const auto *na = m.global().find(a);
  const auto *nb = m.global().find(b);
  ASSERT_TRUE(na && nb);
  EXPECT_EQ(m.global().countOf(*na, v.id("b")), 2u);
  EXPECT_EQ(m.global().countOf(*nb, v.id("a")), 1u);
  EXPECT_EQ(na->childTotal, 2u);
  EXPECT_EQ(nb->childTotal, 1u);
}

TEST(Lm, JmHandValues) {
  // Vocabulary is {<unk>, <hole>, a, b}: the base level is 1/4.
  auto m = NGramModel::train({{"p", words("a b a b")}}, cfg(2));
  ASSERT_EQ(m.vocab().size(), 4);
  EXPECT_DOUBLE_EQ(m.tokenProb({}, "b"), 0.375);
  EXPECT_DOUBLE_EQ(m.tokenProb(words("a"), "b"), 0.6875);
  // Both layers agree on a single-package corpus.
  EXPECT_DOUBLE_EQ(m.tokenProb(words("a"), "b", "p"), 0.6875);
}

TEST(Lm, MinCountMapsToUnk) {
  auto m = NGramModel::train({{"p", words("x x y")}}, cfg(2, 0.5, 2));
  EXPECT_EQ(m.vocab().id("y"), Vocabulary::kUnk);
  EXPECT_NE(m.vocab().id("x"), Vocabulary::kUnk);
  EXPECT_GT(m.tokenProb({}, "never-seen"), 0.0);
}

TEST(Lm, PackagesAreSeparateLayers) {
  auto m = NGramModel::train({{"p", words("a b")}, {"q", words("c d")}}, cfg(2));
  ASSERT_EQ(m.packages().size(), 2u);
  const auto *p = m.findPackage("p");
  const auto *q = m.findPackage("q");
  EXPECT_TRUE(p->find(std::vector<int>{m.vocab().id("a")}));
  EXPECT_FALSE(p->find(std::vector<int>{m.vocab().id("c")}));
  EXPECT_TRUE(q->find(std::vector<int>{m.vocab().id("c")}));
  EXPECT_THROW(NGramModel::train({{"p", {}}}), Error);
}

TEST(Lm, NormalizedOverVocabulary) {
  std::mt19937 rng(3);
  std::vector<std::string> pool = {"a", "b", "c", "d", "e", "f"};
  for (int round = 0; round < 20; ++round) {
    std::vector<TokenStream> streams;
    for (int s = 0; s < 3; ++s) {
      TokenStream ts{s % 2 ? "p" : "q", {}};
      for (int i = 0; i < 40; ++i)
        ts.tokens.push_back(pool[rng() % pool.size()]);
      streams.push_back(ts);
    }
    auto m = NGramModel::train(streams, cfg(1 + round % 6));
    std::vector<std::string> cache;
    for (int i = 0; i < 10; ++i)
      cache.push_back(pool[rng() % 3]);
    m.updateCache("F", cache);
    for (int c = 0; c < 5; ++c) {
      std::vector<int> ctx;
      for (int i = 0; i < static_cast<int>(rng() % 7); ++i)
        ctx.push_back(m.vocab().id(pool[rng() % pool.size()]));
      auto layers = m.stack(c % 2 ? "p" : "zz");
      layers.push_back({m.cache("F"), nullptr});
      double sum = 0;
      for (int t = 0; t < m.vocab().size(); ++t)
        sum += m.tokenProb(layers, ctx, t);
      EXPECT_NEAR(sum, 1.0, 1e-9);
      auto dist = m.distribution(layers, ctx);
      for (int t = 0; t < m.vocab().size(); ++t)
        EXPECT_NEAR(dist[t], m.tokenProb(layers, ctx, t), 1e-12);
    }
  }
}

TEST(Lm, MatchesOracleOnSingleLayer) {
  std::mt19937 rng(5);
  std::vector<std::string> pool = {"a", "b", "c", "d"};
  std::vector<std::string> stream;
  for (int i = 0; i < 60; ++i)
    stream.push_back(pool[rng() % pool.size()]);
  for (int order : {1, 2, 3, 6}) {
    auto m = NGramModel::train({{"p", stream}}, cfg(order));
    LayerStack g{{&m.global(), nullptr}};
    for (int c = 0; c < 20; ++c) {
      std::vector<std::string> ctx;
      for (int i = 0; i < static_cast<int>(rng() % 6); ++i)
        ctx.push_back(pool[rng() % pool.size()]);
      for (const auto &t : pool)
        EXPECT_NEAR(m.tokenProb(g, m.vocab().encode(ctx), m.vocab().id(t)),
                    oracleJm(stream, ctx, t, order, 0.5, m.vocab().size()), 1e-12);
    }
  }
}

TEST(Lm, LambdaExtremes) {
  auto ml = NGramModel::train({{"p", words("a b a c")}}, cfg(2, 1.0));
  LayerStack g{{&ml.global(), nullptr}};
  auto &v = ml.vocab();
  std::vector<int> a{v.id("a")};
  EXPECT_DOUBLE_EQ(ml.tokenProb(g, a, v.id("b")), 0.5);
  EXPECT_DOUBLE_EQ(ml.tokenProb(g, a, v.id("a")), 0.0);
  auto base = NGramModel::train({{"p", words("a b a c")}}, cfg(2, 0.0));
  LayerStack g0{{&base.global(), nullptr}};
  EXPECT_DOUBLE_EQ(base.tokenProb(g0, a, v.id("b")), 1.0 / base.vocab().size());
}

TEST(Lm, SequenceProbChainRule) {
  auto m = NGramModel::train({{"p", words("x a b x a c x a b")}}, cfg(3));
  auto ctx = words("x");
  EXPECT_DOUBLE_EQ(m.sequenceProb(ctx, words("a")), m.tokenProb(ctx, "a"));
  EXPECT_DOUBLE_EQ(m.sequenceProb(ctx, words("a b")),
                   m.tokenProb(ctx, "a") * m.tokenProb(words("x a"), "b"));
  EXPECT_LE(m.sequenceProb(ctx, words("a b x")), m.sequenceProb(ctx, words("a b")));
}

TEST(Lm, CacheIsolationAndReversibility) {
  auto m = NGramModel::train({{"p", words("x z y z x z")}}, cfg(2));
  double before = m.tokenProb(words("x"), "y", "p", "F");
  m.updateCache("F", words("x y"));
  double after = m.tokenProb(words("x"), "y", "p", "F");
  EXPECT_GT(after, before);
  EXPECT_DOUBLE_EQ(m.tokenProb(words("x"), "y", "p", "G"), before);
  m.clearCache("F");
  EXPECT_DOUBLE_EQ(m.tokenProb(words("x"), "y", "p", "F"), before);
}

TEST(Lm, CacheChunksEqualOneStream) {
  auto m = NGramModel::train({{"p", words("a b c d e")}}, cfg(3));
  auto toks = words("a b c a b d e a");
  m.updateCache("one", toks);
  for (size_t i = 0; i < toks.size(); ++i)
    m.updateCache("many", std::vector<std::string>{toks[i]});
  EXPECT_TRUE(*m.cache("one") == *m.cache("many"));
}

TEST(Lm, TrainingOrderIndependent) {
  std::vector<TokenStream> s = {{"p", words("a b c")}, {"q", words("c b a b")}, {"p", words("b b")}};
  auto m1 = NGramModel::train(s, cfg(3));
  std::reverse(s.begin(), s.end());
  auto m2 = NGramModel::train(s, cfg(3));
  EXPECT_TRUE(m1.global() == m2.global());
  EXPECT_TRUE(*m1.findPackage("p") == *m2.findPackage("p"));
}

TEST(Lm, CountTableRoundTrip) {
  auto m = NGramModel::train({{"p", words("a b a c a b")}}, cfg(3));
  std::stringstream ss;
  m.global().write(ss);
  CountTable t(3);
  t.read(ss);
  EXPECT_TRUE(t == m.global());
  EXPECT_EQ(t.root().childTotal, m.global().root().childTotal);
}

TEST(Lm, LeaveOneOutView) {
  auto m = NGramModel::train({{"p", words("a b")}}, cfg(2));
  auto &v = m.vocab();
  CountTable all(2), own(2);
  std::vector<int> f1 = v.encode(words("a b a b")), f2 = v.encode(words("b a"));
  all.addStream(f1);
  all.addStream(f2);
  own.addStream(f1);
  CountTable rest(2);
  rest.addStream(f2);
  std::vector<int> ctx{v.id("b")};
  for (int t = 0; t < v.size(); ++t)
    EXPECT_DOUBLE_EQ(m.tokenProb({{&all, &own}}, ctx, t), m.tokenProb({{&rest, nullptr}}, ctx, t));
}

TEST(LmTokens, Mapping) {
  auto toks = corpus::tokenize("foo.getUserName(\"x\", 42, 'c', null)");
  EXPECT_EQ(lmTokens(toks), words("foo . get user name ( <str> , <num> , <char> , null )"));
  EXPECT_EQ(candidateLmTokens("tokenID.getImage()", 0), words("token id . get image ( )"));
  EXPECT_EQ(candidateLmTokens("a.put(, )", 2), words("a . put ("));
  EXPECT_EQ(candidateLmTokens("new int[]", 1), words("new int ["));
  EXPECT_EQ(candidateLmTokens("(Dog) pet", 0), words("( dog ) pet"));
}

namespace {

// Toy model over {a, b, ','}: all sequences up to maxLen scored exactly.
std::vector<BeamResult> exhaustive(const NGramModel &m, const LayerStack &layers,
                                   const std::vector<int> &ctx, int k, int maxLen) {
  std::vector<BeamResult> all;
  std::vector<int> ids;
  for (int t = 2; t < m.vocab().size(); ++t)
    ids.push_back(t);
  std::function<void(std::vector<int>, int)> rec = [&](std::vector<int> seq, int depth) {
    if (static_cast<int>(seq.size()) >= maxLen)
      return;
    for (int t : ids) {
      const auto &tok = m.vocab().token(t);
      if (isBoundary(tok, depth)) {
        if (!seq.empty()) {
          auto full = seq;
          full.push_back(t);
          all.push_back({seq, m.sequenceProb(layers, ctx, full)});
        }
        continue;
      }
      int d = depth + (tok == "(" ? 1 : tok == ")" ? -1 : 0);
      auto next = seq;
      next.push_back(t);
      rec(next, d);
    }
  };
  rec({}, 0);
  std::sort(all.begin(), all.end(), [&](const BeamResult &x, const BeamResult &y) {
    if (x.prob != y.prob)
      return x.prob > y.prob;
    std::string sx, sy;
    for (int t : x.tokens)
      sx += m.vocab().token(t) + " ";
    for (int t : y.tokens)
      sy += m.vocab().token(t) + " ";
    return sx < sy;
  });
  if (static_cast<int>(all.size()) > k)
    all.resize(k);
  return all;
}

} // namespace

TEST(Beam, ExhaustiveWidthEqualsBruteForce) {
  auto m = NGramModel::train({{"p", words("f ( a , b ) f ( a b , a ) f ( b , b )")}}, cfg(3));
  auto layers = m.stack("p");
  auto ctx = m.vocab().encode(words("f ("));
  for (int maxLen = 1; maxLen <= 3; ++maxLen) {
    auto got = beamSearch(m, layers, ctx, 5, 100000, maxLen);
    auto want = exhaustive(m, layers, ctx, 5, maxLen);
    ASSERT_EQ(got.size(), want.size()) << maxLen;
    for (size_t i = 0; i < got.size(); ++i) {
      EXPECT_EQ(got[i].tokens, want[i].tokens);
      EXPECT_NEAR(got[i].prob, want[i].prob, 1e-12);
    }
  }
}

TEST(Beam, DeterministicChain) {
  auto m = NGramModel::train({{"p", words("s x y , s x y , s x y ,")}}, cfg(3, 1.0));
  auto layers = m.stack("p");
  auto got = beamSearch(m, layers, m.vocab().encode(words("s")), 1, 1, 5);
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].tokens, m.vocab().encode(words("x y")));
  EXPECT_NEAR(got[0].prob, 1.0, 1e-12);
}

TEST(Beam, WidthOneIsGreedy) {
  auto m = NGramModel::train({{"p", words("f ( a , b ) f ( a b , a ) f ( b , b ) f ( a )")}}, cfg(3));
  auto layers = m.stack("p");
  auto ctx = m.vocab().encode(words("f ("));
  auto got = beamSearch(m, layers, ctx, 1, 1, 6);
  std::vector<int> seq, window = ctx;
  int depth = 0;
  for (int step = 0; step < 6; ++step) {
    auto d = m.distribution(layers, window);
    int best = -1;
    for (int t = 2; t < m.vocab().size(); ++t) {
      if (m.vocab().token(t) == "," && seq.empty() && depth == 0)
        continue;
      if (best < 0 || d[t] > d[best])
        best = t;
    }
    const auto &tok = m.vocab().token(best);
    if (isBoundary(tok, depth))
      break;
    depth += tok == "(" ? 1 : tok == ")" ? -1 : 0;
    seq.push_back(best);
    window.push_back(best);
  }
  ASSERT_EQ(got.size(), 1u);
  EXPECT_EQ(got[0].tokens, seq);
}
