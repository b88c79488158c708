#include <gtest/gtest.h>

#include "linf/embedder.hpp"
#include "support.hpp"

namespace linf {
namespace {

using test::coarse_plant;
using test::smallest_quad_gap;

TEST(Embedder, SearchOrderFollowsRequiredSize) {
  EXPECT_EQ(color_search_order(1), (std::vector<QuadColor>{QuadColor::c132, QuadColor::c321, QuadColor::c231,
                                                           QuadColor::c123}));
  EXPECT_EQ(color_search_order(3), (std::vector<QuadColor>{QuadColor::c321, QuadColor::c132, QuadColor::c231,
                                                           QuadColor::c123}));
}

TEST(Embedder, StrategyNamesRoundTrip) {
  for (Strategy s : {Strategy::construction, Strategy::greedy, Strategy::frechet}) EXPECT_EQ(parse_strategy(to_string(s)), s);
  EXPECT_FALSE(parse_strategy("magic"));
}

TEST(Embedder, Case321SixPointsGainThree) {
  auto ms = generate(Family::c321, 6, 7);
  auto result = embed_with_gain(ms, {.gain = 3});
  EXPECT_EQ(result.embedding.k, 3u);
  EXPECT_TRUE(result.report.gain_achieved);
  EXPECT_FALSE(result.report.perturbed);
  EXPECT_FALSE(result.report.fallback);
  EXPECT_EQ(result.report.color, QuadColor::c321);
  EXPECT_TRUE(verify_embedding(ms, result.embedding).isometric);
}

TEST(Embedder, Case123ThirteenPointsGainTwo) {
  auto ms = generate(Family::c123, 13, 1);
  auto result = embed_with_gain(ms, {.gain = 2});
  EXPECT_LE(result.embedding.k, 11u);
  EXPECT_EQ(result.report.color, QuadColor::c123);
  EXPECT_TRUE(verify_embedding(ms, result.embedding).isometric);
}

TEST(Embedder, Planted231WithThreeExtraPoints) {
  auto core = generate(Family::c231, 9, 2);
  auto ms = coarse_plant(core, 3, 5);
  EmbedOptions options{.gain = 2, .epsilon = smallest_quad_gap(core) / 8, .seed = 3};
  auto result = embed_with_gain(ms, options);
  EXPECT_TRUE(result.report.perturbed);
  EXPECT_TRUE(result.report.gain_achieved);
  EXPECT_LE(result.embedding.k, 10u);
  EXPECT_TRUE(verify_embedding(result.metric, result.embedding).isometric);
  auto against_original = verify_embedding(ms, result.embedding);
  EXPECT_LE(against_original.max_deviation, 2 * *options.epsilon);
  EXPECT_EQ(result.report.deviation_from_original, against_original.max_deviation);
}

TEST(Embedder, GainSurvivesAppendedPoints) {
  auto core = generate(Family::c321, 8, 0);
  const Rational eps = smallest_quad_gap(core) / 8;
  for (std::size_t extra = 1; extra <= 5; ++extra) {
    auto ms = coarse_plant(core, extra, extra);
    auto result = embed_with_gain(ms, {.gain = 4, .epsilon = eps, .seed = extra});
    EXPECT_TRUE(result.report.gain_achieved) << extra;
    EXPECT_LE(result.embedding.k, ms.size() - 4);
  }
}

TEST(Embedder, FrechetStrategy) {
  auto ms = generate(Family::random, 7, 2);
  auto result = embed_with_gain(ms, {.gain = 1, .strategy = Strategy::frechet});
  EXPECT_EQ(result.embedding, frechet_embedding(ms));
  EXPECT_TRUE(result.report.gain_achieved);
  auto weak = embed_with_gain(ms, {.gain = 2, .strategy = Strategy::frechet});
  EXPECT_EQ(weak.embedding.k, 6u);
  EXPECT_FALSE(weak.report.gain_achieved);
}

TEST(Embedder, DegradesToFrechetWhenNoSubsetExists) {
  auto ms = generate(Family::random, 6, 3);
  ASSERT_FALSE(mono_color(ms).mono);
  auto result = embed_with_gain(ms, {.gain = 3});
  EXPECT_FALSE(result.report.gain_achieved);
  EXPECT_EQ(result.embedding.k, 5u);
  EXPECT_FALSE(result.report.notes.empty());
  EXPECT_TRUE(verify_embedding(ms, result.embedding).isometric);
}

TEST(Embedder, GreedyStrategyIsVerified) {
  auto ms = generate(Family::random, 8, 5);
  auto result = embed_with_gain(ms, {.gain = 1, .strategy = Strategy::greedy});
  EXPECT_TRUE(verify_embedding(ms, result.embedding).isometric);
  EXPECT_LE(result.embedding.k, 7u);
}

TEST(Embedder, NonGenericInputIsPerturbedWithinBound) {
  auto ms = test::line_space(6);
  auto result = embed_with_gain(ms, {.gain = 1, .seed = 4});
  EXPECT_TRUE(result.report.perturbed);
  EXPECT_EQ(result.report.epsilon, Rational(1, 1000));
  ASSERT_TRUE(result.report.deviation_from_original);
  EXPECT_LE(*result.report.deviation_from_original, 2 * result.report.epsilon);
  EXPECT_TRUE(verify_embedding(result.metric, result.embedding).isometric);
}

TEST(Embedder, IsDeterministic) {
  auto ms = coarse_plant(generate(Family::c132, 9, 1), 2, 6);
  EmbedOptions options{.gain = 3, .seed = 11};
  auto a = embed_with_gain(ms, options);
  auto b = embed_with_gain(ms, options);
  EXPECT_EQ(a.embedding, b.embedding);
  EXPECT_EQ(a.metric, b.metric);
  EXPECT_EQ(a.report.summary(), b.report.summary());
}

TEST(Embedder, RejectsZeroGain) {
  EXPECT_THROW(embed_with_gain(generate(Family::random, 4, 0), {.gain = 0}), std::invalid_argument);
}

TEST(Embedder, TinySpaces) {
  auto one = MetricSpace::from_upper(1, {});
  EXPECT_EQ(embed_with_gain(one, {.gain = 1}).embedding.k, 0u);
  auto two = MetricSpace::from_upper(2, {Rational(5)});
  auto r = embed_with_gain(two, {.gain = 1});
  EXPECT_EQ(r.embedding.k, 1u);
  EXPECT_TRUE(verify_embedding(two, r.embedding).isometric);
}

TEST(CoverAssembly, FrechetCoverRoundTrips) {
  auto ms = generate(Family::random, 6, 1);
  auto e = frechet_embedding(ms);
  EXPECT_EQ(embedding_from_cover(ms, cover_from_embedding(e)), e);
}

TEST(CoverAssembly, Case321CoverGivesFourByTwo) {
  auto ms = generate(Family::c321, 4, 0);
  auto ic = instantiate_cover(build_cover(QuadColor::c321, 2), ms);
  auto e = embedding_from_cover(ms, ic.cover);
  EXPECT_EQ(e.n, 4u);
  EXPECT_EQ(e.k, 2u);
  EXPECT_TRUE(verify_embedding(ms, e).isometric);
}

TEST(CoverAssembly, MissingFunctionReportsExactPairs) {
  auto ms = generate(Family::c321, 4, 0);
  auto ic = instantiate_cover(build_cover(QuadColor::c321, 2), ms);
  ic.cover.fns.pop_back();
  try {
    embedding_from_cover(ms, ic.cover);
    FAIL();
  } catch (const IncompleteCover& e) {
    EXPECT_EQ(e.missing, (std::vector<Pair>{{0, 2}, {0, 3}, {1, 3}}));
  }
}

}  // namespace
}  // namespace linf
