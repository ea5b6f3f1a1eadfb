/*
 * Copyright (c) 2026, The farhash Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "farhash/drusilla_index.hpp"
#include "farhash/error.hpp"
#include "farhash/eval.hpp"
#include "oracles.hpp"

namespace farhash {
namespace {

NeighborList one(std::size_t q, std::vector<Neighbor> e) { return {q, std::move(e)}; }

TEST(ApproxStats, IdentityIsZero)
{
  std::vector<NeighborList> r{one(0, {{1, 3.0}, {2, 2.0}}), one(1, {{4, 7.5}})};
  auto s = approx_stats(r, r);
  EXPECT_EQ(s.mean_epsilon, 0.0);
  EXPECT_EQ(s.max_epsilon, 0.0);
  EXPECT_EQ(s.infinite_count, 0u);
  EXPECT_EQ(s.per_query_ratio.size(), 3u);
}

TEST(ApproxStats, Arithmetic)
{
  std::vector<NeighborList> exact{one(0, {{1, 10.0}})};
  std::vector<NeighborList> approx{one(0, {{2, 8.0}})};
  auto s = approx_stats(exact, approx);
  EXPECT_DOUBLE_EQ(s.per_query_ratio.at(0), 1.25);
  EXPECT_DOUBLE_EQ(s.max_epsilon, 0.25);
  EXPECT_DOUBLE_EQ(s.mean_epsilon, 0.25);
}

TEST(ApproxStats, FourPointSearchExample)
{
  auto index = drusilla_build(mean_center(PointSet(2, {6, 0, -2, 1, -2, -1, -2, 0})), {1, 2});
  auto approx = drusilla_search(index, PointSet(2, {6, 0}), 1);
  std::vector<NeighborList> exact{one(0, {{1, std::sqrt(65.0)}})};
  auto s = approx_stats(exact, approx);
  EXPECT_NEAR(s.max_epsilon, std::sqrt(65.0) / 8.0 - 1.0, 1e-15);
  EXPECT_NEAR(s.max_epsilon, 0.00778, 1e-5);
}

TEST(ApproxStats, ZeroDistances)
{
  std::vector<NeighborList> exact{one(0, {{1, 2.0}}), one(1, {{0, 0.0}}), one(2, {{0, 5.0}, {1, 4.0}})};
  std::vector<NeighborList> approx{one(0, {{1, 0.0}}), one(1, {{0, 0.0}}), one(2, {{0, 5.0}})};
  auto s = approx_stats(exact, approx);
  // query 0 undefined, query 1 is 0/0 = 1, query 2 slot 2 is missing.
  EXPECT_EQ(s.infinite_count, 2u);
  EXPECT_EQ(s.per_query_ratio, (std::vector<double>{1.0, 1.0}));
  EXPECT_LE(s.mean_epsilon, s.max_epsilon);
}

TEST(ApproxStats, MismatchedQueries)
{
  std::vector<NeighborList> a{one(0, {})}, b{one(0, {}), one(1, {})}, c{one(5, {})};
  EXPECT_THROW(approx_stats(a, b), invalid_argument);
  EXPECT_THROW(approx_stats(a, c), invalid_argument);
}

TEST(RankAnalysis, OneDimensionalExample)
{
  auto r = rank_analysis(PointSet(1, {0, 1, 3}));
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0].rank_sum, 6u);
  EXPECT_EQ(r[1].rank_sum, 7u);
  EXPECT_EQ(r[2].rank_sum, 5u);
  EXPECT_DOUBLE_EQ(r[0].average_rank, 2.0);
  EXPECT_DOUBLE_EQ(r[1].average_rank, 7.0 / 3.0);
  EXPECT_DOUBLE_EQ(r[2].average_rank, 5.0 / 3.0);
  EXPECT_DOUBLE_EQ(r[0].centered_norm, 4.0 / 3.0);
  EXPECT_DOUBLE_EQ(r[1].centered_norm, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(r[2].centered_norm, 5.0 / 3.0);
}

TEST(RankAnalysis, TwoPointsAndErrors)
{
  auto r = rank_analysis(PointSet(2, {0, 0, 1, 1}));
  EXPECT_EQ(r[0].average_rank, 1.5);
  EXPECT_EQ(r[1].average_rank, 1.5);
  EXPECT_THROW(rank_analysis(PointSet(2, {0, 0})), invalid_argument);
}

TEST(RankAnalysis, GrandMeanIdentity)
{
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const std::size_t n = 10 + seed * 37;
    auto r = rank_analysis(testing::random_instance(testing::Shape::gaussian, n, 4, seed), 2);
    std::uint64_t total = 0;
    double mean = 0.0;
    for (const auto& rec : r) {
      total += rec.rank_sum;
      mean += rec.average_rank;
      EXPECT_GE(rec.average_rank, 1.0);
      EXPECT_LE(rec.average_rank, static_cast<double>(n));
    }
    EXPECT_EQ(total, n * n * (n + 1) / 2);
    EXPECT_NEAR(mean / static_cast<double>(n), (static_cast<double>(n) + 1) / 2, 1e-12 * n);
  }
}

TEST(Spearman, KnownValues)
{
  std::vector<double> x{1, 2, 3, 4, 5};
  std::vector<double> up{2, 4, 8, 16, 32}, down{5, 4, 3, 2, 1};
  EXPECT_DOUBLE_EQ(spearman(x, up), 1.0);
  EXPECT_DOUBLE_EQ(spearman(x, down), -1.0);
  // Ranks with ties: y ranks {1.5, 1.5, 3, 4, 5}.
  std::vector<double> tied{1, 1, 2, 3, 4};
  EXPECT_NEAR(spearman(x, tied), 0.9746794344808963, 1e-12);
  EXPECT_THROW(spearman(std::vector<double>{1}, std::vector<double>{1}), invalid_argument);
}

TEST(SplitPoints, SizesAndDeterminism)
{
  auto data = gen_uniform_ball(100, 3, 1);
  auto [refs, queries] = split_points(data, 0.3, 5);
  EXPECT_EQ(refs.count(), 70u);
  EXPECT_EQ(queries.count(), 30u);
  auto again = split_points(data, 0.3, 5);
  EXPECT_EQ(again.first, refs);
  EXPECT_THROW(split_points(gen_uniform_ball(3, 2, 1), 0.3, 1), invalid_argument);
}

TEST(Bench, ExactAlgorithmHasZeroError)
{
  auto data = gen_uniform_ball(500, 4, 2);
  std::vector<AlgorithmConfig> algos{{Algorithm::brute}, {Algorithm::drusilla, 3, 2}};
  auto report = bench(data, algos, {1, 7, 3});
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.trials, 3u);
  EXPECT_EQ(report.rows[0].mean_epsilon, 0.0);
  EXPECT_EQ(report.rows[0].max_epsilon, 0.0);
  EXPECT_EQ(report.rows[0].candidates, 350.0);
  EXPECT_GE(report.rows[1].max_epsilon, report.rows[1].mean_epsilon);
  EXPECT_GE(report.rows[1].setup_s, 0.0);
}

TEST(Bench, NonTimingFieldsAreDeterministic)
{
  auto data = testing::random_instance(testing::Shape::gaussian, 600, 5, 3);
  std::vector<AlgorithmConfig> algos{{Algorithm::drusilla, 4, 2}, {Algorithm::qdafn, 6, 6},
                                     {Algorithm::guaranteed, 0, 2, 0, 0.5}};
  auto a = bench(data, algos, {2, 11, 2, 3, 1});
  auto b = bench(data, algos, {2, 11, 2, 3, 2});
  for (std::size_t i = 0; i < algos.size(); ++i) {
    EXPECT_EQ(a.rows[i].candidates, b.rows[i].candidates);
    EXPECT_EQ(a.rows[i].mean_epsilon, b.rows[i].mean_epsilon);
    EXPECT_EQ(a.rows[i].max_epsilon, b.rows[i].max_epsilon);
  }
}

TEST(Bench, RanduParametersScanFewerPointsThanQdafnStores)
{
  auto data = gen_uniform_ball(5000, 10, 1);
  std::vector<AlgorithmConfig> algos{{Algorithm::drusilla, 5, 2}, {Algorithm::qdafn, 15, 15, 225}};
  auto report = bench(data, algos, {1, 0, 1});
  EXPECT_EQ(report.rows[0].candidates, 10.0);
  EXPECT_GT(report.rows[1].candidates, report.rows[0].candidates);
  EXPECT_GE(report.rows[1].candidates, 50.0);
}

TEST(Bench, Errors)
{
  auto data = gen_uniform_ball(50, 2, 1);
  std::vector<AlgorithmConfig> none;
  EXPECT_THROW(bench(data, none, {}), invalid_argument);
  std::vector<AlgorithmConfig> brute{{Algorithm::brute}};
  EXPECT_THROW(bench(data, brute, {1, 0, 0}), invalid_argument);
  EXPECT_THROW(bench(gen_uniform_ball(2, 2, 1), brute, {}), invalid_argument);
}

TEST(Sweep, ShapeAndSinglePointEqualsBench)
{
  auto data = gen_uniform_ball(2000, 6, 4);
  std::vector<AlgorithmConfig> sweep{{Algorithm::drusilla, 6, 2}, {Algorithm::drusilla, 30, 10},
                                     {Algorithm::qdafn, 20, 20}};
  auto rows = error_runtime_sweep(data, sweep, {1, 3});
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) { EXPECT_LE(rows[i - 1].search_s, rows[i].search_s); }

  std::vector<AlgorithmConfig> single{{Algorithm::drusilla, 6, 2}};
  auto s = error_runtime_sweep(data, single, {1, 3});
  auto b = bench(data, single, {1, 3, 1});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].max_epsilon, b.rows[0].max_epsilon);
  EXPECT_EQ(s[0].candidates, b.rows[0].candidates);
  std::vector<AlgorithmConfig> empty;
  EXPECT_THROW(error_runtime_sweep(data, empty, {}), invalid_argument);
}

TEST(Sweep, MoreTablesNeverWorsenMaxErrorAtFixedM)
{
  auto data = testing::random_instance(testing::Shape::gaussian, 3000, 8, 12);
  std::vector<AlgorithmConfig> sweep;
  for (std::size_t l = 1; l <= 30; l += 4) { sweep.push_back({Algorithm::drusilla, l, 2}); }
  auto rows = bench(data, sweep, {1, 5, 1}).rows;
  for (std::size_t i = 1; i < rows.size(); ++i) { EXPECT_LE(rows[i].max_epsilon, rows[i - 1].max_epsilon); }
}

TEST(Csv, Writers)
{
  std::vector<BenchRow> rows(1);
  rows[0].config = {Algorithm::qdafn, 3, 4};
  rows[0].candidates = 7;
  std::ostringstream out;
  write_bench_csv(out, rows);
  EXPECT_EQ(out.str(), "algorithm,l,m,budget,setup_s,search_s,candidates,mean_eps,max_eps\n"
                       "qdafn,3,4,7,0,0,7,0,0\n");
  std::ostringstream ranks;
  std::vector<RankRecord> recs{{0, 0.5, 1.5, 3}};
  write_rank_csv(ranks, recs);
  EXPECT_EQ(ranks.str(), "ref_id,norm,avg_rank\n0,0.5,1.5\n");
  EXPECT_EQ(parse_algorithm("guaranteed"), Algorithm::guaranteed);
  EXPECT_THROW(parse_algorithm("dual-tree"), invalid_argument);
}

}  // namespace
}  // namespace farhash
