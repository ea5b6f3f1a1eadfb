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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "farhash/neighbor_list.hpp"
#include "farhash/point_set.hpp"
#include "farhash/projection.hpp"

namespace farhash {

/**
 * Approximation quality of one result set against the exact one. Slot i of
 * each query is scored as exact_i.distance / approx_i.distance; a missing
 * approximate slot counts as distance 0.
 */
struct ApproxStats {
  std::vector<double> per_query_ratio;  ///< finite ratios, query-major then slot
  double mean_epsilon = 0.0;            ///< mean(ratio) - 1 over finite ratios
  double max_epsilon = 0.0;             ///< max(ratio) - 1 over finite ratios
  std::size_t infinite_count = 0;       ///< approx distance 0 with exact distance > 0
};

ApproxStats approx_stats(std::span<const NeighborList> exact, std::span<const NeighborList> approx);

struct RankRecord {
  std::size_t ref_id = 0;
  double centered_norm = 0.0;
  double average_rank = 0.0;
  std::uint64_t rank_sum = 0;  ///< sum of 1-based ranks over all queries
};

/**
 * Uses every reference point as a query against the whole set (itself
 * included) and averages each point's 1-based furthest-first rank. Quadratic.
 */
std::vector<RankRecord> rank_analysis(const PointSet& refs, unsigned threads = 1);

/** Spearman rank correlation with average ranks for ties. */
double spearman(std::span<const double> x, std::span<const double> y);

enum class Algorithm { brute, drusilla, guaranteed, qdafn };

std::string to_string(Algorithm a);
Algorithm parse_algorithm(const std::string& name);

/** One algorithm and its parameters. Unused fields are ignored. */
struct AlgorithmConfig {
  Algorithm algorithm = Algorithm::brute;
  std::size_t l = 0;
  std::size_t m = 0;
  std::size_t budget = 0;  ///< QDAFN only; 0 means l + m
  double epsilon = 0.0;    ///< guaranteed only
  double angle_threshold = kDefaultAngleThreshold;
};

struct BenchOptions {
  std::size_t k = 1;
  std::uint64_t split_seed = 0;
  std::size_t trials = 1;
  std::uint64_t index_seed = 0;  ///< QDAFN direction seed
  unsigned threads = 1;          ///< 0 = default_thread_count()
  double query_fraction = 0.3;
};

/** Per-algorithm means across trials. */
struct BenchRow {
  AlgorithmConfig config;
  double setup_s = 0.0;
  double search_s = 0.0;
  double candidates = 0.0;  ///< distance evaluations per query
  double mean_epsilon = 0.0;
  double max_epsilon = 0.0;
  std::size_t infinite_count = 0;
};

struct BenchReport {
  std::string dataset;
  std::size_t points = 0;
  std::size_t dim = 0;
  std::size_t trials = 0;
  std::uint64_t split_seed = 0;
  std::vector<BenchRow> rows;
};

/** Random (references, queries) split; `query_fraction` of the points become queries. */
std::pair<PointSet, PointSet> split_points(const PointSet& data, double query_fraction,
                                           std::uint64_t seed);

/**
 * Per trial t: split with seed split_seed + t, build and search every
 * algorithm, score against brute force. Setup time covers centering and
 * index construction; search time covers the queries only.
 */
BenchReport bench(const PointSet& data, std::span<const AlgorithmConfig> algorithms,
                  const BenchOptions& options, std::string dataset = {});

/**
 * One single-trial bench row per sweep point, all on the split given by
 * options.split_seed, sorted by search time.
 */
std::vector<BenchRow> error_runtime_sweep(const PointSet& data, std::span<const AlgorithmConfig> sweep,
                                          const BenchOptions& options);

inline constexpr const char* kBenchCsvHeader =
  "algorithm,l,m,budget,setup_s,search_s,candidates,mean_eps,max_eps";
inline constexpr const char* kRankCsvHeader = "ref_id,norm,avg_rank";

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);
void write_rank_csv(std::ostream& out, std::span<const RankRecord> records);

}  // namespace farhash
