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

#include "farhash/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>

#include "farhash/baselines.hpp"
#include "farhash/drusilla_index.hpp"
#include "farhash/error.hpp"
#include "farhash/guaranteed_index.hpp"
#include "farhash/parallel.hpp"
#include "text_io.hpp"

namespace farhash {

ApproxStats approx_stats(std::span<const NeighborList> exact, std::span<const NeighborList> approx)
{
  if (exact.size() != approx.size()) {
    throw invalid_argument("result sets cover different numbers of queries (" +
                           std::to_string(exact.size()) + " vs " + std::to_string(approx.size()) + ")");
  }
  ApproxStats stats;
  double sum = 0.0;
  double worst = 1.0;
  for (std::size_t q = 0; q < exact.size(); ++q) {
    if (exact[q].query_id != approx[q].query_id) {
      throw invalid_argument("query id mismatch at position " + std::to_string(q));
    }
    for (std::size_t i = 0; i < exact[q].entries.size(); ++i) {
      const double truth = exact[q].entries[i].distance;
      const double found = i < approx[q].entries.size() ? approx[q].entries[i].distance : 0.0;
      double ratio = 1.0;
      if (found == 0.0) {
        if (truth > 0.0) {
          ++stats.infinite_count;
          continue;
        }
      } else {
        ratio = truth / found;
      }
      stats.per_query_ratio.push_back(ratio);
      sum += ratio;
      worst = std::max(worst, ratio);
    }
  }
  if (!stats.per_query_ratio.empty()) {
    stats.mean_epsilon = sum / static_cast<double>(stats.per_query_ratio.size()) - 1.0;
    stats.max_epsilon = worst - 1.0;
  }
  return stats;
}

std::vector<RankRecord> rank_analysis(const PointSet& refs, unsigned threads)
{
  const std::size_t n = refs.count();
  if (n < 2) { throw invalid_argument("rank analysis needs at least two points"); }
  const auto centered = mean_center(refs);
  const std::size_t dim = refs.dim();

  std::vector<std::uint64_t> rank_sum(n, 0);
  std::mutex merge;
  detail::parallel_for(n, threads, [&](std::size_t q) {
    std::vector<Neighbor> order(n);
    const double* query = centered.point(q).data();
    for (std::size_t r = 0; r < n; ++r) {
      order[r] = {r, std::sqrt(detail::squared_distance(query, centered.point(r).data(), dim))};
    }
    std::sort(order.begin(), order.end(), ranks_before);
    std::lock_guard lock(merge);
    for (std::size_t pos = 0; pos < n; ++pos) { rank_sum[order[pos].id] += pos + 1; }
  });

  std::vector<RankRecord> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = {i, norm(centered.point(i)), static_cast<double>(rank_sum[i]) / static_cast<double>(n),
              rank_sum[i]};
  }
  return out;
}

namespace {

std::vector<double> tied_ranks(std::span<const double> v)
{
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < idx.size()) {
    std::size_t j = i;
    while (j + 1 < idx.size() && v[idx[j + 1]] == v[idx[i]]) { ++j; }
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t t = i; t <= j; ++t) { ranks[idx[t]] = avg; }
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y)
{
  if (x.size() != y.size() || x.size() < 2) {
    throw invalid_argument("spearman needs two equal-length series of at least two values");
  }
  const auto rx = tied_ranks(x);
  const auto ry = tied_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) { return 0.0; }
  return sxy / std::sqrt(sxx * syy);
}

std::string to_string(Algorithm a)
{
  switch (a) {
    case Algorithm::brute: return "brute";
    case Algorithm::drusilla: return "drusilla";
    case Algorithm::guaranteed: return "guaranteed";
    case Algorithm::qdafn: return "qdafn";
  }
  return "unknown";
}

Algorithm parse_algorithm(const std::string& name)
{
  if (name == "brute") { return Algorithm::brute; }
  if (name == "drusilla") { return Algorithm::drusilla; }
  if (name == "guaranteed") { return Algorithm::guaranteed; }
  if (name == "qdafn") { return Algorithm::qdafn; }
  throw invalid_argument("unknown algorithm '" + name + "' (expected brute, drusilla, guaranteed or qdafn)");
}

std::pair<PointSet, PointSet> split_points(const PointSet& data, double query_fraction,
                                           std::uint64_t seed)
{
  if (!(query_fraction > 0.0 && query_fraction < 1.0)) {
    throw invalid_argument("query fraction must lie in (0, 1)");
  }
  const std::size_t n = data.count();
  const auto queries = static_cast<std::size_t>(std::floor(static_cast<double>(n) * query_fraction));
  if (queries == 0 || queries >= n) {
    throw invalid_argument("dataset of " + std::to_string(n) + " points is too small to split");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  std::span<const std::size_t> all(order);
  return {data.select(all.subspan(queries)), data.select(all.first(queries))};
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct TrialResult {
  double setup_s = 0.0;
  double search_s = 0.0;
  double candidates = 0.0;
  std::vector<NeighborList> results;
};

TrialResult run_one(const AlgorithmConfig& config, const PointSet& refs, const PointSet& queries,
                    const BenchOptions& options)
{
  TrialResult r;
  const auto nq = static_cast<double>(std::max<std::size_t>(queries.count(), 1));
  switch (config.algorithm) {
    case Algorithm::brute: {
      auto t0 = Clock::now();
      r.results = brute_force_search(refs, queries, options.k, options.threads);
      r.search_s = seconds_since(t0);
      r.candidates = static_cast<double>(refs.count());
      break;
    }
    case Algorithm::drusilla: {
      auto t0 = Clock::now();
      auto index = drusilla_build(mean_center(refs), {config.l, config.m, config.angle_threshold});
      r.setup_s = seconds_since(t0);
      t0 = Clock::now();
      r.results = drusilla_search(index, queries, options.k, options.threads);
      r.search_s = seconds_since(t0);
      r.candidates = static_cast<double>(index.candidate_count());
      break;
    }
    case Algorithm::guaranteed: {
      auto t0 = Clock::now();
      auto index = guaranteed_build(mean_center(refs), config.epsilon, config.m);
      r.setup_s = seconds_since(t0);
      t0 = Clock::now();
      r.results = guaranteed_search(index, queries, options.k, options.threads);
      r.search_s = seconds_since(t0);
      r.candidates = static_cast<double>(index.candidate_count());
      break;
    }
    case Algorithm::qdafn: {
      auto t0 = Clock::now();
      auto index = qdafn_build(mean_center(refs), config.l, config.m, options.index_seed);
      r.setup_s = seconds_since(t0);
      std::size_t evaluations = 0;
      t0 = Clock::now();
      r.results = qdafn_search(index, queries, options.k, {config.budget, 0, options.threads}, &evaluations);
      r.search_s = seconds_since(t0);
      r.candidates = static_cast<double>(evaluations) / nq;
      break;
    }
  }
  return r;
}

void validate_options(std::span<const AlgorithmConfig> algorithms, const BenchOptions& options)
{
  if (algorithms.empty()) { throw invalid_argument("no algorithms selected"); }
  if (options.trials == 0) { throw invalid_argument("trials must be at least 1"); }
  if (options.k == 0) { throw invalid_argument("k must be at least 1"); }
}

}  // namespace

BenchReport bench(const PointSet& data, std::span<const AlgorithmConfig> algorithms,
                  const BenchOptions& options, std::string dataset)
{
  validate_options(algorithms, options);
  BenchReport report{std::move(dataset), data.count(), data.dim(), options.trials, options.split_seed, {}};
  report.rows.resize(algorithms.size());
  for (std::size_t a = 0; a < algorithms.size(); ++a) { report.rows[a].config = algorithms[a]; }

  for (std::size_t t = 0; t < options.trials; ++t) {
    auto [refs, queries] = split_points(data, options.query_fraction, options.split_seed + t);
    const TrialResult oracle = run_one({Algorithm::brute}, refs, queries, options);
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      const TrialResult r = algorithms[a].algorithm == Algorithm::brute
                              ? oracle
                              : run_one(algorithms[a], refs, queries, options);
      const auto stats = approx_stats(oracle.results, r.results);
      auto& row = report.rows[a];
      row.setup_s += r.setup_s;
      row.search_s += r.search_s;
      row.candidates += r.candidates;
      row.mean_epsilon += stats.mean_epsilon;
      row.max_epsilon += stats.max_epsilon;
      row.infinite_count += stats.infinite_count;
    }
  }
  const auto trials = static_cast<double>(options.trials);
  for (auto& row : report.rows) {
    row.setup_s /= trials;
    row.search_s /= trials;
    row.candidates /= trials;
    row.mean_epsilon /= trials;
    row.max_epsilon /= trials;
  }
  return report;
}

std::vector<BenchRow> error_runtime_sweep(const PointSet& data, std::span<const AlgorithmConfig> sweep,
                                          const BenchOptions& options)
{
  if (sweep.empty()) { throw invalid_argument("empty sweep"); }
  BenchOptions single = options;
  single.trials = 1;
  auto report = bench(data, sweep, single);
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const BenchRow& a, const BenchRow& b) { return a.search_s < b.search_s; });
  return report.rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows)
{
  out << kBenchCsvHeader << '\n';
  for (const auto& row : rows) {
    const auto& c = row.config;
    const bool tables = c.algorithm == Algorithm::drusilla || c.algorithm == Algorithm::qdafn;
    const bool sized = tables || c.algorithm == Algorithm::guaranteed;
    const std::size_t budget = c.algorithm == Algorithm::qdafn ? (c.budget == 0 ? c.l + c.m : c.budget) : 0;
    out << to_string(c.algorithm) << ',' << (tables ? c.l : 0) << ',' << (sized ? c.m : 0) << ','
        << budget << ',';
    for (double v : {row.setup_s, row.search_s, row.candidates, row.mean_epsilon}) {
      detail::write_real(out, v);
      out.put(',');
    }
    detail::write_real(out, row.max_epsilon);
    out.put('\n');
  }
}

void write_rank_csv(std::ostream& out, std::span<const RankRecord> records)
{
  out << kRankCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.ref_id << ',';
    detail::write_real(out, r.centered_norm);
    out.put(',');
    detail::write_real(out, r.average_rank);
    out.put('\n');
  }
}

}  // namespace farhash
