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

// Test-only reference implementations. Deliberately naive and independent of
// the library's search and build code paths.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "farhash/neighbor_list.hpp"
#include "farhash/point_set.hpp"

namespace farhash::testing {

using Points = std::vector<std::vector<double>>;

inline Points to_rows(const PointSet& ps)
{
  Points rows;
  for (std::size_t i = 0; i < ps.count(); ++i) {
    auto p = ps.point(i);
    rows.emplace_back(p.begin(), p.end());
  }
  return rows;
}

inline PointSet from_rows(const Points& rows)
{
  std::vector<double> values;
  for (const auto& r : rows) { values.insert(values.end(), r.begin(), r.end()); }
  return PointSet(rows.at(0).size(), std::move(values));
}

inline double naive_distance(const std::vector<double>& a, const std::vector<double>& b)
{
  long double acc = 0.0L;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double t = static_cast<long double>(a[i]) - static_cast<long double>(b[i]);
    acc += t * t;
  }
  return static_cast<double>(std::sqrt(acc));
}

inline double naive_norm(const std::vector<double>& a)
{
  return naive_distance(a, std::vector<double>(a.size(), 0.0));
}

/** Full sort of every distance under (distance desc, id asc), truncated to k. */
inline std::vector<Neighbor> sorted_furthest(const Points& refs, const std::vector<double>& q, std::size_t k)
{
  std::vector<Neighbor> all;
  for (std::size_t r = 0; r < refs.size(); ++r) { all.push_back({r, naive_distance(q, refs[r])}); }
  std::stable_sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
    return a.distance > b.distance || (a.distance == b.distance && a.id < b.id);
  });
  all.resize(std::min(k, all.size()));
  return all;
}

/** True furthest distance from q. */
inline double furthest_distance(const Points& refs, const std::vector<double>& q)
{
  double best = 0.0;
  for (const auto& r : refs) { best = std::max(best, naive_distance(q, r)); }
  return best;
}

/**
 * Literal trace of the table-construction loop: returns the member ids of
 * each table in collection order (pivot first, then by score). `angle` < 0
 * disables angle discards; `guaranteed_cutoff` >= 0 switches to the
 * norm-cutoff loop.
 */
inline std::vector<std::vector<std::size_t>> trace_tables(const Points& centered, std::size_t l,
                                                          std::size_t m, double angle,
                                                          double guaranteed_cutoff = -1.0)
{
  const std::size_t n = centered.size();
  std::vector<double> live(n);
  for (std::size_t i = 0; i < n; ++i) { live[i] = naive_norm(centered[i]); }
  std::vector<std::vector<std::size_t>> tables;
  auto max_live = [&] { return *std::max_element(live.begin(), live.end()); };
  for (std::size_t iter = 0;; ++iter) {
    if (guaranteed_cutoff < 0.0 && iter >= l) { break; }
    if (guaranteed_cutoff >= 0.0 && !(max_live() > guaranteed_cutoff)) { break; }
    if (max_live() == 0.0) { break; }
    std::size_t pivot = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (live[i] > live[pivot]) { pivot = i; }
    }
    std::vector<double> v = centered[pivot];
    for (auto& x : v) { x /= live[pivot]; }
    struct S {
      std::size_t id;
      double score, off, dist;
    };
    std::vector<S> scored;
    for (std::size_t i = 0; i < n; ++i) {
      if (live[i] == 0.0) { continue; }
      double off = 0.0;
      for (std::size_t j = 0; j < v.size(); ++j) { off += centered[i][j] * v[j]; }
      std::vector<double> resid(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) { resid[j] = centered[i][j] - off * v[j]; }
      const double dist = naive_norm(resid);
      // The pivot's exact score is its norm.
      const double score = i == pivot ? std::numeric_limits<double>::infinity() : std::abs(off) - dist;
      scored.push_back({i, score, off, dist});
    }
    std::sort(scored.begin(), scored.end(), [](const S& a, const S& b) {
      return a.score > b.score || (a.score == b.score && a.id < b.id);
    });
    std::vector<std::size_t> table;
    for (std::size_t i = 0; i < scored.size(); ++i) {
      if (i < m) {
        table.push_back(scored[i].id);
        live[scored[i].id] = 0.0;
      } else if (angle >= 0.0 && std::atan2(scored[i].dist, std::abs(scored[i].off)) < angle) {
        live[scored[i].id] = 0.0;
      }
    }
    tables.push_back(table);
  }
  return tables;
}

/** Same ids in the same order and distances equal within `rel` relative error. */
inline bool same_neighbors(const std::vector<NeighborList>& a, const std::vector<NeighborList>& b,
                           double rel = 1e-9)
{
  if (a.size() != b.size()) { return false; }
  for (std::size_t q = 0; q < a.size(); ++q) {
    if (a[q].query_id != b[q].query_id || a[q].entries.size() != b[q].entries.size()) { return false; }
    for (std::size_t i = 0; i < a[q].entries.size(); ++i) {
      const auto& x = a[q].entries[i];
      const auto& y = b[q].entries[i];
      if (x.id != y.id || std::abs(x.distance - y.distance) > rel * std::max(x.distance, y.distance)) {
        return false;
      }
    }
  }
  return true;
}

/** Random point sets used by the property tests. */
enum class Shape { gaussian, ball, outlier };

inline PointSet random_instance(Shape shape, std::size_t n, std::size_t d, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  switch (shape) {
    case Shape::gaussian: {
      std::vector<double> scales(d);
      std::uniform_real_distribution<double> s(0.1, 3.0);
      for (auto& x : scales) { x = s(rng); }
      return gen_gaussian(n, scales, seed + 1);
    }
    case Shape::ball: return gen_uniform_ball(n, d, seed + 1);
    case Shape::outlier: {
      auto base = gen_gaussian(n, std::vector<double>(d, 1.0), seed + 1);
      std::vector<double> values(base.values().begin(), base.values().end());
      std::normal_distribution<double> g(0.0, 1.0);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      const std::size_t victim = pick(rng);
      for (std::size_t j = 0; j < d; ++j) { values[victim * d + j] = 50.0 * g(rng); }
      return PointSet(d, std::move(values));
    }
  }
  return {};
}

}  // namespace farhash::testing
