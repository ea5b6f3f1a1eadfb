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
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "farhash/neighbor_list.hpp"
#include "farhash/point_set.hpp"
#include "farhash/projection.hpp"

namespace farhash {

struct DrusillaParams {
  std::size_t l = 0;  ///< number of tables requested
  std::size_t m = 0;  ///< points per table
  double angle_threshold = kDefaultAngleThreshold;
};

/**
 * DrusillaHash index: mean-centered projection tables built around
 * successively chosen largest-norm reference points.
 *
 * Each table takes the largest-norm point not yet used as its pivot,
 * projects every remaining point onto the pivot direction and keeps the m
 * points with the best |offset| - distortion score. Points that are well
 * represented by the direction (angle below the threshold) but were not
 * collected are dropped from later tables. Search is a brute-force scan over
 * the stored points.
 */
class DrusillaIndex {
 public:
  DrusillaIndex() = default;

  /** Assembles an index from parts; validates table dimensions and id disjointness. */
  DrusillaIndex(std::vector<double> mean, std::vector<ProjectionTable> tables, std::size_t l,
                std::size_t m);

  [[nodiscard]] std::size_t dim() const noexcept { return mean_.size(); }
  [[nodiscard]] std::size_t l() const noexcept { return l_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::span<const double> mean() const noexcept { return mean_; }
  [[nodiscard]] std::span<const ProjectionTable> tables() const noexcept { return tables_; }
  /** Number of stored reference points across all tables. */
  [[nodiscard]] std::size_t candidate_count() const noexcept { return pool_.size(); }
  [[nodiscard]] const CandidatePool& pool() const noexcept { return pool_; }

  friend bool operator==(const DrusillaIndex& a, const DrusillaIndex& b)
  {
    return a.mean_ == b.mean_ && a.tables_ == b.tables_ && a.l_ == b.l_ && a.m_ == b.m_;
  }

 private:
  std::vector<double> mean_;
  std::vector<ProjectionTable> tables_;
  std::size_t l_ = 0;
  std::size_t m_ = 0;
  CandidatePool pool_;
};

/** Builds at most `params.l` tables over mean-centered references. */
DrusillaIndex drusilla_build(const CenteredPointSet& refs, const DrusillaParams& params);

/**
 * k furthest stored candidates for each (uncentered) query. Throws when the
 * index has no tables; use brute_force_search for such data.
 * `threads == 0` picks default_thread_count().
 */
std::vector<NeighborList> drusilla_search(const DrusillaIndex& index, const PointSet& queries,
                                          std::size_t k, unsigned threads = 1);

void save_index(std::ostream& out, const DrusillaIndex& index);
DrusillaIndex load_drusilla_index(std::istream& in);

inline constexpr const char* kDrusillaMagic = "DRUSILLA-INDEX 1";

}  // namespace farhash
