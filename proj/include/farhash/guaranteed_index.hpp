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
#include <optional>
#include <span>
#include <vector>

#include "farhash/neighbor_list.hpp"
#include "farhash/point_set.hpp"
#include "farhash/projection.hpp"

namespace farhash {

/** Low-norm fallback point offered to every query after the table scan. */
struct ShrugPoint {
  std::size_t id = 0;
  std::vector<double> coords;  ///< centered

  friend bool operator==(const ShrugPoint&, const ShrugPoint&) = default;
};

/**
 * Index whose results are epsilon-approximate furthest neighbors for every
 * query: tables are added until every uncollected point has centered norm at
 * most (epsilon / 15) * max_norm, and one such leftover point is kept as the
 * shrug point. Unlike DrusillaIndex, no point is ever discarded by angle.
 */
class GuaranteedIndex {
 public:
  GuaranteedIndex() = default;
  GuaranteedIndex(std::vector<double> mean, std::vector<ProjectionTable> tables, double epsilon,
                  double max_norm, std::size_t m, std::optional<ShrugPoint> shrug);

  [[nodiscard]] std::size_t dim() const noexcept { return mean_.size(); }
  [[nodiscard]] double epsilon() const noexcept { return epsilon_; }
  [[nodiscard]] double delta() const noexcept { return epsilon_ / 15.0; }
  [[nodiscard]] double max_norm() const noexcept { return max_norm_; }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::span<const double> mean() const noexcept { return mean_; }
  [[nodiscard]] std::span<const ProjectionTable> tables() const noexcept { return tables_; }
  [[nodiscard]] const std::optional<ShrugPoint>& shrug() const noexcept { return shrug_; }
  /** Stored table points plus the shrug point, if any. */
  [[nodiscard]] std::size_t candidate_count() const noexcept
  {
    return pool_.size() + (shrug_ ? 1 : 0);
  }
  [[nodiscard]] const CandidatePool& pool() const noexcept { return pool_; }

  friend bool operator==(const GuaranteedIndex& a, const GuaranteedIndex& b)
  {
    return a.mean_ == b.mean_ && a.tables_ == b.tables_ && a.epsilon_ == b.epsilon_ &&
           a.max_norm_ == b.max_norm_ && a.m_ == b.m_ && a.shrug_ == b.shrug_;
  }

 private:
  std::vector<double> mean_;
  std::vector<ProjectionTable> tables_;
  double epsilon_ = 0.0;
  double max_norm_ = 0.0;
  std::size_t m_ = 0;
  std::optional<ShrugPoint> shrug_;
  CandidatePool pool_;
};

/** Requires 0 < epsilon < 1 and m >= 1. */
GuaranteedIndex guaranteed_build(const CenteredPointSet& refs, double epsilon, std::size_t m);

std::vector<NeighborList> guaranteed_search(const GuaranteedIndex& index, const PointSet& queries,
                                            std::size_t k, unsigned threads = 1);

void save_index(std::ostream& out, const GuaranteedIndex& index);
GuaranteedIndex load_guaranteed_index(std::istream& in);

inline constexpr const char* kGuaranteedMagic = "DRUSILLA-GUARANTEED 1";

}  // namespace farhash
