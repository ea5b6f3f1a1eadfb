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

// Pivot/score/collect loop shared by the DrusillaHash and guaranteed builders.

#include <optional>
#include <vector>

#include "farhash/point_set.hpp"
#include "farhash/projection.hpp"

namespace farhash::detail {

class TableBuilder {
 public:
  explicit TableBuilder(const CenteredPointSet& refs);

  /** Largest norm among points neither collected nor discarded (0 when none). */
  [[nodiscard]] double max_available_norm() const;
  [[nodiscard]] double max_norm() const noexcept { return max_norm_; }

  /**
   * Builds the next table of at most m points around the largest-norm
   * available point. When `angle_threshold` is set, available points left
   * uncollected whose angle to the basis is below it are discarded. Returns
   * nullopt when no available point has positive norm.
   */
  std::optional<ProjectionTable> next_table(std::size_t m, std::optional<double> angle_threshold);

  [[nodiscard]] bool collected(std::size_t id) const noexcept { return state_[id] == State::collected; }

  /** Uncollected point with the largest norm, ties by id; nullopt when every point was collected. */
  [[nodiscard]] std::optional<std::size_t> largest_uncollected() const;

  [[nodiscard]] double norm_of(std::size_t id) const noexcept { return norms_[id]; }

 private:
  enum class State : unsigned char { available, collected, discarded };

  const CenteredPointSet& refs_;
  std::vector<double> norms_;
  std::vector<State> state_;
  double max_norm_ = 0.0;
};

}  // namespace farhash::detail
