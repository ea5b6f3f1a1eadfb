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
#include <numbers>
#include <span>
#include <vector>

#include "farhash/neighbor_list.hpp"
#include "farhash/point_set.hpp"

namespace farhash {

/** Default angle (radians) below which an uncollected point is dropped from later tables. */
inline constexpr double kDefaultAngleThreshold = std::numbers::pi / 8.0;

/**
 * Decomposition of a point against a unit basis direction v:
 * offset = p.v (signed), distortion = |p - offset v|, score = |offset| - distortion.
 */
struct ProjectionStats {
  double offset = 0.0;
  double distortion = 0.0;
  double score = 0.0;

  /** Angle between p and the line spanned by v, in [0, pi/2]. pi/2 when offset is 0. */
  [[nodiscard]] double angle() const noexcept;
};

/** Throws invalid_argument when |v| differs from 1 by more than 1e-9 or sizes differ. */
ProjectionStats projection_stats(std::span<const double> p, std::span<const double> v);

/**
 * One hash table: a unit basis direction and the reference points collected
 * for it, stored with their centered coordinates. `ids[0]` is the pivot whose
 * direction defines `basis`.
 */
struct ProjectionTable {
  std::vector<double> basis;
  std::vector<std::size_t> ids;
  std::vector<double> coords;

  [[nodiscard]] std::size_t dim() const noexcept { return basis.size(); }
  [[nodiscard]] std::size_t size() const noexcept { return ids.size(); }
  [[nodiscard]] std::span<const double> member(std::size_t i) const noexcept
  {
    return {coords.data() + i * dim(), dim()};
  }

  friend bool operator==(const ProjectionTable&, const ProjectionTable&) = default;
};

/**
 * Flattened, id-sorted copy of every point stored in a set of tables (plus any
 * extra fallback point). The search scan runs over this.
 */
class CandidatePool {
 public:
  CandidatePool() = default;
  CandidatePool(std::size_t dim, std::span<const ProjectionTable> tables);

  [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

  /** Offers every pooled point to `list`; `query` is in the centered frame. */
  void scan(std::span<const double> query, NeighborList& list, std::size_t k) const;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> ids_;
  std::vector<double> coords_;
};

}  // namespace farhash
