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
#include <algorithm>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "farhash/neighbor_list.hpp"
#include "farhash/point_set.hpp"

namespace farhash {

/** Exact k furthest neighbors of every query; ties go to the smaller reference id. */
std::vector<NeighborList> brute_force_search(const PointSet& refs, const PointSet& queries,
                                             std::size_t k, unsigned threads = 1);

/**
 * Query-dependent approximate furthest neighbor (QDAFN) baseline.
 *
 * `l` random unit directions; per direction the `m` references with the
 * largest signed projection, sorted by projection descending.
 */
class QdafnIndex {
 public:
  struct Entry {
    std::size_t id = 0;
    double projection = 0.0;

    friend bool operator==(const Entry&, const Entry&) = default;
  };

  QdafnIndex() = default;
  QdafnIndex(std::vector<double> mean, std::vector<double> directions,
             std::vector<std::vector<Entry>> entries, std::vector<double> coords,
             std::size_t m, std::uint64_t seed);

  [[nodiscard]] std::size_t dim() const noexcept { return mean_.size(); }
  [[nodiscard]] std::size_t l() const noexcept { return entries_.size(); }
  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::span<const double> mean() const noexcept { return mean_; }
  [[nodiscard]] std::span<const double> direction(std::size_t i) const noexcept
  {
    return {directions_.data() + i * dim(), dim()};
  }
  /** Stored entries of direction `i`, projection descending. */
  [[nodiscard]] std::span<const Entry> entries(std::size_t i) const noexcept { return entries_[i]; }
  /** Centered coordinates of stored entry `j` of direction `i`. */
  [[nodiscard]] std::span<const double> coords(std::size_t i, std::size_t j) const noexcept
  {
    return {coords_.data() + (offsets_[i] + j) * dim(), dim()};
  }
  /** Total stored (direction, point) entries, duplicates across directions included. */
  [[nodiscard]] std::size_t stored_count() const noexcept { return coords_.size() / std::max<std::size_t>(dim(), 1); }

  friend bool operator==(const QdafnIndex& a, const QdafnIndex& b)
  {
    return a.mean_ == b.mean_ && a.directions_ == b.directions_ && a.entries_ == b.entries_ &&
           a.coords_ == b.coords_ && a.m_ == b.m_ && a.seed_ == b.seed_;
  }

 private:
  std::vector<double> mean_;
  std::vector<double> directions_;
  std::vector<std::vector<Entry>> entries_;
  std::vector<double> coords_;  // entry-major, directions concatenated
  std::vector<std::size_t> offsets_;
  std::size_t m_ = 0;
  std::uint64_t seed_ = 0;
};

QdafnIndex qdafn_build(const CenteredPointSet& refs, std::size_t l, std::size_t m, std::uint64_t seed);

struct QdafnSearchOptions {
  std::size_t budget = 0;  ///< distance evaluations per query; 0 means l + m
  /** Seeds the order among equal queue keys. Only matters when budget < stored points. */
  std::uint64_t tie_break_seed = 0;
  unsigned threads = 1;
};

/**
 * Per query: a max-queue over directions keyed by (stored projection -
 * direction . query); pops the largest key, evaluates that point's distance
 * and refills from the same direction, until `budget` distinct points have
 * been evaluated or all lists are exhausted. `evaluations`, when non-null,
 * receives the total distance evaluations over all queries.
 */
std::vector<NeighborList> qdafn_search(const QdafnIndex& index, const PointSet& queries, std::size_t k,
                                       const QdafnSearchOptions& options = {},
                                       std::size_t* evaluations = nullptr);

void save_index(std::ostream& out, const QdafnIndex& index);
QdafnIndex load_qdafn_index(std::istream& in);

inline constexpr const char* kQdafnMagic = "QDAFN-INDEX 1";

}  // namespace farhash
