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
#include <vector>

namespace farhash {

struct Neighbor {
  std::size_t id = 0;
  double distance = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

/** Strict "ranks ahead of" order for furthest-neighbor results: larger distance, then smaller id. */
constexpr bool ranks_before(const Neighbor& a, const Neighbor& b) noexcept
{
  return a.distance > b.distance || (a.distance == b.distance && a.id < b.id);
}

/**
 * Up to k furthest neighbors of one query, sorted by `ranks_before`.
 * Ref ids are unique within a list.
 */
struct NeighborList {
  std::size_t query_id = 0;
  std::vector<Neighbor> entries;

  /** Distance a new candidate must strictly exceed to enter a full list; 0 while not full. */
  [[nodiscard]] double kth_distance(std::size_t k) const noexcept
  {
    return entries.size() < k ? 0.0 : entries.back().distance;
  }

  /** True when a candidate at `distance` would change a list capped at k (ignoring duplicate ids). */
  [[nodiscard]] bool admits(double distance, std::size_t k) const noexcept
  {
    return entries.size() < k || distance > entries.back().distance;
  }

  friend bool operator==(const NeighborList&, const NeighborList&) = default;
};

/**
 * Offers `candidate` to a list holding at most `k` entries.
 *
 * Below capacity the candidate is inserted in order. At capacity it replaces
 * the last entry only when its distance is strictly greater. Re-offering an id
 * already in the list is a no-op. Returns true when the list changed.
 */
bool topk_update(NeighborList& list, const Neighbor& candidate, std::size_t k);

}  // namespace farhash
