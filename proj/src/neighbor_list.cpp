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

#include "farhash/neighbor_list.hpp"

#include <algorithm>

namespace farhash {

bool topk_update(NeighborList& list, const Neighbor& candidate, std::size_t k)
{
  if (k == 0) { return false; }
  auto& e = list.entries;
  if (e.size() >= k && !(candidate.distance > e.back().distance)) { return false; }
  for (const auto& n : e) {
    if (n.id == candidate.id) { return false; }
  }
  if (e.size() >= k) { e.pop_back(); }
  e.insert(std::upper_bound(e.begin(), e.end(), candidate, ranks_before), candidate);
  return true;
}

}  // namespace farhash
