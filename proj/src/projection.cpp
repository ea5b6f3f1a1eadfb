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

#include "farhash/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "farhash/error.hpp"

namespace farhash {

double ProjectionStats::angle() const noexcept { return std::atan2(distortion, std::abs(offset)); }

ProjectionStats projection_stats(std::span<const double> p, std::span<const double> v)
{
  if (p.size() != v.size()) {
    throw invalid_argument("dimension mismatch: point has " + std::to_string(p.size()) +
                           ", basis has " + std::to_string(v.size()));
  }
  if (std::abs(norm(v) - 1.0) > 1e-9) { throw invalid_argument("basis vector is not unit length"); }
  ProjectionStats s;
  s.offset = detail::dot(p.data(), v.data(), p.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double r = p[i] - s.offset * v[i];
    acc += r * r;
  }
  s.distortion = std::sqrt(acc);
  s.score = std::abs(s.offset) - s.distortion;
  return s;
}

CandidatePool::CandidatePool(std::size_t dim, std::span<const ProjectionTable> tables) : dim_(dim)
{
  struct Ref {
    std::size_t id;
    const double* coords;
  };
  std::vector<Ref> refs;
  for (const auto& t : tables) {
    for (std::size_t i = 0; i < t.size(); ++i) { refs.push_back({t.ids[i], t.member(i).data()}); }
  }
  std::sort(refs.begin(), refs.end(), [](const Ref& a, const Ref& b) { return a.id < b.id; });
  ids_.reserve(refs.size());
  coords_.reserve(refs.size() * dim_);
  for (const auto& r : refs) {
    ids_.push_back(r.id);
    coords_.insert(coords_.end(), r.coords, r.coords + dim_);
  }
}

void CandidatePool::scan(std::span<const double> query, NeighborList& list, std::size_t k) const
{
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    const double d = std::sqrt(detail::squared_distance(query.data(), coords_.data() + i * dim_, dim_));
    if (list.admits(d, k)) { topk_update(list, {ids_[i], d}, k); }
  }
}

}  // namespace farhash
