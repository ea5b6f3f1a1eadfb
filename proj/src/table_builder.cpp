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

#include "table_builder.hpp"

#include <algorithm>
#include <cmath>

namespace farhash::detail {

TableBuilder::TableBuilder(const CenteredPointSet& refs)
  : refs_(refs), norms_(refs.count()), state_(refs.count(), State::available)
{
  for (std::size_t i = 0; i < refs.count(); ++i) {
    norms_[i] = norm(refs.point(i));
    max_norm_ = std::max(max_norm_, norms_[i]);
  }
}

double TableBuilder::max_available_norm() const
{
  double best = 0.0;
  for (std::size_t i = 0; i < norms_.size(); ++i) {
    if (state_[i] == State::available) { best = std::max(best, norms_[i]); }
  }
  return best;
}

std::optional<ProjectionTable> TableBuilder::next_table(std::size_t m,
                                                        std::optional<double> angle_threshold)
{
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < norms_.size(); ++i) {
    if (state_[i] != State::available || norms_[i] == 0.0) { continue; }
    if (!pivot || norms_[i] > norms_[*pivot]) { pivot = i; }
  }
  if (!pivot) { return std::nullopt; }

  ProjectionTable table;
  table.basis.assign(refs_.point(*pivot).begin(), refs_.point(*pivot).end());
  for (auto& x : table.basis) { x /= norms_[*pivot]; }

  struct Scored {
    std::size_t id;
    ProjectionStats stats;
  };
  std::vector<Scored> scored;
  for (std::size_t i = 0; i < norms_.size(); ++i) {
    if (i == *pivot || state_[i] != State::available || norms_[i] == 0.0) { continue; }
    scored.push_back({i, projection_stats(refs_.point(i), table.basis)});
  }

  // The pivot leads its table unconditionally. Its exact score is its norm,
  // the maximum possible, so only rounding could otherwise displace it.
  const std::size_t take = std::min(m - 1, scored.size());
  auto by_score = [](const Scored& a, const Scored& b) {
    return a.stats.score > b.stats.score || (a.stats.score == b.stats.score && a.id < b.id);
  };
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take), scored.end(),
                    by_score);

  auto add = [&](std::size_t id) {
    table.ids.push_back(id);
    auto p = refs_.point(id);
    table.coords.insert(table.coords.end(), p.begin(), p.end());
    state_[id] = State::collected;
  };
  add(*pivot);
  for (std::size_t i = 0; i < take; ++i) { add(scored[i].id); }

  if (angle_threshold) {
    for (std::size_t i = take; i < scored.size(); ++i) {
      if (scored[i].stats.angle() < *angle_threshold) { state_[scored[i].id] = State::discarded; }
    }
  }
  return table;
}

std::optional<std::size_t> TableBuilder::largest_uncollected() const
{
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < norms_.size(); ++i) {
    if (state_[i] == State::collected) { continue; }
    if (!best || norms_[i] > norms_[*best]) { best = i; }
  }
  return best;
}

}  // namespace farhash::detail
