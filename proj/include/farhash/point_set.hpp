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
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace farhash {

/**
 * Dense, point-major collection of `count()` points of dimension `dim()`.
 *
 * Point ids are implicit: the id of a point is its row index, so ids are
 * unique and dense in [0, count). Every coordinate is finite.
 */
class PointSet {
 public:
  PointSet() = default;

  /** Takes ownership of `values` (point-major). Throws on non-finite values or ragged size. */
  PointSet(std::size_t dim, std::vector<double> values);

  [[nodiscard]] std::size_t dim() const noexcept { return dim_; }
  [[nodiscard]] std::size_t count() const noexcept { return dim_ == 0 ? 0 : values_.size() / dim_; }
  [[nodiscard]] bool empty() const noexcept { return count() == 0; }

  [[nodiscard]] std::span<const double> point(std::size_t id) const noexcept
  {
    return {values_.data() + id * dim_, dim_};
  }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }

  /** Subset in the order given by `ids`; the result is re-numbered 0..ids.size()-1. */
  [[nodiscard]] PointSet select(std::span<const std::size_t> ids) const;

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> values_;
};

/** A point set translated by `-mean`, together with the subtracted mean. */
struct CenteredPointSet {
  PointSet base;
  std::vector<double> mean;

  [[nodiscard]] std::size_t dim() const noexcept { return base.dim(); }
  [[nodiscard]] std::size_t count() const noexcept { return base.count(); }
  [[nodiscard]] std::span<const double> point(std::size_t id) const noexcept
  {
    return base.point(id);
  }
};

/** Parses comma-separated points, one per line. Blank lines are skipped. */
PointSet load_points(std::istream& source, bool has_header = false);
PointSet load_points_file(const std::string& path, bool has_header = false);

/** Writes one point per line with 17 significant digits. */
void save_points(std::ostream& sink, const PointSet& points);
void save_points_file(const std::string& path, const PointSet& points);

/** Column-wise mean. Requires a non-empty set. */
std::vector<double> centroid(const PointSet& points);

/** Subtracts `mean` from every point of `points`. */
CenteredPointSet translate(const PointSet& points, std::span<const double> mean);

/** Centers both sets by the centroid of `refs`. */
std::pair<CenteredPointSet, CenteredPointSet> mean_center(const PointSet& refs,
                                                          const PointSet& queries);

/** Centers `refs` by its own centroid. */
CenteredPointSet mean_center(const PointSet& refs);

double euclidean(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

namespace detail {

// Unchecked kernels for the hot loops; callers guarantee equal sizes.
inline double squared_distance(const double* a, const double* b, std::size_t dim) noexcept
{
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    const double t = a[i] - b[i];
    acc += t * t;
  }
  return acc;
}

inline double dot(const double* a, const double* b, std::size_t dim) noexcept
{
  double acc = 0.0;
  for (std::size_t i = 0; i < dim; ++i) { acc += a[i] * b[i]; }
  return acc;
}

}  // namespace detail

/** `n` points drawn uniformly from the unit ball in `d` dimensions. */
PointSet gen_uniform_ball(std::size_t n, std::size_t d, std::uint64_t seed);

/** Axis-aligned Gaussian with per-axis standard deviations `scales`, centered at the origin. */
PointSet gen_gaussian(std::size_t n, std::span<const double> scales, std::uint64_t seed);

/**
 * Mixture of `components` anisotropic Gaussians in `d` dimensions, equally
 * weighted. Axis j carries a global scale axis_decay^j: component centers are
 * drawn from N(0, (spread * axis_decay^j)^2) per axis, and each component's
 * per-axis standard deviation is axis_decay^j times a uniform draw from
 * [0.2, 1.5]. axis_decay = 1 gives roughly isotropic clusters.
 */
PointSet gen_gaussian_mixture(std::size_t n,
                              std::size_t d,
                              std::size_t components,
                              double spread,
                              double axis_decay,
                              std::uint64_t seed);

}  // namespace farhash
