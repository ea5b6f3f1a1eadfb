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

#include "farhash/point_set.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "farhash/error.hpp"
#include "text_io.hpp"

namespace farhash {

PointSet::PointSet(std::size_t dim, std::vector<double> values) : dim_(dim), values_(std::move(values))
{
  if (dim_ == 0) { throw invalid_argument("point dimension must be positive"); }
  if (values_.size() % dim_ != 0) {
    throw invalid_argument("coordinate count " + std::to_string(values_.size()) +
                           " is not a multiple of dimension " + std::to_string(dim_));
  }
  for (double v : values_) {
    if (!std::isfinite(v)) { throw invalid_argument("non-finite coordinate"); }
  }
}

PointSet PointSet::select(std::span<const std::size_t> ids) const
{
  std::vector<double> out;
  out.reserve(ids.size() * dim_);
  for (auto id : ids) {
    if (id >= count()) { throw invalid_argument("point id out of range"); }
    auto p = point(id);
    out.insert(out.end(), p.begin(), p.end());
  }
  PointSet result;
  result.dim_ = dim_;
  result.values_ = std::move(out);
  return result;
}

PointSet load_points(std::istream& source, bool has_header)
{
  std::string line;
  std::size_t lineno = 0;
  std::size_t dim = 0;
  std::vector<double> values;
  bool header_pending = has_header;
  while (std::getline(source, line)) {
    ++lineno;
    auto body = detail::trim(line);
    if (body.empty()) { continue; }
    if (header_pending) {
      header_pending = false;
      continue;
    }
    auto fields = detail::split(body, ',');
    if (dim == 0) {
      dim = fields.size();
    } else if (fields.size() != dim) {
      throw parse_error("expected " + std::to_string(dim) + " fields, found " +
                          std::to_string(fields.size()),
                        lineno);
    }
    for (std::size_t i = 0; i < fields.size(); ++i) {
      auto v = detail::parse_real(fields[i]);
      if (!v) {
        throw parse_error("field " + std::to_string(i + 1) + " is not a finite number: '" +
                            std::string(detail::trim(fields[i])) + "'",
                          lineno);
      }
      values.push_back(*v);
    }
  }
  if (dim == 0) { throw parse_error("no points in input"); }
  return PointSet(dim, std::move(values));
}

PointSet load_points_file(const std::string& path, bool has_header)
{
  std::ifstream in(path);
  if (!in) { throw error("cannot open '" + path + "' for reading"); }
  return load_points(in, has_header);
}

void save_points(std::ostream& sink, const PointSet& points)
{
  for (std::size_t i = 0; i < points.count(); ++i) {
    auto p = points.point(i);
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j > 0) { sink.put(','); }
      detail::write_real(sink, p[j]);
    }
    sink.put('\n');
  }
}

void save_points_file(const std::string& path, const PointSet& points)
{
  std::ofstream out(path);
  if (!out) { throw error("cannot open '" + path + "' for writing"); }
  save_points(out, points);
  if (!out.flush()) { throw error("write to '" + path + "' failed"); }
}

std::vector<double> centroid(const PointSet& points)
{
  if (points.empty()) { throw invalid_argument("centroid of an empty point set"); }
  std::vector<double> mean(points.dim(), 0.0);
  for (std::size_t i = 0; i < points.count(); ++i) {
    auto p = points.point(i);
    for (std::size_t j = 0; j < mean.size(); ++j) { mean[j] += p[j]; }
  }
  for (auto& v : mean) { v /= static_cast<double>(points.count()); }
  return mean;
}

CenteredPointSet translate(const PointSet& points, std::span<const double> mean)
{
  if (mean.size() != points.dim()) {
    throw invalid_argument("dimension mismatch: points have " + std::to_string(points.dim()) +
                           ", mean has " + std::to_string(mean.size()));
  }
  std::vector<double> values(points.values().begin(), points.values().end());
  for (std::size_t i = 0; i < values.size(); ++i) { values[i] -= mean[i % mean.size()]; }
  return {PointSet(points.dim(), std::move(values)), std::vector<double>(mean.begin(), mean.end())};
}

std::pair<CenteredPointSet, CenteredPointSet> mean_center(const PointSet& refs,
                                                          const PointSet& queries)
{
  if (refs.dim() != queries.dim()) {
    throw invalid_argument("dimension mismatch: references have " + std::to_string(refs.dim()) +
                           ", queries have " + std::to_string(queries.dim()));
  }
  auto mean = centroid(refs);
  return {translate(refs, mean), translate(queries, mean)};
}

CenteredPointSet mean_center(const PointSet& refs) { return translate(refs, centroid(refs)); }

double euclidean(std::span<const double> a, std::span<const double> b)
{
  if (a.size() != b.size()) {
    throw invalid_argument("dimension mismatch: " + std::to_string(a.size()) + " vs " +
                           std::to_string(b.size()));
  }
  return std::sqrt(detail::squared_distance(a.data(), b.data(), a.size()));
}

double norm(std::span<const double> a) { return std::sqrt(detail::dot(a.data(), a.data(), a.size())); }

PointSet gen_uniform_ball(std::size_t n, std::size_t d, std::uint64_t seed)
{
  if (n == 0 || d == 0) { throw invalid_argument("gen_uniform_ball needs n >= 1 and d >= 1"); }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> values(n * d);
  std::vector<double> dir(d);
  for (std::size_t i = 0; i < n; ++i) {
    double len = 0.0;
    do {
      for (auto& x : dir) { x = gauss(rng); }
      len = std::sqrt(detail::dot(dir.data(), dir.data(), d));
    } while (len == 0.0);
    const double radius = std::pow(unit(rng), 1.0 / static_cast<double>(d));
    for (std::size_t j = 0; j < d; ++j) {
      values[i * d + j] = dir[j] / len * radius;
    }
    // Rounding can push the norm a hair past 1.
    double r = std::sqrt(detail::dot(values.data() + i * d, values.data() + i * d, d));
    if (r > 1.0) {
      for (std::size_t j = 0; j < d; ++j) { values[i * d + j] /= r; }
    }
  }
  return PointSet(d, std::move(values));
}

PointSet gen_gaussian(std::size_t n, std::span<const double> scales, std::uint64_t seed)
{
  if (n == 0 || scales.empty()) { throw invalid_argument("gen_gaussian needs n >= 1 and d >= 1"); }
  const std::size_t d = scales.size();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> values(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) { values[i * d + j] = scales[j] * gauss(rng); }
  }
  return PointSet(d, std::move(values));
}

PointSet gen_gaussian_mixture(std::size_t n,
                              std::size_t d,
                              std::size_t components,
                              double spread,
                              double axis_decay,
                              std::uint64_t seed)
{
  if (n == 0 || d == 0 || components == 0) {
    throw invalid_argument("gen_gaussian_mixture needs n, d and components >= 1");
  }
  if (!(axis_decay > 0.0) || !std::isfinite(spread)) {
    throw invalid_argument("gen_gaussian_mixture needs axis_decay > 0 and a finite spread");
  }
  std::vector<double> axis(d);
  for (std::size_t j = 0; j < d; ++j) { axis[j] = std::pow(axis_decay, static_cast<double>(j)); }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> scale_dist(0.2, 1.5);
  std::uniform_int_distribution<std::size_t> pick(0, components - 1);
  std::vector<double> centers(components * d);
  std::vector<double> scales(components * d);
  for (std::size_t i = 0; i < centers.size(); ++i) { centers[i] = spread * axis[i % d] * gauss(rng); }
  for (std::size_t i = 0; i < scales.size(); ++i) { scales[i] = axis[i % d] * scale_dist(rng); }
  std::vector<double> values(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = pick(rng);
    for (std::size_t j = 0; j < d; ++j) {
      values[i * d + j] = centers[c * d + j] + scales[c * d + j] * gauss(rng);
    }
  }
  return PointSet(d, std::move(values));
}

}  // namespace farhash
