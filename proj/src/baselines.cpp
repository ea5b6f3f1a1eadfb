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

#include "farhash/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <unordered_set>

#include "farhash/error.hpp"
#include "farhash/parallel.hpp"
#include "text_io.hpp"

namespace farhash {

std::vector<NeighborList> brute_force_search(const PointSet& refs, const PointSet& queries,
                                             std::size_t k, unsigned threads)
{
  if (refs.empty()) { throw invalid_argument("brute-force search over an empty reference set"); }
  if (k == 0) { throw invalid_argument("k must be at least 1"); }
  if (refs.dim() != queries.dim()) {
    throw invalid_argument("dimension mismatch: references have " + std::to_string(refs.dim()) +
                           ", queries have " + std::to_string(queries.dim()));
  }
  const std::size_t dim = refs.dim();
  const double* base = refs.values().data();
  std::vector<NeighborList> out(queries.count());
  detail::parallel_for(queries.count(), threads, [&](std::size_t q) {
    const double* query = queries.point(q).data();
    NeighborList& list = out[q];
    list.query_id = q;
    list.entries.reserve(k);
    for (std::size_t r = 0; r < refs.count(); ++r) {
      const double d = std::sqrt(detail::squared_distance(query, base + r * dim, dim));
      if (list.admits(d, k)) { topk_update(list, {r, d}, k); }
    }
  });
  return out;
}

QdafnIndex::QdafnIndex(std::vector<double> mean, std::vector<double> directions,
                       std::vector<std::vector<Entry>> entries, std::vector<double> coords,
                       std::size_t m, std::uint64_t seed)
  : mean_(std::move(mean)),
    directions_(std::move(directions)),
    entries_(std::move(entries)),
    coords_(std::move(coords)),
    m_(m),
    seed_(seed)
{
  const std::size_t dim = mean_.size();
  if (dim == 0) { throw invalid_argument("index dimension must be positive"); }
  if (entries_.empty() || m_ == 0) { throw invalid_argument("QDAFN index needs l >= 1 and m >= 1"); }
  if (directions_.size() != entries_.size() * dim) {
    throw invalid_argument("direction count does not match entry lists");
  }
  std::size_t total = 0;
  for (const auto& list : entries_) {
    offsets_.push_back(total);
    total += list.size();
    if (list.size() > m_) { throw invalid_argument("direction stores more than m entries"); }
    for (std::size_t j = 1; j < list.size(); ++j) {
      if (list[j - 1].projection < list[j].projection) {
        throw invalid_argument("entries not sorted by projection");
      }
    }
  }
  if (coords_.size() != total * dim) { throw invalid_argument("coordinate count mismatch"); }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (std::abs(norm(direction(i)) - 1.0) > 1e-9) { throw invalid_argument("direction not unit length"); }
  }
}

QdafnIndex qdafn_build(const CenteredPointSet& refs, std::size_t l, std::size_t m, std::uint64_t seed)
{
  if (l == 0 || m == 0) { throw invalid_argument("l and m must both be at least 1"); }
  if (refs.count() == 0) { throw invalid_argument("cannot build an index over zero points"); }
  const std::size_t dim = refs.dim();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  std::vector<double> directions(l * dim);
  std::vector<std::vector<QdafnIndex::Entry>> entries(l);
  std::vector<double> coords;
  std::vector<QdafnIndex::Entry> all(refs.count());
  const std::size_t keep = std::min(m, refs.count());
  for (std::size_t i = 0; i < l; ++i) {
    double* dir = directions.data() + i * dim;
    double len = 0.0;
    do {
      for (std::size_t j = 0; j < dim; ++j) { dir[j] = gauss(rng); }
      len = std::sqrt(detail::dot(dir, dir, dim));
    } while (len == 0.0);
    for (std::size_t j = 0; j < dim; ++j) { dir[j] /= len; }

    for (std::size_t r = 0; r < refs.count(); ++r) {
      all[r] = {r, detail::dot(refs.point(r).data(), dir, dim)};
    }
    std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep), all.end(),
                      [](const auto& a, const auto& b) {
                        return a.projection > b.projection || (a.projection == b.projection && a.id < b.id);
                      });
    entries[i].assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(keep));
    for (const auto& e : entries[i]) {
      auto p = refs.point(e.id);
      coords.insert(coords.end(), p.begin(), p.end());
    }
  }
  return QdafnIndex(refs.mean, std::move(directions), std::move(entries), std::move(coords), m, seed);
}

std::vector<NeighborList> qdafn_search(const QdafnIndex& index, const PointSet& queries, std::size_t k,
                                       const QdafnSearchOptions& options, std::size_t* evaluations)
{
  if (index.l() == 0) { throw invalid_argument("QDAFN search on an empty index"); }
  if (k == 0) { throw invalid_argument("k must be at least 1"); }
  if (queries.dim() != index.dim()) {
    throw invalid_argument("dimension mismatch: index has " + std::to_string(index.dim()) +
                           ", queries have " + std::to_string(queries.dim()));
  }
  const std::size_t dim = index.dim();
  const std::size_t budget = options.budget == 0 ? index.l() + index.m() : options.budget;

  // Rank used to order directions whose queue keys are equal.
  std::vector<std::size_t> tie_rank(index.l());
  std::iota(tie_rank.begin(), tie_rank.end(), 0);
  if (options.tie_break_seed != 0) {
    std::mt19937_64 rng(options.tie_break_seed);
    std::shuffle(tie_rank.begin(), tie_rank.end(), rng);
  }

  struct Head {
    double key;
    std::size_t rank;
    std::size_t dir;
    std::size_t pos;
  };
  auto lower = [](const Head& a, const Head& b) {
    return a.key < b.key || (a.key == b.key && a.rank > b.rank);
  };

  std::vector<NeighborList> out(queries.count());
  std::vector<std::size_t> evals(queries.count(), 0);
  detail::parallel_for(queries.count(), options.threads, [&](std::size_t q) {
    std::vector<double> centered(dim);
    auto p = queries.point(q);
    for (std::size_t j = 0; j < dim; ++j) { centered[j] = p[j] - index.mean()[j]; }
    std::vector<double> qproj(index.l());
    std::priority_queue<Head, std::vector<Head>, decltype(lower)> queue(lower);
    for (std::size_t i = 0; i < index.l(); ++i) {
      qproj[i] = detail::dot(index.direction(i).data(), centered.data(), dim);
      if (!index.entries(i).empty()) {
        queue.push({index.entries(i)[0].projection - qproj[i], tie_rank[i], i, 0});
      }
    }
    NeighborList& list = out[q];
    list.query_id = q;
    std::unordered_set<std::size_t> seen;
    std::size_t used = 0;
    while (!queue.empty() && used < budget) {
      Head h = queue.top();
      queue.pop();
      const auto& entry = index.entries(h.dir)[h.pos];
      if (seen.insert(entry.id).second) {
        ++used;
        const double d = std::sqrt(
          detail::squared_distance(centered.data(), index.coords(h.dir, h.pos).data(), dim));
        if (list.admits(d, k)) { topk_update(list, {entry.id, d}, k); }
      }
      if (h.pos + 1 < index.entries(h.dir).size()) {
        queue.push({index.entries(h.dir)[h.pos + 1].projection - qproj[h.dir], h.rank, h.dir, h.pos + 1});
      }
    }
    evals[q] = used;
  });
  if (evaluations != nullptr) { *evaluations = std::accumulate(evals.begin(), evals.end(), std::size_t{0}); }
  return out;
}

void save_index(std::ostream& out, const QdafnIndex& index)
{
  out << kQdafnMagic << '\n';
  out << index.dim() << ' ' << index.l() << ' ' << index.m() << ' ' << index.seed() << '\n';
  detail::write_reals(out, index.mean());
  for (std::size_t i = 0; i < index.l(); ++i) {
    detail::write_reals(out, index.direction(i));
    out << index.entries(i).size() << '\n';
    for (std::size_t j = 0; j < index.entries(i).size(); ++j) {
      out << index.entries(i)[j].id << ' ';
      detail::write_real(out, index.entries(i)[j].projection);
      for (double x : index.coords(i, j)) {
        out.put(' ');
        detail::write_real(out, x);
      }
      out.put('\n');
    }
  }
}

QdafnIndex load_qdafn_index(std::istream& in)
{
  detail::LineReader reader(in);
  reader.expect_magic(kQdafnMagic);
  auto header = reader.counts("dim l m seed", 4);
  const std::size_t dim = header[0];
  if (dim == 0) { reader.fail("dimension must be positive"); }
  auto mean = reader.reals("mean", dim);
  std::vector<double> directions;
  std::vector<std::vector<QdafnIndex::Entry>> entries(header[1]);
  std::vector<double> coords;
  for (std::uint64_t i = 0; i < header[1]; ++i) {
    auto dir = reader.reals("direction", dim);
    directions.insert(directions.end(), dir.begin(), dir.end());
    const auto count = reader.counts("entry count", 1)[0];
    for (std::uint64_t j = 0; j < count; ++j) {
      auto line = reader.next("entry");
      auto toks = detail::tokens(line);
      if (toks.size() != dim + 2) { reader.fail("entry: expected id, projection and coordinates"); }
      auto id = detail::parse_int<std::size_t>(toks[0]);
      auto proj = detail::parse_real(toks[1]);
      if (!id || !proj) { reader.fail("entry: bad id or projection"); }
      entries[i].push_back({*id, *proj});
      for (std::size_t t = 2; t < toks.size(); ++t) {
        auto v = detail::parse_real(toks[t]);
        if (!v) { reader.fail("entry: bad coordinate"); }
        coords.push_back(*v);
      }
    }
  }
  try {
    return QdafnIndex(std::move(mean), std::move(directions), std::move(entries), std::move(coords),
                      header[2], header[3]);
  } catch (const invalid_argument& e) {
    throw parse_error(e.what());
  }
}

}  // namespace farhash
