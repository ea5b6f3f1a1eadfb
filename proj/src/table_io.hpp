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

#include <ostream>
#include <span>
#include <unordered_set>
#include <vector>

#include "farhash/error.hpp"
#include "farhash/neighbor_list.hpp"
#include "farhash/parallel.hpp"
#include "farhash/projection.hpp"
#include "text_io.hpp"

namespace farhash::detail {

inline void write_table(std::ostream& out, const ProjectionTable& t)
{
  write_reals(out, t.basis);
  out << t.size() << '\n';
  for (std::size_t i = 0; i < t.size(); ++i) {
    out << t.ids[i];
    for (double x : t.member(i)) {
      out.put(' ');
      write_real(out, x);
    }
    out.put('\n');
  }
}

inline ProjectionTable read_table(LineReader& in, std::size_t dim)
{
  ProjectionTable t;
  t.basis = in.reals("table basis", dim);
  const auto members = in.counts("table member count", 1)[0];
  for (std::uint64_t i = 0; i < members; ++i) {
    auto line = in.next("table member");
    auto toks = tokens(line);
    if (toks.size() != dim + 1) { in.fail("table member: expected id and " + std::to_string(dim) + " coordinates"); }
    auto id = parse_int<std::size_t>(toks[0]);
    if (!id) { in.fail("table member: bad id"); }
    t.ids.push_back(*id);
    for (std::size_t j = 1; j < toks.size(); ++j) {
      auto v = parse_real(toks[j]);
      if (!v) { in.fail("table member: bad coordinate"); }
      t.coords.push_back(*v);
    }
  }
  return t;
}

// Dimension and id-disjointness checks shared by the table-based indexes.
inline void validate_tables(std::size_t dim, std::span<const ProjectionTable> tables)
{
  if (dim == 0) { throw invalid_argument("index dimension must be positive"); }
  std::unordered_set<std::size_t> seen;
  for (const auto& t : tables) {
    if (t.basis.size() != dim || t.coords.size() != t.ids.size() * dim) {
      throw invalid_argument("table dimension does not match index dimension");
    }
    if (t.ids.empty()) { throw invalid_argument("empty table"); }
    for (auto id : t.ids) {
      if (!seen.insert(id).second) {
        throw invalid_argument("reference id " + std::to_string(id) + " stored in more than one table");
      }
    }
  }
}

// Per-query scan of a candidate pool, queries given in the original frame.
template <typename Extra>
std::vector<NeighborList> scan_queries(std::span<const double> mean, const CandidatePool& pool,
                                       const PointSet& queries, std::size_t k, unsigned threads,
                                       Extra&& extra)
{
  if (k == 0) { throw invalid_argument("k must be at least 1"); }
  if (queries.dim() != mean.size()) {
    throw invalid_argument("dimension mismatch: index has " + std::to_string(mean.size()) +
                           ", queries have " + std::to_string(queries.dim()));
  }
  std::vector<NeighborList> out(queries.count());
  parallel_for(queries.count(), threads, [&](std::size_t q) {
    std::vector<double> centered(mean.size());
    auto p = queries.point(q);
    for (std::size_t j = 0; j < centered.size(); ++j) { centered[j] = p[j] - mean[j]; }
    NeighborList& list = out[q];
    list.query_id = q;
    list.entries.reserve(k);
    pool.scan(centered, list, k);
    extra(std::span<const double>(centered), list);
  });
  return out;
}

}  // namespace farhash::detail
