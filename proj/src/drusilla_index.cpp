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

#include "farhash/drusilla_index.hpp"

#include <istream>
#include <ostream>

#include "farhash/error.hpp"
#include "table_builder.hpp"
#include "table_io.hpp"
#include "text_io.hpp"

namespace farhash {

DrusillaIndex::DrusillaIndex(std::vector<double> mean, std::vector<ProjectionTable> tables,
                             std::size_t l, std::size_t m)
  : mean_(std::move(mean)), tables_(std::move(tables)), l_(l), m_(m)
{
  detail::validate_tables(mean_.size(), tables_);
  pool_ = CandidatePool(mean_.size(), tables_);
}

DrusillaIndex drusilla_build(const CenteredPointSet& refs, const DrusillaParams& params)
{
  if (params.l == 0 || params.m == 0) { throw invalid_argument("l and m must both be at least 1"); }
  if (refs.count() == 0) { throw invalid_argument("cannot build an index over zero points"); }
  detail::TableBuilder builder(refs);
  std::vector<ProjectionTable> tables;
  for (std::size_t i = 0; i < params.l; ++i) {
    auto table = builder.next_table(params.m, params.angle_threshold);
    if (!table) { break; }
    tables.push_back(std::move(*table));
  }
  return DrusillaIndex(refs.mean, std::move(tables), params.l, params.m);
}

std::vector<NeighborList> drusilla_search(const DrusillaIndex& index, const PointSet& queries,
                                          std::size_t k, unsigned threads)
{
  if (index.tables().empty()) {
    throw invalid_argument("index has no tables (all reference points coincide); use brute-force search");
  }
  return detail::scan_queries(index.mean(), index.pool(), queries, k, threads,
                              [](std::span<const double>, NeighborList&) {});
}

void save_index(std::ostream& out, const DrusillaIndex& index)
{
  out << kDrusillaMagic << '\n';
  out << index.dim() << ' ' << index.l() << ' ' << index.m() << ' ' << index.tables().size() << '\n';
  detail::write_reals(out, index.mean());
  for (const auto& t : index.tables()) { detail::write_table(out, t); }
}

DrusillaIndex load_drusilla_index(std::istream& in)
{
  detail::LineReader reader(in);
  reader.expect_magic(kDrusillaMagic);
  auto header = reader.counts("dim l m table_count", 4);
  const std::size_t dim = header[0];
  if (dim == 0) { reader.fail("dimension must be positive"); }
  auto mean = reader.reals("mean", dim);
  std::vector<ProjectionTable> tables;
  for (std::uint64_t i = 0; i < header[3]; ++i) { tables.push_back(detail::read_table(reader, dim)); }
  try {
    return DrusillaIndex(std::move(mean), std::move(tables), header[1], header[2]);
  } catch (const invalid_argument& e) {
    throw parse_error(e.what());
  }
}

}  // namespace farhash
