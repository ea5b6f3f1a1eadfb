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

#include "farhash/guaranteed_index.hpp"

#include <cmath>
#include <istream>
#include <ostream>

#include "farhash/error.hpp"
#include "table_builder.hpp"
#include "table_io.hpp"
#include "text_io.hpp"

namespace farhash {

GuaranteedIndex::GuaranteedIndex(std::vector<double> mean, std::vector<ProjectionTable> tables,
                                 double epsilon, double max_norm, std::size_t m,
                                 std::optional<ShrugPoint> shrug)
  : mean_(std::move(mean)),
    tables_(std::move(tables)),
    epsilon_(epsilon),
    max_norm_(max_norm),
    m_(m),
    shrug_(std::move(shrug))
{
  if (!(epsilon_ > 0.0 && epsilon_ < 1.0)) { throw invalid_argument("epsilon must lie in (0, 1)"); }
  if (m_ == 0) { throw invalid_argument("m must be at least 1"); }
  detail::validate_tables(mean_.size(), tables_);
  if (shrug_ && shrug_->coords.size() != mean_.size()) {
    throw invalid_argument("shrug point dimension does not match index dimension");
  }
  pool_ = CandidatePool(mean_.size(), tables_);
}

GuaranteedIndex guaranteed_build(const CenteredPointSet& refs, double epsilon, std::size_t m)
{
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw invalid_argument("epsilon must lie strictly between 0 and 1");
  }
  if (m == 0) { throw invalid_argument("m must be at least 1"); }
  if (refs.count() == 0) { throw invalid_argument("cannot build an index over zero points"); }

  detail::TableBuilder builder(refs);
  const double cutoff = (epsilon / 15.0) * builder.max_norm();
  std::vector<ProjectionTable> tables;
  while (builder.max_available_norm() > cutoff) {
    auto table = builder.next_table(m, std::nullopt);
    if (!table) { break; }
    tables.push_back(std::move(*table));
  }

  std::optional<ShrugPoint> shrug;
  if (auto id = builder.largest_uncollected()) {
    auto p = refs.point(*id);
    shrug = ShrugPoint{*id, std::vector<double>(p.begin(), p.end())};
  }
  return GuaranteedIndex(refs.mean, std::move(tables), epsilon, builder.max_norm(), m,
                         std::move(shrug));
}

std::vector<NeighborList> guaranteed_search(const GuaranteedIndex& index, const PointSet& queries,
                                            std::size_t k, unsigned threads)
{
  const auto& shrug = index.shrug();
  return detail::scan_queries(
    index.mean(), index.pool(), queries, k, threads,
    [&](std::span<const double> query, NeighborList& list) {
      if (!shrug) { return; }
      const double d =
        std::sqrt(detail::squared_distance(query.data(), shrug->coords.data(), query.size()));
      if (list.admits(d, k)) { topk_update(list, {shrug->id, d}, k); }
    });
}

void save_index(std::ostream& out, const GuaranteedIndex& index)
{
  out << kGuaranteedMagic << '\n';
  out << index.dim() << ' ' << index.m() << ' ' << index.tables().size() << '\n';
  const double params[] = {index.epsilon(), index.delta(), index.max_norm()};
  detail::write_reals(out, params);
  detail::write_reals(out, index.mean());
  for (const auto& t : index.tables()) { detail::write_table(out, t); }
  if (const auto& s = index.shrug()) {
    out << s->id;
    for (double x : s->coords) {
      out.put(' ');
      detail::write_real(out, x);
    }
    out.put('\n');
  } else {
    out << "none\n";
  }
}

GuaranteedIndex load_guaranteed_index(std::istream& in)
{
  detail::LineReader reader(in);
  reader.expect_magic(kGuaranteedMagic);
  auto header = reader.counts("dim m table_count", 3);
  const std::size_t dim = header[0];
  if (dim == 0) { reader.fail("dimension must be positive"); }
  auto params = reader.reals("epsilon delta max_norm", 3);
  auto mean = reader.reals("mean", dim);
  std::vector<ProjectionTable> tables;
  for (std::uint64_t i = 0; i < header[2]; ++i) { tables.push_back(detail::read_table(reader, dim)); }

  std::optional<ShrugPoint> shrug;
  auto line = reader.next("shrug point");
  auto toks = detail::tokens(line);
  if (!(toks.size() == 1 && toks[0] == "none")) {
    if (toks.size() != dim + 1) { reader.fail("shrug point: expected 'none' or id and coordinates"); }
    auto id = detail::parse_int<std::size_t>(toks[0]);
    if (!id) { reader.fail("shrug point: bad id"); }
    ShrugPoint s{*id, {}};
    for (std::size_t j = 1; j < toks.size(); ++j) {
      auto v = detail::parse_real(toks[j]);
      if (!v) { reader.fail("shrug point: bad coordinate"); }
      s.coords.push_back(*v);
    }
    shrug = std::move(s);
  }
  try {
    return GuaranteedIndex(std::move(mean), std::move(tables), params[0], params[2], header[1],
                           std::move(shrug));
  } catch (const invalid_argument& e) {
    throw parse_error(e.what());
  }
}

}  // namespace farhash
