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

// farhash: command-line front end for building and querying furthest-neighbor indexes.

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "farhash/farhash.hpp"

namespace {

using namespace farhash;

// Writes through a sibling temp file so a failed command leaves no partial output.
void write_output(const std::string& path, const std::function<void(std::ostream&)>& emit)
{
  if (path.empty() || path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) { throw error("cannot open '" + path + "' for writing"); }
    try {
      emit(out);
      out.flush();
      if (!out) { throw error("write to '" + path + "' failed"); }
    } catch (...) {
      out.close();
      std::remove(tmp.c_str());
      throw;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw error("cannot move output into '" + path + "': " + ec.message());
  }
}

std::string read_magic(const std::string& path)
{
  std::ifstream in(path);
  if (!in) { throw error("cannot open '" + path + "' for reading"); }
  std::string line;
  std::getline(in, line);
  if (!line.empty() && line.back() == '\r') { line.pop_back(); }
  return line;
}

Algorithm algorithm_for_magic(const std::string& magic)
{
  if (magic == kDrusillaMagic) { return Algorithm::drusilla; }
  if (magic == kGuaranteedMagic) { return Algorithm::guaranteed; }
  if (magic == kQdafnMagic) { return Algorithm::qdafn; }
  throw parse_error("unrecognized index header '" + magic + "'", 1);
}

void write_neighbors(std::ostream& out, const std::vector<NeighborList>& lists)
{
  out << "query_id,rank,ref_id,distance\n";
  for (const auto& list : lists) {
    for (std::size_t r = 0; r < list.entries.size(); ++r) {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof(buf), list.entries[r].distance,
                               std::chars_format::general, 17);
      out << list.query_id << ',' << r + 1 << ',' << list.entries[r].id << ','
          << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)) << '\n';
    }
  }
}

std::vector<std::string> split_list(const std::string& s, char sep)
{
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) { out.push_back(item); }
  }
  return out;
}

// "algo:l:m[:budget]" for drusilla/qdafn, "guaranteed:epsilon:m", "brute".
AlgorithmConfig parse_sweep_point(const std::string& text, double angle_threshold)
{
  auto parts = split_list(text, ':');
  if (parts.empty()) { throw invalid_argument("empty sweep point"); }
  AlgorithmConfig c;
  c.algorithm = parse_algorithm(parts[0]);
  c.angle_threshold = angle_threshold;
  try {
    switch (c.algorithm) {
      case Algorithm::brute:
        if (parts.size() != 1) { throw invalid_argument("brute takes no parameters"); }
        break;
      case Algorithm::drusilla:
      case Algorithm::qdafn:
        if (parts.size() < 3 || parts.size() > 4 || (parts.size() == 4 && c.algorithm != Algorithm::qdafn)) {
          throw invalid_argument("expected " + parts[0] + ":l:m" +
                                 (c.algorithm == Algorithm::qdafn ? "[:budget]" : ""));
        }
        c.l = std::stoul(parts[1]);
        c.m = std::stoul(parts[2]);
        if (parts.size() == 4) { c.budget = std::stoul(parts[3]); }
        if (c.l == 0 || c.m == 0) { throw invalid_argument("l and m must be positive"); }
        break;
      case Algorithm::guaranteed:
        if (parts.size() != 3) { throw invalid_argument("expected guaranteed:epsilon:m"); }
        c.epsilon = std::stod(parts[1]);
        c.m = std::stoul(parts[2]);
        break;
    }
  } catch (const std::logic_error&) {
    throw invalid_argument("bad number in sweep point '" + text + "'");
  }
  return c;
}

struct Flags {
  double decay = 0.7;
  std::size_t n = 0, d = 0, l = 0, m = 0, k = 1, budget = 0, trials = 1, components = 4;
  std::size_t qdafn_l = 0, qdafn_m = 0;
  double epsilon = 0.0;
  double angle_threshold = kDefaultAngleThreshold;
  std::uint64_t seed = 0;
  std::string input, queries, index, out, algo, algos, dist = "ball";
  std::vector<std::string> points;
  bool has_header = false;
  bool single_threaded = false;

  [[nodiscard]] unsigned threads() const { return single_threaded ? 1u : 0u; }
};

int run(int argc, char** argv)
{
  CLI::App app{"Approximate furthest-neighbor search: index building, querying and benchmarking"};
  app.require_subcommand(1);
  Flags f;

  auto* gen = app.add_subcommand("gen", "Generate a synthetic dataset as CSV");
  gen->add_option("--n", f.n, "Number of points")->required()->check(CLI::PositiveNumber);
  gen->add_option("--d", f.d, "Dimension")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", f.seed, "Random seed");
  gen->add_option("--dist", f.dist, "Distribution: ball (uniform unit ball) or mixture")
    ->check(CLI::IsMember({"ball", "mixture"}));
  gen->add_option("--components", f.components, "Mixture components")->check(CLI::PositiveNumber);
  gen->add_option("--decay", f.decay, "Mixture per-axis scale decay")->check(CLI::PositiveNumber);
  gen->add_option("--out", f.out, "Output CSV (default stdout)");

  auto* build = app.add_subcommand("build", "Build an index over a reference CSV");
  build->add_option("--algo", f.algo, "drusilla, guaranteed or qdafn")
    ->required()
    ->check(CLI::IsMember({"drusilla", "guaranteed", "qdafn"}));
  build->add_option("--refs", f.input, "Reference CSV")->required();
  build->add_option("--l", f.l, "Number of tables / projections");
  build->add_option("--m", f.m, "Points per table / projection");
  build->add_option("--epsilon", f.epsilon, "Approximation target in (0, 1) (guaranteed only)");
  build->add_option("--seed", f.seed, "Random seed (qdafn directions)");
  build->add_option("--angle-threshold", f.angle_threshold, "Angle discard threshold in radians");
  build->add_flag("--has-header", f.has_header, "Skip the first CSV line");
  build->add_option("--out", f.out, "Output index file")->required();

  auto* search = app.add_subcommand("search", "Query a saved index");
  search->add_option("--index", f.index, "Index file")->required();
  search->add_option("--queries", f.queries, "Query CSV")->required();
  search->add_option("--k", f.k, "Neighbors per query")->check(CLI::PositiveNumber);
  search->add_option("--algo", f.algo, "Expected index kind; rejected if the file differs")
    ->check(CLI::IsMember({"drusilla", "guaranteed", "qdafn"}));
  search->add_option("--budget", f.budget, "QDAFN distance evaluations per query (default l + m)");
  search->add_flag("--has-header", f.has_header, "Skip the first CSV line");
  search->add_flag("--single-threaded", f.single_threaded, "Search queries on one thread");
  search->add_option("--out", f.out, "Output CSV (default stdout)");

  auto add_bench_flags = [&](CLI::App* cmd) {
    cmd->add_option("--data", f.input, "Dataset CSV (split 70/30 into references and queries)")->required();
    cmd->add_option("--k", f.k, "Neighbors per query")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Split seed (trial t uses seed + t) and QDAFN seed");
    cmd->add_option("--angle-threshold", f.angle_threshold, "Angle discard threshold in radians");
    cmd->add_flag("--has-header", f.has_header, "Skip the first CSV line");
    cmd->add_flag("--single-threaded", f.single_threaded, "Search queries on one thread");
    cmd->add_option("--out", f.out, "Output CSV (default stdout)");
  };

  auto* bench_cmd = app.add_subcommand("bench", "Time and score algorithms on random splits");
  add_bench_flags(bench_cmd);
  bench_cmd->add_option("--algos", f.algos, "Comma-separated list from brute,drusilla,guaranteed,qdafn")
    ->required();
  bench_cmd->add_option("--l", f.l, "DrusillaHash tables (and QDAFN projections unless --qdafn-l)");
  bench_cmd->add_option("--m", f.m, "DrusillaHash table size (and QDAFN list size unless --qdafn-m)");
  bench_cmd->add_option("--qdafn-l", f.qdafn_l, "QDAFN projections");
  bench_cmd->add_option("--qdafn-m", f.qdafn_m, "QDAFN points per projection");
  bench_cmd->add_option("--budget", f.budget, "QDAFN distance evaluations per query (default l + m)");
  bench_cmd->add_option("--epsilon", f.epsilon, "Approximation target for guaranteed");
  bench_cmd->add_option("--trials", f.trials, "Number of random splits")->check(CLI::PositiveNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "Error/runtime sweep on one fixed split");
  add_bench_flags(sweep_cmd);
  sweep_cmd->add_option("--point", f.points,
                        "Sweep point: drusilla:l:m, qdafn:l:m[:budget], guaranteed:eps:m or brute")
    ->required();

  auto* rank = app.add_subcommand("rank-analysis", "Average furthest-first rank of every point vs its norm");
  rank->add_option("--refs", f.input, "Reference CSV")->required();
  rank->add_flag("--has-header", f.has_header, "Skip the first CSV line");
  rank->add_flag("--single-threaded", f.single_threaded, "Use one thread");
  rank->add_option("--out", f.out, "Output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (gen->parsed()) {
      const PointSet points = f.dist == "ball" ? gen_uniform_ball(f.n, f.d, f.seed)
                                               : gen_gaussian_mixture(f.n, f.d, f.components, 4.0, f.decay, f.seed);
      write_output(f.out, [&](std::ostream& out) { save_points(out, points); });
    } else if (build->parsed()) {
      const auto algorithm = parse_algorithm(f.algo);
      if (algorithm == Algorithm::guaranteed) {
        if (build->count("--epsilon") == 0) { throw invalid_argument("--epsilon is required for guaranteed"); }
        if (!(f.epsilon > 0.0 && f.epsilon < 1.0)) { throw invalid_argument("--epsilon must lie in (0, 1)"); }
        if (f.m == 0) { f.m = 1; }
      } else {
        if (build->count("--epsilon") != 0) { throw invalid_argument("--epsilon applies only to guaranteed"); }
        if (f.l == 0 || f.m == 0) { throw invalid_argument("--l and --m are required and must be positive"); }
      }
      const auto refs = mean_center(load_points_file(f.input, f.has_header));
      write_output(f.out, [&](std::ostream& out) {
        switch (algorithm) {
          case Algorithm::drusilla:
            save_index(out, drusilla_build(refs, {f.l, f.m, f.angle_threshold}));
            break;
          case Algorithm::guaranteed: save_index(out, guaranteed_build(refs, f.epsilon, f.m)); break;
          case Algorithm::qdafn: save_index(out, qdafn_build(refs, f.l, f.m, f.seed)); break;
          case Algorithm::brute: break;
        }
      });
    } else if (search->parsed()) {
      const auto kind = algorithm_for_magic(read_magic(f.index));
      if (!f.algo.empty() && parse_algorithm(f.algo) != kind) {
        throw invalid_argument("index file holds a " + to_string(kind) + " index, not " + f.algo);
      }
      const auto queries = load_points_file(f.queries, f.has_header);
      std::ifstream in(f.index);
      std::vector<NeighborList> results;
      switch (kind) {
        case Algorithm::drusilla:
          results = drusilla_search(load_drusilla_index(in), queries, f.k, f.threads());
          break;
        case Algorithm::guaranteed:
          results = guaranteed_search(load_guaranteed_index(in), queries, f.k, f.threads());
          break;
        case Algorithm::qdafn:
          results = qdafn_search(load_qdafn_index(in), queries, f.k, {f.budget, 0, f.threads()});
          break;
        case Algorithm::brute: break;
      }
      write_output(f.out, [&](std::ostream& out) { write_neighbors(out, results); });
    } else if (bench_cmd->parsed()) {
      std::vector<AlgorithmConfig> configs;
      for (const auto& name : split_list(f.algos, ',')) {
        AlgorithmConfig c;
        c.algorithm = parse_algorithm(name);
        c.angle_threshold = f.angle_threshold;
        switch (c.algorithm) {
          case Algorithm::brute: break;
          case Algorithm::drusilla:
            c.l = f.l;
            c.m = f.m;
            if (c.l == 0 || c.m == 0) { throw invalid_argument("drusilla needs positive --l and --m"); }
            break;
          case Algorithm::qdafn:
            c.l = f.qdafn_l != 0 ? f.qdafn_l : f.l;
            c.m = f.qdafn_m != 0 ? f.qdafn_m : f.m;
            c.budget = f.budget;
            if (c.l == 0 || c.m == 0) { throw invalid_argument("qdafn needs positive --qdafn-l/--qdafn-m or --l/--m"); }
            break;
          case Algorithm::guaranteed:
            if (bench_cmd->count("--epsilon") == 0) { throw invalid_argument("--epsilon is required for guaranteed"); }
            c.epsilon = f.epsilon;
            c.m = f.m == 0 ? 1 : f.m;
            break;
        }
        configs.push_back(c);
      }
      const auto data = load_points_file(f.input, f.has_header);
      BenchOptions options{f.k, f.seed, f.trials, f.seed, f.threads()};
      const auto report = bench(data, configs, options, f.input);
      write_output(f.out, [&](std::ostream& out) { write_bench_csv(out, report.rows); });
    } else if (sweep_cmd->parsed()) {
      std::vector<AlgorithmConfig> sweep;
      for (const auto& p : f.points) { sweep.push_back(parse_sweep_point(p, f.angle_threshold)); }
      const auto data = load_points_file(f.input, f.has_header);
      BenchOptions options{f.k, f.seed, 1, f.seed, f.threads()};
      const auto rows = error_runtime_sweep(data, sweep, options);
      write_output(f.out, [&](std::ostream& out) { write_bench_csv(out, rows); });
    } else if (rank->parsed()) {
      const auto records = rank_analysis(load_points_file(f.input, f.has_header), f.threads());
      write_output(f.out, [&](std::ostream& out) { write_rank_csv(out, records); });
    }
  } catch (const std::exception& e) {
    std::cerr << "farhash: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
