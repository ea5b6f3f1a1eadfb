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

// Drives the farhash binary end to end through its file formats.

#include <cmath>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "farhash/drusilla_index.hpp"
#include "farhash/guaranteed_index.hpp"
#include "farhash/point_set.hpp"
#include "oracles.hpp"

#ifndef FARHASH_CLI_PATH
#error "FARHASH_CLI_PATH must point at the farhash executable"
#endif

namespace farhash {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override
  {
    dir_ = fs::temp_directory_path() /
           ("farhash_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::string& args) const
  {
    const std::string cmd = std::string(FARHASH_CLI_PATH) + " " + args + " > " + path("stdout.txt") +
                            " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  static std::string slurp(const std::string& p)
  {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static std::vector<std::vector<std::string>> csv(const std::string& p)
  {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
      std::vector<std::string> row;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) { row.push_back(cell); }
      rows.push_back(row);
    }
    return rows;
  }

  void write(const std::string& name, const std::string& text) const
  {
    std::ofstream(path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, GenShapeDeterminismAndBall)
{
  ASSERT_EQ(run("gen --n 100 --d 10 --seed 1 --out " + path("a.csv")), 0);
  ASSERT_EQ(run("gen --n 100 --d 10 --seed 1 --out " + path("b.csv")), 0);
  EXPECT_EQ(slurp(path("a.csv")), slurp(path("b.csv")));
  auto rows = csv(path("a.csv"));
  ASSERT_EQ(rows.size(), 100u);
  for (const auto& r : rows) { EXPECT_EQ(r.size(), 10u); }
  auto ps = load_points_file(path("a.csv"));
  for (std::size_t i = 0; i < ps.count(); ++i) { EXPECT_LE(norm(ps.point(i)), 1.0); }
  EXPECT_EQ(ps, gen_uniform_ball(100, 10, 1));
}

TEST_F(Cli, BuildAndSearchFourPointExample)
{
  write("refs.csv", "6,0\n-2,1\n-2,-1\n-2,0\n");
  write("queries.csv", "0,10\n6,0\n");
  ASSERT_EQ(run("build --algo drusilla --l 1 --m 2 --refs " + path("refs.csv") + " --out " + path("idx.txt")), 0);
  ASSERT_EQ(run("search --index " + path("idx.txt") + " --queries " + path("queries.csv") +
                " --k 1 --out " + path("res.csv")),
            0);
  auto rows = csv(path("res.csv"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"query_id", "rank", "ref_id", "distance"}));
  EXPECT_EQ(rows[1][0], "0");
  EXPECT_EQ(rows[1][2], "0");
  EXPECT_NEAR(std::stod(rows[1][3]), std::sqrt(136.0), 1e-12);
  EXPECT_EQ(rows[2][2], "3");
  EXPECT_EQ(std::stod(rows[2][3]), 8.0);

  std::ifstream idx(path("idx.txt"));
  EXPECT_EQ(load_drusilla_index(idx), drusilla_build(mean_center(load_points_file(path("refs.csv"))), {1, 2}));
}

TEST_F(Cli, SearchOutputOrderingAndOnePointIndex)
{
  write("one.csv", "1,2,3\n");
  ASSERT_EQ(run("gen --n 20 --d 3 --seed 2 --out " + path("q.csv")), 0);
  ASSERT_EQ(run("build --algo guaranteed --epsilon 0.5 --m 1 --refs " + path("one.csv") + " --out " + path("g.txt")), 0);
  ASSERT_EQ(run("search --index " + path("g.txt") + " --queries " + path("q.csv") + " --k 1 --out " + path("r.csv")), 0);
  EXPECT_EQ(csv(path("r.csv")).size(), 21u);

  ASSERT_EQ(run("gen --n 300 --d 3 --seed 3 --out " + path("refs.csv")), 0);
  ASSERT_EQ(run("build --algo qdafn --l 6 --m 8 --seed 4 --refs " + path("refs.csv") + " --out " + path("qd.txt")), 0);
  ASSERT_EQ(run("search --index " + path("qd.txt") + " --queries " + path("q.csv") + " --k 4 --out " + path("r2.csv")), 0);
  auto rows = csv(path("r2.csv"));
  ASSERT_EQ(rows.size(), 1u + 20u * 4u);
  for (std::size_t i = 2; i < rows.size(); ++i) {
    if (rows[i][0] == rows[i - 1][0]) { EXPECT_LE(std::stod(rows[i][3]), std::stod(rows[i - 1][3])); }
  }
}

TEST_F(Cli, ValidationFailuresLeaveNoOutput)
{
  write("refs.csv", "6,0\n-2,1\n-2,-1\n-2,0\n");
  EXPECT_NE(run("build --algo guaranteed --epsilon 1.0 --refs " + path("refs.csv") + " --out " + path("x.txt")), 0);
  EXPECT_FALSE(fs::exists(path("x.txt")));
  EXPECT_FALSE(fs::exists(path("x.txt.tmp")));
  EXPECT_NE(run("build --algo guaranteed --refs " + path("refs.csv") + " --out " + path("x.txt")), 0);
  EXPECT_NE(run("build --algo drusilla --l 2 --refs " + path("refs.csv") + " --out " + path("x.txt")), 0);
  EXPECT_NE(run("build --algo drusilla --l 0 --m 1 --refs " + path("refs.csv") + " --out " + path("x.txt")), 0);
  EXPECT_FALSE(fs::exists(path("x.txt")));

  write("ragged.csv", "1,2\n3\n");
  EXPECT_NE(run("build --algo drusilla --l 1 --m 1 --refs " + path("ragged.csv") + " --out " + path("x.txt")), 0);
  EXPECT_NE(slurp(path("stderr.txt")).find("line 2"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("x.txt")));

  // Magic mismatch between the file and the requested algorithm.
  ASSERT_EQ(run("build --algo drusilla --l 1 --m 2 --refs " + path("refs.csv") + " --out " + path("d.txt")), 0);
  EXPECT_NE(run("search --algo qdafn --index " + path("d.txt") + " --queries " + path("refs.csv") + " --out " + path("y.csv")), 0);
  EXPECT_FALSE(fs::exists(path("y.csv")));
  write("junk.txt", "NOT-AN-INDEX\n");
  EXPECT_NE(run("search --index " + path("junk.txt") + " --queries " + path("refs.csv")), 0);
  EXPECT_NE(run("frobnicate"), 0);
}

TEST_F(Cli, CloudParametersBoundIndexSize)
{
  ASSERT_EQ(run("gen --dist mixture --n 2048 --d 10 --seed 5 --out " + path("cloud.csv")), 0);
  ASSERT_EQ(run("build --algo drusilla --l 2 --m 1 --refs " + path("cloud.csv") + " --out " + path("i.txt")), 0);
  std::ifstream in(path("i.txt"));
  auto index = load_drusilla_index(in);
  EXPECT_LE(index.tables().size(), 2u);
  EXPECT_LE(index.candidate_count(), 2u);
}

TEST_F(Cli, BenchRows)
{
  ASSERT_EQ(run("gen --n 400 --d 5 --seed 1 --out " + path("d.csv")), 0);
  ASSERT_EQ(run("bench --data " + path("d.csv") +
                " --algos brute,drusilla,qdafn,guaranteed --l 3 --m 2 --epsilon 0.5 --trials 10 --seed 3"
                " --single-threaded --out " + path("b.csv")),
            0);
  auto rows = csv(path("b.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"algorithm", "l", "m", "budget", "setup_s", "search_s",
                                                "candidates", "mean_eps", "max_eps"}));
  EXPECT_EQ(rows[1][0], "brute");
  EXPECT_EQ(rows[1][7], "0");
  EXPECT_EQ(rows[1][8], "0");
  EXPECT_EQ(rows[2][6], "6");
  EXPECT_EQ(rows[3][3], "5");

  // Non-timing columns are reproducible.
  ASSERT_EQ(run("bench --data " + path("d.csv") +
                " --algos brute,drusilla,qdafn,guaranteed --l 3 --m 2 --epsilon 0.5 --trials 10 --seed 3"
                " --out " + path("b2.csv")),
            0);
  auto again = csv(path("b2.csv"));
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t c : {0u, 1u, 2u, 3u, 6u, 7u, 8u}) { EXPECT_EQ(rows[r][c], again[r][c]); }
  }
  EXPECT_NE(run("bench --data " + path("d.csv") + " --algos guaranteed"), 0);
}

TEST_F(Cli, SweepRows)
{
  ASSERT_EQ(run("gen --n 600 --d 4 --seed 1 --out " + path("d.csv")), 0);
  ASSERT_EQ(run("sweep --data " + path("d.csv") +
                " --point drusilla:6:2 --point drusilla:12:4 --point qdafn:20:20:40 --point brute --out " +
                path("s.csv")),
            0);
  EXPECT_EQ(csv(path("s.csv")).size(), 5u);
  EXPECT_NE(run("sweep --data " + path("d.csv") + " --point drusilla:6"), 0);
}

TEST_F(Cli, RankAnalysis)
{
  write("r.csv", "0\n1\n3\n");
  ASSERT_EQ(run("rank-analysis --refs " + path("r.csv") + " --out " + path("o.csv")), 0);
  auto rows = csv(path("o.csv"));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"ref_id", "norm", "avg_rank"}));
  EXPECT_DOUBLE_EQ(std::stod(rows[1][2]), 2.0);
  EXPECT_DOUBLE_EQ(std::stod(rows[2][2]), 7.0 / 3.0);
  EXPECT_DOUBLE_EQ(std::stod(rows[3][2]), 5.0 / 3.0);
  double sum = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) { sum += std::stod(rows[i][2]); }
  EXPECT_NEAR(sum / 3.0, 2.0, 1e-15);

  write("single.csv", "1,2\n");
  EXPECT_NE(run("rank-analysis --refs " + path("single.csv") + " --out " + path("o2.csv")), 0);
  EXPECT_FALSE(fs::exists(path("o2.csv")));
}

}  // namespace
}  // namespace farhash
