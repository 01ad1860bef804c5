// Copyright 2026 The ifpmine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ifpmine/cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ifpmine/bench.hpp"
#include "test_support.hpp"

namespace ifpmine {
namespace {

using testing::data_path;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "ifpmine");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::main_with_args(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

// Drops the elapsed_ms column so that rows from separate runs compare equal.
std::vector<std::string> without_elapsed(const std::string& csv) {
  std::vector<std::string> out;
  for (auto line : lines(csv)) {
    std::vector<std::string> cells;
    std::istringstream row(line);
    for (std::string c; std::getline(row, c, ',');) cells.push_back(c);
    if (cells.size() > 3) cells.erase(cells.begin() + 3);
    std::string joined;
    for (const auto& c : cells) joined += c + ",";
    out.push_back(joined);
  }
  return out;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path.string();
}

TEST(Cli, MineMiiWithLabels) {
  const auto r = invoke({"mine-mii", "--input", data_path("mii_example.fimi"),
                         "--min-sup", "2", "--labels",
                         data_path("mii_example_labels.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto got = lines(r.out);
  ASSERT_EQ(got.size(), 8u);
  EXPECT_EQ(got.front(), "F (1)");
  EXPECT_NE(r.out.find("A B C (1)"), std::string::npos);
  EXPECT_NE(r.out.find("A E (0)"), std::string::npos);
}

TEST(Cli, AlgorithmsPrintTheSameLines) {
  std::string first;
  for (const char* algo : {"ifp", "apriori", "oracle"}) {
    const auto r = invoke({"mine-mii", "--input", data_path("mii_example.fimi"),
                           "--min-sup", "22%", "--algo", algo});
    ASSERT_EQ(r.code, 0) << algo << r.err;
    if (first.empty()) first = r.out;
    EXPECT_EQ(r.out, first) << algo;
  }
}

TEST(Cli, MineMlmsJson) {
  const auto r = invoke({"mine-mlms", "--input", data_path("mlms_example.fimi"),
                         "--thresholds", "4,4,3,2,1", "--format", "json",
                         "--labels", data_path("mlms_example_labels.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc.size(), 18u);
  const auto& last = doc.back();
  EXPECT_EQ(last["labels"],
            nlohmann::json::array({"A", "C", "D", "T", "W"}));
  EXPECT_EQ(last["support"], 1);
}

TEST(Cli, MineMlmsText) {
  const auto r = invoke({"mine-mlms", "--input", data_path("mlms_example.fimi"),
                         "--thresholds", "4,4,3,2,1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out).size(), 18u);
}

TEST(Cli, OutFlagWritesFile) {
  const auto path =
      (std::filesystem::temp_directory_path() / "ifpmine_cli_out.txt").string();
  const auto r = invoke({"mine-mii", "--input", data_path("mii_example.fimi"),
                         "--min-sup", "2", "--out", path});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(lines(buf.str()).size(), 8u);
}

TEST(Cli, CheckAgrees) {
  const auto r = invoke({"check", "--input", data_path("mii_example.fimi"),
                         "--min-sup", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("agree: 8", 0), 0u) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, 2);
  EXPECT_EQ(invoke({"mine-mii", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"mine-mii", "--input", data_path("mii_example.fimi")}).code, 2);
  EXPECT_EQ(invoke({"mine-mii", "--input", data_path("mii_example.fimi"),
                    "--min-sup", "abc"})
                .code,
            2);
  EXPECT_EQ(invoke({"mine-mii", "--input", data_path("mii_example.fimi"),
                    "--min-sup", "2", "--algo", "fp"})
                .code,
            2);
  EXPECT_EQ(invoke({"mine-mlms", "--input", data_path("mlms_example.fimi"),
                    "--thresholds", "3,0"})
                .code,
            2);
  EXPECT_EQ(invoke({"gen", "--items", "3", "--transactions", "3",
                    "--density", "2"})
                .code,
            2);
}

TEST(Cli, HelpExitsCleanly) {
  const auto r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("mine-mii"), std::string::npos);
}

TEST(Cli, IoErrors) {
  EXPECT_EQ(invoke({"mine-mii", "--input", "/nonexistent/x.fimi", "--min-sup",
                    "2"})
                .code,
            3);
  const auto bad = temp_file("ifpmine_bad.fimi", "1 2\n3 -4\n");
  const auto r = invoke({"mine-mii", "--input", bad, "--min-sup", "1"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
}

TEST(Cli, OracleGuard) {
  // Thirty frequent items that never share a transaction.
  std::string rows;
  for (int i = 0; i < 30; ++i) {
    rows += std::to_string(i) + "\n" + std::to_string(i) + "\n";
  }
  const auto wide = temp_file("ifpmine_wide.fimi", rows);
  EXPECT_EQ(invoke({"check", "--input", wide, "--min-sup", "2"}).code, 4);
  EXPECT_EQ(invoke({"mine-mii", "--input", wide, "--min-sup", "2", "--algo",
                    "oracle"})
                .code,
            4);
  // The tree miner has no such limit.
  const auto r = invoke({"mine-mii", "--input", wide, "--min-sup", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(lines(r.out).size(), 435u);
}

TEST(Cli, GenMatchesLibrary) {
  const auto r = invoke({"gen", "--items", "5", "--transactions", "4",
                         "--density", "0.5", "--seed", "7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 4\n0 2 4\n1 3 4\n1 4\n");
}

TEST(Cli, BenchCsvShape) {
  const auto r = invoke({"bench", "--inputs", data_path("mii_example.fimi"),
                         "--algos", "ifp,apriori", "--thresholds", "2,3,4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "dataset,algorithm,threshold,elapsed_ms,itemsets,peak_nodes");
  const auto stripped = without_elapsed(r.out);
  const std::string id = data_path("mii_example.fimi");
  EXPECT_EQ(stripped[1].rfind(id + ",ifp,2,8,", 0), 0u) << stripped[1];
  EXPECT_EQ(stripped[4].rfind(id + ",apriori,2,8,", 0), 0u) << stripped[4];
}

TEST(Cli, BenchSameDatasetTwiceAgrees) {
  const auto r = invoke({"bench", "--inputs",
                         data_path("mii_example.fimi") + "," +
                             data_path("mii_example.fimi"),
                         "--algos", "ifp,oracle", "--thresholds", "1,2,3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = without_elapsed(r.out);
  ASSERT_EQ(rows.size(), 13u);
  for (std::size_t i = 1; i <= 6; ++i) EXPECT_EQ(rows[i], rows[i + 6]);
}

TEST(Cli, BenchJobsDoNotChangeRows) {
  const std::vector<std::string> base = {
      "bench", "--inputs",
      data_path("mii_example.fimi") + "," + data_path("mlms_example.fimi"), "--algos",
      "ifp,apriori,oracle", "--thresholds", "1,2,50%"};
  auto one = base;
  one.insert(one.end(), {"--jobs", "1"});
  auto four = base;
  four.insert(four.end(), {"--jobs", "4"});
  const auto a = invoke(one);
  const auto b = invoke(four);
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(without_elapsed(a.out), without_elapsed(b.out));
}

TEST(Cli, BenchMlmsVectors) {
  const auto r = invoke({"bench", "--inputs", data_path("mlms_example.fimi"),
                         "--algos", "mlms,mlms-oracle", "--thresholds",
                         "4:4:3:2:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = without_elapsed(r.out);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_NE(rows[1].find(",4:4:3:2:1,18,"), std::string::npos) << rows[1];
  EXPECT_NE(rows[2].find(",4:4:3:2:1,18,"), std::string::npos) << rows[2];
}

TEST(Cli, BenchRejectsUnknownAlgorithm) {
  EXPECT_EQ(invoke({"bench", "--inputs", data_path("mii_example.fimi"), "--algos",
                    "eclat", "--thresholds", "2"})
                .code,
            2);
}

TEST(BenchSweep, TimedOutCellsReportMinusOne) {
  const std::vector<BenchDataset> data = {
      {"big", gen_synthetic({40, 3000, 0.5, 5})}};
  BenchConfig cfg;
  cfg.algorithms = {"apriori"};
  cfg.thresholds = {"1"};
  cfg.timeout_seconds = 1e-6;
  const auto rows = bench_sweep(data, cfg);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].status, BenchRecord::Status::kTimeout);
  std::ostringstream os;
  write_bench_csv(os, rows);
  EXPECT_EQ(lines(os.str()).back(), "big,apriori,1,-1,-1,-1");
}

}  // namespace
}  // namespace ifpmine
