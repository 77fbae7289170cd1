// Copyright 2026 The msqsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "msqsp/circuit.hpp"

namespace msqsp::cli {
namespace {

constexpr double kPi = std::numbers::pi;
namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> rows(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    out.push_back(cells);
  }
  return out;
}

std::string value_of(const std::string& text, const std::string& key) {
  for (const auto& r : rows(text)) {
    if (r.size() == 2 && r[0] == key) return r[1];
  }
  return {};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("msqsp_cli_" + std::string(::testing::UnitTest::GetInstance()
                                           ->current_test_info()
                                           ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(ParseAngle, Forms) {
  EXPECT_DOUBLE_EQ(*parse_angle("0.3"), 0.3);
  EXPECT_DOUBLE_EQ(*parse_angle("pi"), kPi);
  EXPECT_DOUBLE_EQ(*parse_angle("-pi"), -kPi);
  EXPECT_DOUBLE_EQ(*parse_angle("pi/2"), kPi / 2);
  EXPECT_DOUBLE_EQ(*parse_angle("3pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(*parse_angle("3*pi/4"), 3 * kPi / 4);
  EXPECT_DOUBLE_EQ(*parse_angle("2pi"), 2 * kPi);
  EXPECT_DOUBLE_EQ(*parse_angle("-1e-3"), -1e-3);
  EXPECT_FALSE(parse_angle("pie").has_value());
  EXPECT_FALSE(parse_angle("pi/0").has_value());
  EXPECT_FALSE(parse_angle("").has_value());
  EXPECT_FALSE(parse_angle("1.0x").has_value());
}

TEST(CrotAnglesCommand, MergedThreeQubits) {
  const Result r = run_cli({"crot-angles", "--n", "3", "--alpha", "-pi", "--merged"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(std::stod(value_of(r.out, "tau")), kPi / 3, 1e-11);
  int count = 0;
  for (const auto& row : rows(r.out)) count += row[0].rfind("phi~_", 0) == 0;
  EXPECT_EQ(count, 7);
}

TEST(CrotAnglesCommand, ZeroAngleGivesZeros) {
  const Result r = run_cli({"crot-angles", "--n", "2", "--alpha", "0"});
  ASSERT_EQ(r.code, kExitOk);
  for (const auto& row : rows(r.out)) {
    if (row[0].rfind("phi_", 0) == 0) {
      EXPECT_EQ(std::stod(row[1]), 0.0);
    }
  }
}

TEST(CrotAnglesCommand, SevenQubitsFourteenPulses) {
  const Result r = run_cli({"crot-angles", "--n", "7", "--alpha", "pi"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(value_of(r.out, "L"), "14");
}

TEST_F(CliFiles, CompileCrotAndVerify) {
  const std::string file = path("crot.json");
  Result r = run_cli({"compile", "crot", "--n", "4", "--alpha", "pi/2", "--out", file});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(value_of(r.out, "ms_gates"), "8");
  std::ifstream in(file);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(deserialize(ss.str()).ms_count(), 8u);

  r = run_cli({"verify", "--circuit", file, "--target", "crot", "--alpha", "pi/2"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_LE(std::stod(value_of(r.out, "phase_distance")), 1e-6);
}

TEST_F(CliFiles, CompileToffoli) {
  const std::string file = path("toffoli.json");
  Result r = run_cli({"compile", "toffoli", "--n", "3", "--out", file});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(value_of(r.out, "ms_gates"), "8");
  EXPECT_EQ(value_of(r.out, "qubits"), "4");
  r = run_cli({"verify", "--circuit", file, "--target", "toffoli"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_LE(std::stod(value_of(r.out, "ancilla_leakage")), 1e-10);
}

TEST_F(CliFiles, WeightedZerosIsIdentity) {
  const std::string file = path("weighted.json");
  Result r = run_cli({"compile", "weighted", "--n", "3", "--alphas", "0,0,0", "--out", file});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  r = run_cli({"verify", "--circuit", file, "--target", "crot", "--alpha", "0"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  r = run_cli({"verify", "--circuit", file, "--target", "weighted", "--alphas", "0,0,0"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST_F(CliFiles, IdentityFailsAgainstRotation) {
  const std::string file = path("identity.json");
  std::ofstream(file) << serialize(Circuit(3));
  const Result r = run_cli({"verify", "--circuit", file, "--target", "crot", "--alpha", "pi"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
}

TEST_F(CliFiles, ReferenceRowVerifiesAtLooseTolerance) {
  const std::string file = path("row.json");
  const std::vector<double> row = {-1.855, -2.118, -0.525, -2.118, -1.855, -kPi, 0.0};
  std::ofstream(file) << serialize(build_from_merged(3, kPi / 3, -kPi / 3, row));
  Result r = run_cli({"verify", "--circuit", file, "--target", "crot", "--alpha", "-pi",
                      "--tolerance", "1e-2"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
}

TEST_F(CliFiles, TextFormat) {
  const std::string file = path("crot.txt");
  const Result r = run_cli(
      {"compile", "crot", "--n", "3", "--alpha", "pi", "--format", "text", "--out", file});
  ASSERT_EQ(r.code, kExitOk);
  std::ifstream in(file);
  std::string line;
  int ms_lines = 0;
  while (std::getline(in, line)) ms_lines += line.rfind("ms ", 0) == 0;
  EXPECT_EQ(ms_lines, 6);
}

TEST(SeriesCommand, SevenQubitShape) {
  const Result r = run_cli({"series", "--n", "7", "--alpha", "pi", "--points", "101"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.err.find("condition number"), std::string::npos);
  const auto table = rows(r.out);
  ASSERT_GE(table.size(), 101u + 1 + 1 + 1 + 7);
  EXPECT_EQ(table[0], (std::vector<std::string>{"theta", "A", "B", "C", "D"}));
  // First and last grid rows are theta = -pi and pi.
  for (int col = 1; col <= 4; ++col) {
    EXPECT_NEAR(std::stod(table[1][col]), std::stod(table[101][col]), 1e-10);
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i].empty() && table[i][0] == "q") start = i + 1;
  }
  ASSERT_GT(start, 0u);
  for (int q = 0; q < 7; ++q) {
    const auto& row = table[start + q];
    EXPECT_NEAR(std::stod(row[2]), q == 6 ? 0.0 : 1.0, 1e-9);
  }
}

TEST(SeriesCommand, IdentityIsFlat) {
  const Result r = run_cli({"series", "--n", "2", "--alpha", "0", "--points", "33"});
  ASSERT_EQ(r.code, kExitOk);
  const auto table = rows(r.out);
  for (int i = 1; i <= 33; ++i) EXPECT_NEAR(std::stod(table[i][1]), 1.0, 1e-14);
}

TEST(TableCommand, RowsVerify) {
  const Result r = run_cli({"table", "--round"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto table = rows(r.out);
  ASSERT_EQ(table.size(), 5u);
  for (int n = 3; n <= 6; ++n) {
    const auto& row = table[n - 2];
    EXPECT_EQ(row[0], std::to_string(n));
    std::istringstream angles(row[2]);
    std::vector<double> values;
    double v;
    while (angles >> v) values.push_back(v);
    ASSERT_EQ(values.size(), static_cast<std::size_t>(2 * n + 1));
    EXPECT_NEAR(values[2 * n - 1], -3.142, 1e-12);
    EXPECT_EQ(values[2 * n], 0.0);
    EXPECT_LE(std::stod(row[3]), 1e-6);
  }
}

TEST(Usage, Errors) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"crot-angles", "--alpha", "pi"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"crot-angles", "--n", "1"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"crot-angles", "--n", "3", "--alpha", "banana"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"compile", "weighted", "--n", "3", "--alphas", "0,1"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--circuit", "/nonexistent/x.json", "--target", "crot"}).code,
            kExitUsage);
  EXPECT_EQ(run_cli({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace msqsp::cli
