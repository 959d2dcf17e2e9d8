// Copyright 2026 The qdeg Authors
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

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"
#include "oracles.hpp"
#include "qdeg/io.hpp"

namespace qdeg::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::string line;
  std::getline(in, *header);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

const std::string kCert = QDEG_FIXTURE_DIR "/td_qubit_antidegrading_certificate.json";
const std::string kBadCert = QDEG_FIXTURE_DIR "/td_qubit_antidegrading_certificate_corrupted.json";

TEST(CliDecide, ExitCodes) {
  Result yes = run_cli({"decide", "--channel", "td:d=2,t=-1", "--mode", "degradable"});
  EXPECT_EQ(yes.code, kExitYes) << yes.err;
  EXPECT_EQ(Json::parse(yes.out)["status"], "YES");

  Result no = run_cli({"decide", "--channel", "td:d=2,t=0.2", "--mode", "degradable"});
  EXPECT_EQ(no.code, kExitNo) << no.err;
  EXPECT_EQ(Json::parse(no.out)["status"], "NO");

  Result inc = run_cli({"decide", "--channel", "td:d=2,t=-2/3", "--mode", "antidegradable"});
  EXPECT_EQ(inc.code, kExitInconclusive) << inc.err;
  EXPECT_EQ(Json::parse(inc.out)["status"], "INCONCLUSIVE");

  Result found = run_cli({"decide", "--channel", "td:d=2,t=-2/3", "--mode", "antidegradable",
                          "--search", "--seed", "7"});
  EXPECT_EQ(found.code, kExitYes) << found.err;

  // Just outside the antidegradable interval: no channel solution exists, and
  // without uniqueness the verdict cannot be NO.
  Result outside = run_cli({"decide", "--channel", "td:d=2,t=-0.6667", "--mode",
                            "antidegradable", "--search", "--seed", "7", "--restarts", "2",
                            "--max-iters", "300"});
  EXPECT_EQ(outside.code, kExitInconclusive) << outside.err;
}

TEST(CliDecide, InputErrors) {
  EXPECT_EQ(run_cli({"decide", "--channel", "td:d=2,t=0.9"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"decide", "--channel", "bogus"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"decide", "--channel", "td:d=2,t=0", "--mode", "sideways"}).code,
            kExitInputError);
  EXPECT_EQ(run_cli({"decide", "--channel", "td:d=2,t=0", "--search"}).code, kExitInputError);
  EXPECT_EQ(run_cli({"decide"}).code, kExitInputError);
  EXPECT_EQ(run_cli({}).code, kExitInputError);
  EXPECT_EQ(run_cli({"decide", "--channel", "td:d=2,t=0", "--tol-profile", "nope"}).code,
            kExitInputError);
  EXPECT_EQ(run_cli({"decide", "--channel", "td:d=2,t=-2/3", "--complement", "td-comp:t=0.1"})
                .code,
            kExitInputError);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(CliSweep, QubitCurvesMatchClosedForms) {
  Result r = run_cli({"sweep-eigs", "--d", "2", "--start", "-0.98", "--stop", "1/3", "--points",
                      "25", "--jobs", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header.rfind("t,lambda_1,", 0), 0u);
  ASSERT_EQ(rows.size(), 25u);
  for (const auto& row : rows) {
    ASSERT_EQ(row.size(), 9u);
    const auto l = oracle::td_qubit_candidate_eigs(row[0]);
    for (std::size_t k = 1; k < row.size(); ++k) {
      double best = 1e9;
      for (double x : l) best = std::min(best, std::abs(row[k] - x));
      EXPECT_LT(best, 1e-8) << "t=" << row[0];
    }
  }
}

TEST(CliSweep, ZeroRowAndQutrit) {
  Result r = run_cli({"sweep-eigs", "--d", "2", "--start", "0", "--stop", "0", "--points", "1"});
  ASSERT_EQ(r.code, 0);
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 1u);
  for (std::size_t k = 1; k < rows[0].size(); ++k) EXPECT_NEAR(rows[0][k], 0.5, 1e-9);

  Result q = run_cli({"sweep-eigs", "--d", "3", "--start", "-1/2", "--stop", "1/4", "--points", "4"});
  ASSERT_EQ(q.code, 0) << q.err;
  const auto qrows = parse_csv(q.out, &header);
  ASSERT_EQ(qrows.size(), 4u);
  EXPECT_EQ(qrows[0].size(), 28u);

  EXPECT_EQ(run_cli({"sweep-eigs", "--d", "2", "--start", "-1", "--stop", "0.5"}).code,
            kExitInputError);
  EXPECT_EQ(run_cli({"sweep-eigs", "--d", "4"}).code, kExitInputError);
}

TEST(CliCapacity, QubitAndQutritRows) {
  Result r = run_cli({"capacity", "--d", "2", "--start", "-1", "--stop", "1/3", "--points", "13"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "t,value,base,method,status,cloner");
  EXPECT_NE(r.out.find("\n0,1,2,COVARIANT_CLOSED_FORM,PROVEN,1\n"), std::string::npos);
  EXPECT_NE(r.out.find("\n0.33333333333333331,0.58496250072115"), std::string::npos);
  EXPECT_NE(r.out.find("-1,-1,2,COVARIANT_CLOSED_FORM,ONE_SHOT,0"), std::string::npos);

  Result q = run_cli({"capacity", "--d", "3", "--start", "-1/2", "--stop", "1/4", "--points", "4"});
  ASSERT_EQ(q.code, 0) << q.err;
  std::istringstream in(q.out);
  std::string line;
  std::getline(in, line);
  int n = 0;
  while (std::getline(in, line)) {
    EXPECT_NE(line.find(",3,COVARIANT_CLOSED_FORM,NUMERICAL_EVIDENCE,"), std::string::npos);
    ++n;
  }
  EXPECT_EQ(n, 4);

  EXPECT_EQ(run_cli({"capacity", "--method", "optimized"}).code, kExitInputError);
  Result opt = run_cli({"capacity", "--method", "optimized", "--seed", "3", "--start", "-0.5",
                        "--stop", "0", "--points", "2", "--restarts", "3"});
  ASSERT_EQ(opt.code, 0) << opt.err;
  EXPECT_NE(opt.out.find("OPTIMIZED"), std::string::npos);
  Result cov = run_cli({"capacity", "--method", "covariant", "--points", "3"});
  ASSERT_EQ(cov.code, 0) << cov.err;
  EXPECT_NE(cov.out.find("COVARIANT_MIXED_INPUT"), std::string::npos);
}

TEST(CliScreenVerify, Documents) {
  Result s = run_cli({"screen", "--channel", "td:d=2,t=0.2"});
  ASSERT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(Json::parse(s.out)["hopeless"], true);

  const std::vector<std::string> base = {"--channel", "td:d=2,t=-2/3", "--complement",
                                         "td-comp:t=-2/3"};
  std::vector<std::string> ok = {"verify", "--certificate", kCert};
  ok.insert(ok.end(), base.begin(), base.end());
  Result v = run_cli(ok);
  EXPECT_EQ(v.code, 0) << v.err;
  EXPECT_EQ(Json::parse(v.out)["valid"], true);

  std::vector<std::string> bad = {"verify", "--certificate", kBadCert};
  bad.insert(bad.end(), base.begin(), base.end());
  EXPECT_EQ(run_cli(bad).code, 1);

  EXPECT_EQ(run_cli({"verify", "--certificate", "/nonexistent.json", "--channel", "td:d=2,t=0"})
                .code,
            kExitInputError);
  // Wrong dimensions for the relation.
  EXPECT_EQ(run_cli({"verify", "--certificate", kCert, "--channel", "td:d=2,t=-2/3", "--mode",
                     "degradable"})
                .code,
            kExitInputError);
}

TEST(CliVerify, RoundTripsDecideOutput) {
  const std::string path = ::testing::TempDir() + "qdeg_verdict.json";
  Result d = run_cli({"decide", "--channel", "td:d=3,t=-0.3", "--mode", "antidegradable",
                      "--search", "--seed", "2", "--output", path});
  ASSERT_EQ(d.code, kExitYes) << d.err;
  Result v = run_cli({"verify", "--certificate", path, "--channel", "td:d=3,t=-0.3"});
  EXPECT_EQ(v.code, 0) << v.err;
}

TEST(CliDeterminism, ByteIdenticalOutputs) {
  const std::vector<std::vector<std::string>> commands = {
      {"decide", "--channel", "td:d=2,t=-0.6", "--mode", "antidegradable", "--search", "--seed", "4"},
      {"sweep-eigs", "--d", "3", "--start", "-1/2", "--stop", "1/4", "--points", "5", "-j", "4"},
      {"capacity", "--method", "optimized", "--seed", "9", "--points", "4", "--restarts", "3",
       "-j", "2"},
  };
  for (const auto& c : commands) {
    const Result a = run_cli(c);
    const Result b = run_cli(c);
    EXPECT_LE(a.code, 2);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace qdeg::cli
