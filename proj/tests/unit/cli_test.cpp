/*
 * Copyright 2026 The chainacp Authors
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

#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace chainacp::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int rc = run(args, out, err);
  return {rc, out.str(), err.str()};
}

TEST(Cli, Factor) {
  const Result r = call({"factor", "-p", "3", "-e", "2", "-m", "1", "-n", "8"});
  EXPECT_EQ(r.code, kExitOk);
  for (const char* f : {"x+8", "x+1", "x^2+1", "x^2+4x+8", "x^2+5x+8"}) EXPECT_NE(r.out.find(std::string(f) + "\t"), std::string::npos) << f;
  const Result one = call({"factor", "-n", "1"});
  EXPECT_EQ(one.out.substr(0, 4), "x+8\t");
  const Result bad = call({"factor", "-n", "3", "-p", "3"});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_NE(bad.err.find("gcd"), std::string::npos);
}

TEST(Cli, Code) {
  EXPECT_NE(call({"code", "1;x;x^8-1", "-n", "8"}).out.find("rank 8\n"), std::string::npos);
  EXPECT_NE(call({"code", "1;1", "-n", "4"}).out.find("rank 8\n"), std::string::npos);
  const Result bad = call({"code", "1;x^2;x^2-1", "-n", "2"});
  EXPECT_EQ(bad.code, kExitValidation);
  EXPECT_NE(bad.err.find("deg"), std::string::npos);
  const Result js = call({"code", R"({"f":[1],"r":[0,1],"g":[8,0,1]})", "-n", "2", "--json"});
  EXPECT_EQ(js.code, kExitOk);
  EXPECT_NE(js.out.find("\"rank\":2"), std::string::npos);
  EXPECT_EQ(call({"code", "--random", "--seed", "4", "-n", "2"}).out, call({"code", "--random", "--seed", "4", "-n", "2"}).out);
}

TEST(Cli, Dual) {
  const Result self = call({"dual", "1;x;x^8-1", "-n", "8", "--json"});
  EXPECT_EQ(self.code, kExitOk);
  EXPECT_NE(self.out.find(R"("f":[1],"r":[0,1],"g":[8,0,0,0,0,0,0,0,1])"), std::string::npos) << self.out;
  EXPECT_NE(call({"dual", "x^2-1;x^2-1", "-n", "2"}).out.find("rank 4"), std::string::npos);
  EXPECT_EQ(call({"dual", "x+1;x+8", "-n", "2", "--oracle"}).code, kExitOk);
  const Result nc = call({"dual", "1;3;x+8", "-n", "2", "--oracle"});
  EXPECT_EQ(nc.code, kExitOk);
  EXPECT_NE(nc.out.find("no canonical triple"), std::string::npos);
}

TEST(Cli, AcpAuditMindist) {
  const Result acp = call({"acp", "x+1;x+8", "x+8;x+1", "-n", "2", "--json", "--oracle"});
  EXPECT_EQ(acp.code, kExitOk);
  EXPECT_NE(acp.out.find(R"("definitional":true,"polynomial":true,"matrix":true,"projection":true)"), std::string::npos);
  const Result audit = call({"audit", "-n", "2", "--include-r"});
  EXPECT_EQ(audit.code, kExitOk);
  std::istringstream lines(audit.out);
  std::size_t count = 0;
  for (std::string line; std::getline(lines, line); ++count) {
    EXPECT_NE(line.find("\"norem_holds\":"), std::string::npos);
    EXPECT_NE(line.find("\"sigma_dual_holds\":"), std::string::npos);
  }
  EXPECT_GT(count, 0u);
  EXPECT_EQ(audit.out, call({"audit", "-n", "2", "--include-r"}).out);
  EXPECT_EQ(call({"mindist", "x^2-1;x+1", "-n", "2", "--oracle"}).out, "2\n");
  EXPECT_EQ(call({"mindist", "1;1", "-n", "8", "--budget", "10"}).code, kExitBudget);
  EXPECT_EQ(call({"enum-acp", "-n", "2"}).out.size() > 0, true);
}

TEST(Cli, Errors) {
  EXPECT_EQ(call({}).code, kExitValidation);
  EXPECT_EQ(call({"frobnicate"}).code, kExitValidation);
  EXPECT_EQ(call({"code", "x^3;1", "-n", "2"}).code, kExitValidation);
  EXPECT_EQ(call({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace chainacp::cli
