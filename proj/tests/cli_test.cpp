// Copyright 2026 The cjones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"

namespace cjones::cli {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

const char* kUnknotSpinOne = R"({"strands":2,"colors_twice":[2,2],"orient":["+","-"],"word":[]})";

TEST(Cli, ComputeUnknot) {
  const auto r = call({"--k", "4", "compute"}, kUnknotSpinOne);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["V"]["re"].get<double>(), 2.0, 1e-12);
  EXPECT_NEAR(j["J"]["re"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["writhe"], 0);
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["library_version"], "1");
  EXPECT_EQ(j["q_convention"], "exp(+2 pi i/(k+2))");
}

TEST(Cli, ComputeLibraryLinkAndConjugation) {
  const auto a = nlohmann::json::parse(call({"--k", "4", "compute", "--link", "trefoil"}).out);
  const auto b = nlohmann::json::parse(call({"--k", "4", "--conjugate-q", "compute", "--link", "trefoil"}).out);
  EXPECT_NEAR(a["J"]["im"].get<double>(), std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(b["J"]["im"].get<double>(), -std::sqrt(3.0), 1e-12);
  EXPECT_EQ(b["q_convention"], "exp(-2 pi i/(k+2))");
}

TEST(Cli, SeventeenDigitFloats) {
  const auto r = call({"--k", "5", "compute", "--link", "figure-eight"});
  ASSERT_EQ(r.code, 0);
  const std::regex re(R"("re": (-?[0-9.]+(e-?[0-9]+)?))");
  int checked = 0;
  for (std::sregex_iterator it(r.out.begin(), r.out.end(), re), end; it != end; ++it) {
    std::string digits = (*it)[1].str();
    digits = digits.substr(0, digits.find('e'));
    std::size_t n = 0;
    bool leading = true;
    for (char c : digits) {
      if (c < '0' || c > '9') continue;
      if (leading && c == '0') continue;
      leading = false;
      ++n;
    }
    if (n > 1) {
      EXPECT_EQ(n, 17u) << digits;
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(Cli, SampleIsReproducible) {
  const std::vector<std::string> args = {"--k", "5", "sample", "--link", "trefoil", "--delta", "0.1", "--seed", "7"};
  const auto a = call(args), b = call(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["shots"], 832);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_FALSE(j.contains("exact"));
}

TEST(Cli, SampleBothWithExact) {
  const auto r = call({"--k", "3", "sample", "--link", "hopf", "--component", "both", "--shots", "100", "--exact"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["re"]["shots"], 100);
  EXPECT_TRUE(j["im"].contains("exact"));
  EXPECT_EQ(j["im"]["seed"], 1);
}

TEST(Cli, Rt) {
  const auto r = call({"--k", "3", "--threads", "2", "rt", "--link", "hopf", "--terms"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["terms"].size(), 16u);
  EXPECT_EQ(j["sigma"], 0);
  const auto s = nlohmann::json::parse(call({"--k", "3", "--rt-shift", "rt", "--link", "unknot"}).out);
  EXPECT_EQ(s["k_used"], 5);
}

TEST(Cli, RtUsesInputFramings) {
  const auto r = call({"--k", "3", "rt"},
                      R"({"strands":2,"colors_twice":[1,1],"orient":["+","-"],"word":[],"framings":[1]})");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["sigma"], 1);
}

TEST(Cli, VolscanWritesCsv) {
  const auto csv = (std::filesystem::temp_directory_path() / "cjones_volscan_test.csv").string();
  const auto r = call({"--threads", "3", "volscan", "--knot", "fig8", "--nmax", "14", "--csv", csv});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["points"].size(), 13u);
  EXPECT_EQ(j["points"][0]["method"], "kaul");
  EXPECT_EQ(j["points"][12]["method"], "oracle");
  std::ifstream f(csv);
  std::string header;
  std::getline(f, header);
  EXPECT_EQ(header, "N,abs_J_N,ratio");
  int rows = 0;
  for (std::string line; std::getline(f, line);) ++rows;
  EXPECT_EQ(rows, 13);
  std::filesystem::remove(csv);
}

TEST(Cli, Basis) {
  const auto r = call({"--k", "2", "basis", "--link", "trefoil"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["dim"], 2);
  EXPECT_EQ(j["labels"][0]["p"], nlohmann::json::array({0, 0}));
}

TEST(Cli, Verify) {
  const auto r = call({"verify"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("checks passed"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, VerifyFailsOnImpossibleTolerance) {
  const auto r = call({"--tolerance", "-1", "verify"});
  EXPECT_EQ(r.code, kExitVerifyFailed);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({"--k", "3", "compute"}, "{not json").code, kExitInput);
  EXPECT_EQ(call({"compute"}, kUnknotSpinOne).code, kExitInput);
  EXPECT_EQ(call({"--k", "1", "compute"}, kUnknotSpinOne).code, kExitInput);
  EXPECT_EQ(call({"--k", "3", "compute", "--link", "granny"}).code, kExitInput);
  EXPECT_EQ(call({"--k", "3", "frobnicate"}).code, kExitInput);
  const auto r = call({"--k", "3", "compute"},
                      R"({"strands":2,"colors_twice":[1,1],"orient":["+","?"],"word":[]})");
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("orient[1]"), std::string::npos) << r.err;
}

TEST(Cli, ResourceErrors) {
  EXPECT_EQ(call({"volscan", "--knot", "trefoil", "--nmax", "12"}).code, kExitResource);
}

TEST(Cli, ConfigFile) {
  const auto path = (std::filesystem::temp_directory_path() / "cjones_cli_test.toml").string();
  {
    std::ofstream f(path);
    f << "k = 4\n";
  }
  const auto r = call({"--config", path, "compute", "--link", "unknot", "--color", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["k"], 4);
  const auto w = call({"--config", path, "--k", "2", "compute", "--link", "unknot"});
  EXPECT_EQ(nlohmann::json::parse(w.out)["k"], 2);
  std::filesystem::remove(path);
}

TEST(Cli, OutFile) {
  const auto path = (std::filesystem::temp_directory_path() / "cjones_cli_out.json").string();
  const auto r = call({"--k", "3", "--out", path, "compute", "--link", "unknot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  EXPECT_EQ(nlohmann::json::parse(f)["command"], "compute");
  std::filesystem::remove(path);
}

TEST(Cli, Help) { EXPECT_EQ(call({"--help"}).code, 0); }

}  // namespace
}  // namespace cjones::cli
