#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "k3bn/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = k3bn::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Examples) {
  auto r = run({"vdim", "--g", "4", "--d", "5", "--r", "1", "--k", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n");

  r = run({"chow", "--triple", "M-L,M-2L,3M-L"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "-1\n");

  r = run({"verify"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("11/11 passed"), std::string::npos);

  r = run({"table", "--g", "6", "--d", "6", "--format", "text", "--mode", "values"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 | 12 10  6  0\n"), std::string::npos) << r.out;

  r = run({"classify", "--g", "4", "--d", "5", "--r", "2", "--k", "4"});
  EXPECT_EQ(r.out, "D2\n");
}

TEST(Cli, ArgumentErrors) {
  auto r = run({});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"vdim", "--g", "4"}).code, 2);
  EXPECT_EQ(run({"vdim", "--g", "x", "--d", "5", "--r", "1", "--k", "3"}).code, 2);
  EXPECT_EQ(run({"vdim", "--g", "4", "--d", "5", "--r", "1", "--k", "-3"}).code, 2);
  EXPECT_EQ(run({"table", "--g", "4", "--d", "5", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"chow", "--triple", "M,M"}).code, 2);
  EXPECT_EQ(run({"chow", "--triple", "M,M,Q"}).code, 2);
  EXPECT_EQ(run({"lattice", "--gram", "[[3]]", "--class", "[1]"}).code, 2);
  EXPECT_EQ(run({"birational", "--case", "e", "--g", "6", "--d", "6", "--r", "3"}).code, 2);
  auto p = run({"predict", "--g", "4", "--d", "5", "--r", "2", "--k", "4"});
  EXPECT_EQ(p.code, 2);
  EXPECT_NE(p.err.find("pic_is_Za_or_aH_is_one"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, PredictAndInterpret) {
  auto r = run({"predict", "--g", "6", "--d", "6", "--r", "3", "--k", "5", "--c3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status: NonemptyExpectedDim\n"), std::string::npos);
  EXPECT_NE(r.out.find("dimension: 0\n"), std::string::npos);
  r = run({"interpret", "--g", "5", "--d", "5", "--r", "0", "--k", "2"});
  EXPECT_NE(r.out.find("locus: W^1_3(|a|^s)"), std::string::npos);
}

TEST(Cli, OtherSubcommands) {
  auto r = run({"correspond", "--g", "6", "--d", "6", "--r-prime", "0", "--k-prime", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pi1_fiber: Gr(3,5)\npi1_fiber_dim: 6\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("dim_equal: true"), std::string::npos);
  r = run({"serre", "--g", "6", "--d", "6", "--r-bar", "2"});
  EXPECT_NE(r.out.find("r_bar: 1\nd: 4\nrho: 0\nrho_dual: 0\n"), std::string::npos) << r.out;
  r = run({"birational", "--case", "c", "--g", "6", "--d", "6", "--r", "3"});
  EXPECT_NE(r.out.find("trichotomy: BaseContainsGrFibrationOverM"), std::string::npos);
  r = run({"birational", "--case", "d", "--g", "6", "--d", "10", "--r", "3", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("pi2_fiber: Gr(2,3)"), std::string::npos) << r.out;
  r = run({"lattice", "--gram", "[[2,1],[1,-2]]", "--class", "[2,1]", "--with", "[1,0]", "--with",
           "[0,1]", "--rank", "2", "--v2", "-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "a_squared: 10\ngenus: 6\npair_0: 5\npair_1: 0\neps_r: 2\neps_g: 6\neps_d: 6\n");
  r = run({"invariants", "--g", "3", "--d", "3", "--r", "2"});
  EXPECT_NE(r.out.find("r0: (1+sqrt(13))/2\n"), std::string::npos);
}

TEST(Cli, JsonNumbersMatchText) {
  const std::vector<std::vector<std::string>> cases = {
      {"invariants", "--g", "6", "--d", "6", "--r", "3"},
      {"predict", "--g", "4", "--d", "5", "--r", "1", "--k", "0", "--pic-za"},
      {"correspond", "--g", "5", "--d", "5", "--r-prime", "1", "--k-prime", "3"},
      {"serre", "--g", "5", "--d", "4", "--r-bar", "1"},
      {"lattice", "--gram", "[[8,3],[3,0]]", "--class", "[1,0]", "--with", "[0,1]"},
  };
  for (auto args : cases) {
    const auto text = run(args).out;
    args.push_back("--format");
    args.push_back("json");
    const auto json = nlohmann::ordered_json::parse(run(args).out);
    std::ostringstream rebuilt;
    for (const auto& [k, v] : json.items()) {
      rebuilt << k << ": ";
      if (v.is_null()) {
        rebuilt << "none";
      } else if (v.is_string()) {
        rebuilt << v.get<std::string>();
      } else {
        rebuilt << v.dump();
      }
      rebuilt << "\n";
    }
    EXPECT_EQ(rebuilt.str(), text) << args[0];
  }
  const auto v = nlohmann::json::parse(
      run({"vdim", "--g", "4", "--d", "5", "--r", "1", "--k", "3", "--format", "json"}).out);
  EXPECT_EQ(v["vdim"], 1);
}

TEST(Cli, OutFileAndCsv) {
  const std::string path = testing::TempDir() + "k3bn_cli_table.csv";
  auto r = run({"table", "--g", "3", "--d", "3", "--format", "csv", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::string head;
  std::getline(f, head);
  EXPECT_EQ(head, "r,k,vdim,region,symbol,interpretation");
  std::remove(path.c_str());
  r = run({"serre", "--g", "6", "--d", "6", "--r-bar", "2", "--format", "csv"});
  EXPECT_EQ(r.out, "r_bar,d,rho,rho_dual\n1,4,0,0\n");
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"table", "--g", "5", "--d", "5", "--format", "json"},
           {"svg", "--g", "4", "--d", "5"},
           {"verify"}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}
