#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>

#include "eun/document.hpp"
#include "eun_cli.hpp"
#include "fixtures.hpp"

namespace eun::cli {
namespace {

using testing::data_file;

CommandResult run(std::vector<std::string> args) { return run_command(args); }

TEST(Cli, QueryEu) {
  const CommandResult r = run({"query", data_file("hw1.eun"), "--eu", "-e", "H=1"});
  EXPECT_EQ(r.exit_code, kOk) << r.err;
  EXPECT_EQ(r.out, "1.500000000000\n");
}

TEST(Cli, QueryConditionalAndValue) {
  EXPECT_EQ(run({"query", data_file("hw1.eun"), "--eu", "-e", "W=1", "-g", "H=1"}).out,
            "1.333333333333\n");
  EXPECT_EQ(run({"query", data_file("hw1.eun"), "--value", "-e", "H=1"}).out, "0.750000000000\n");
  EXPECT_EQ(run({"query", data_file("hw1.eun"), "--prob", "-e", "H=1,W=0"}).out,
            "0.250000000000\n");
}

TEST(Cli, IndependenceAuction) {
  const CommandResult r =
      run({"independence", data_file("auction.eun"), "--layer", "eu", "-a", "V", "-b", "C", "-c", "A,B,S"});
  EXPECT_EQ(r.exit_code, kOk) << r.err;
  EXPECT_EQ(r.out, "independent (guaranteed by Theorem 2)\n");
  const CommandResult no =
      run({"independence", data_file("hw2.eun"), "--layer", "eu", "-a", "H", "-b", "W"});
  EXPECT_EQ(no.out.rfind("not guaranteed", 0), 0u) << no.out;
  const CommandResult prob =
      run({"independence", data_file("hw2.eun"), "--layer", "prob", "-a", "H", "-b", "W"});
  EXPECT_EQ(prob.out.rfind("independent", 0), 0u) << prob.out;
}

TEST(Cli, Auction) {
  const CommandResult r = run({"auction", "--grid", "2", "--value", "0.5"});
  EXPECT_EQ(r.exit_code, kOk) << r.err;
  EXPECT_NE(r.out.find("argmax {0, 0.5}\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("truthful bid 0.5 is optimal"), std::string::npos) << r.out;
  EXPECT_EQ(run({"auction", "--grid", "2", "--value", "0.3"}).exit_code, kUsage);
  EXPECT_EQ(run({"auction", "--grid", "1", "--value", "0"}).exit_code, kUsage);
}

TEST(Cli, Decide) {
  const CommandResult r = run({"decide", data_file("hw1.eun"), "-d", "H"});
  EXPECT_EQ(r.exit_code, kOk) << r.err;
  EXPECT_NE(r.out.find("argmax {H=1}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("max 1.500000000000"), std::string::npos) << r.out;
  EXPECT_EQ(run({"decide", data_file("hw1.eun"), "-d", "H", "-e", "H=0"}).exit_code, kUsage);
}

TEST(Cli, ValidateAndImport) {
  EXPECT_EQ(run({"validate", data_file("hw2.eun")}).exit_code, kOk);
  const auto out = std::filesystem::temp_directory_path() / "eun_cli_import.eun";
  const CommandResult r = run({"import-bn", data_file("chain.bn"), "-o", out.string()});
  EXPECT_EQ(r.exit_code, kOk) << r.err;
  EXPECT_EQ(run({"validate", out.string(), "--strict"}).exit_code, kOk);
  std::filesystem::remove(out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).exit_code, kUsage);
  EXPECT_EQ(run({"frobnicate"}).exit_code, kUsage);
  EXPECT_EQ(run({"query", data_file("hw1.eun"), "-e", "H=1"}).exit_code, kUsage);
  EXPECT_EQ(run({"query", data_file("hw1.eun"), "--eu", "--prob", "-e", "H=1"}).exit_code, kUsage);
  EXPECT_EQ(run({"query", "/nonexistent.eun", "--eu", "-e", "H=1"}).exit_code, kUsage);
  EXPECT_EQ(run({"query", data_file("hw1.eun"), "--eu", "-e", "Q=1"}).exit_code, kUsage);
  EXPECT_EQ(run({"validate", data_file("chain.bn")}).exit_code, kValidation);
  EXPECT_EQ(run({"query", data_file("hw1.eun"), "--eu", "-e", "H=1", "-g", "H=0"}).exit_code,
            kNumeric);
  EXPECT_EQ(run({"--help"}).exit_code, kOk);
}

TEST(Cli, StateCapFromEnvironment) {
  ::setenv("EUN_STATE_CAP", "3", 1);
  const CommandResult capped = run({"query", data_file("hw1.eun"), "--eu", "-e", "H=1"});
  ::setenv("EUN_STATE_CAP", "abc", 1);
  const CommandResult bad = run({"query", data_file("hw1.eun"), "--eu", "-e", "H=1"});
  ::unsetenv("EUN_STATE_CAP");
  EXPECT_EQ(capped.exit_code, kNumeric) << capped.err;
  EXPECT_EQ(bad.exit_code, kUsage);
}

TEST(Cli, ByteStableOutput) {
  const std::vector<std::string> args{"auction", "--grid", "5", "--value", "0.4"};
  const std::string first = run(args).out;
  for (int k = 0; k < 3; ++k) EXPECT_EQ(run(args).out, first);
}

}  // namespace
}  // namespace eun::cli
