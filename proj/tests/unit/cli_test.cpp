#include <gtest/gtest.h>

#include <sstream>

#include "xhtpy/cli.hpp"
#include "xhtpy/json_io.hpp"

using namespace xhtpy;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, VerifySuites) {
  CliRun r = run({"--json", "--seed", "7", "verify-paper", "all"});
  EXPECT_EQ(r.code, 0) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["suite"], "all");
  EXPECT_EQ(run({"--json", "--seed", "7", "verify-paper", "all"}).out, r.out);
}

TEST(Cli, BudgetExitCode) {
  EXPECT_EQ(run({"--budget", "5", "verify-paper", "figure1"}).code, 3);
  EXPECT_EQ(run({"--budget", "5", "in-w", "@figure1", "g"}).code, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"no-such-command"}).code, 2);
  EXPECT_EQ(run({"iso", "C6"}).code, 2);
  EXPECT_EQ(run({"iso", "/no/such/file", "C6"}).code, 2);
  EXPECT_EQ(run({"in-w", "@figure1", "nomap"}).code, 2);
  EXPECT_EQ(run({"verify-paper", "nope"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, IsoOnRelabelings) {
  CliRun yes = run({"iso", "C6", "@two_colouring:C6"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out.rfind("isomorphic", 0), 0u);
  CliRun no = run({"--json", "iso", "C6", "K2"});
  EXPECT_EQ(no.code, 0);
  EXPECT_FALSE(Json::parse(no.out)["isomorphic"].get<bool>());
  CliRun fig = run({"--json", "iso", "@figure3:D", "@figure3:D"});
  EXPECT_TRUE(Json::parse(fig.out)["isomorphic"].get<bool>());
}

TEST(Cli, Subcommands) {
  EXPECT_EQ(run({"homs", "--count", "K2", "K3"}).out, "6\n");
  EXPECT_EQ(run({"stiff", "@figure3:D"}).code, 0);
  EXPECT_EQ(run({"stiff", "--policy", "given", "--folds", "a>x,d>x,c>y,e>y,b>z", "@figure1:B"}).code, 0);
  EXPECT_EQ(run({"stiff", "--policy", "given", "--folds", "x>a", "@figure1:B"}).code, 2);
  EXPECT_EQ(run({"homotopic", "@figure2", "f", "h"}).out.rfind("homotopic", 0), 0u);
  EXPECT_EQ(run({"is-weq", "@figure2", "h"}).code, 0);
  EXPECT_NE(run({"in-w", "@figure1", "g"}).out.find("in W: out"), std::string::npos);
  EXPECT_NE(run({"in-w", "--copy-mode", "induced", "@figure1", "g"}).out.find("in W: in"),
            std::string::npos);
  EXPECT_EQ(run({"equiv", "--brute", "@figure3:C", "@figure3:A"}).out.rfind("equivalent", 0), 0u);
  EXPECT_EQ(run({"product", "K2", "K2"}).code, 0);
  EXPECT_NE(run({"pushout", "--dot", "@pushout_inputs", "simple", "simple"}).out.find("graph"),
            std::string::npos);
  EXPECT_EQ(run({"cylinder", "@two_colouring", "h"}).code, 0);
  EXPECT_EQ(run({"counterexample", "@pushout_inputs", "looped"}).code, 0);
  EXPECT_EQ(run({"counterexample", "@pushout_inputs", "injective"}).code, 2);
  CliRun ax = run({"--json", "check-axiom", "2of6", "@figure3", "f", "g", "h"});
  EXPECT_EQ(ax.code, 0) << ax.err;
  EXPECT_EQ(Json::parse(ax.out)["classPredicate"], "W");
  EXPECT_EQ(run({"check-axiom", "2of3", "@figure3", "f", "h"}).code, 2);
  EXPECT_EQ(run({"export-dot", "@figure2"}).out.rfind("graph \"A\"", 0), 0u);
  EXPECT_EQ(run({"--version"}).code, 0);
}
