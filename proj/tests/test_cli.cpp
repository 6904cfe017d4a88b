#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "toricsplit/cli.hpp"
#include "toricsplit/families.hpp"

using namespace toricsplit;
using namespace toricsplit::cli;

namespace {

std::filesystem::path scratch(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "toricsplit_cli_tests";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << text;
  return p;
}

Outcome run_json(const std::string& command, std::vector<std::string> args, std::uint64_t budget = Budget::kDefaultLimit) {
  Options o;
  o.command = command;
  o.args = std::move(args);
  o.format = "json";
  o.budget = budget;
  return run(o);
}

int shell(const std::string& cmd) {
  const int status = std::system((cmd + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Parse, MatrixWithComments) {
  const auto m = parse_matrix("# curve\nmatrix 2 4\n1 1 1 1  # ones\n\n0 2 3 5\n");
  EXPECT_EQ(m, (IntMatrix{{1, 1, 1, 1}, {0, 2, 3, 5}}));
  EXPECT_EQ(file_kind("# x\nbipartite 2 2\n"), "bipartite");
}

TEST(Parse, ErrorsCarryLineAndColumn) {
  try {
    parse_matrix("matrix 2 3\n1 2 3\n4 x5 6\n", "m.txt");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_EQ(std::string(e.what()).rfind("m.txt:3:3:", 0), 0u) << e.what();
  }
  try {
    parse_matrix("matrix 2 3\n1 2 3\n4 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_matrix("matrix 1 2\n1 2\n3 4\n"), ParseError);
  EXPECT_THROW(parse_matrix(""), ParseError);
  EXPECT_EQ(parse_matrix("matrix 1 1\n99999999999999999999999\n")(0, 0), Integer("99999999999999999999999"));
  try {
    parse_graph("bipartite 2 2\n1 1\n1 3\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_graph("bipartite 2 2\n1 1\n1 1\n"), ParseError);
}

TEST(Binomial, Rendering) { EXPECT_EQ(binomial(LatticeVector({1, -2, 0, 3})), "x1x4^3 - x2^2"); }

TEST(Run, InputErrorIsExitTwo) {
  const auto p = scratch("bad.txt", "matrix 1 2\n1 q\n");
  const auto r = run_json("kernel", {p.string()});
  EXPECT_EQ(r.exit_code, ExitCode::input_error);
  EXPECT_NE(r.report["error"].get<std::string>().find(":2:3:"), std::string::npos);
  EXPECT_EQ(run_json("kernel", {"/nonexistent/file"}).exit_code, ExitCode::input_error);
  EXPECT_EQ(run_json("frobnicate", {}).exit_code, ExitCode::input_error);
  const auto np = scratch("np.txt", "matrix 1 2\n1 -1\n");
  EXPECT_EQ(run_json("graver", {np.string()}).exit_code, ExitCode::input_error);
}

TEST(Run, BudgetExhaustionIsExitThree) {
  const auto p = scratch("curve.txt", "matrix 2 4\n1 1 1 1\n0 1 5 6\n");
  const auto r = run_json("graver", {p.string()}, 1);
  EXPECT_EQ(r.exit_code, ExitCode::budget_exhausted);
  EXPECT_TRUE(r.report.contains("degraded"));
  const auto s = run_json("split", {p.string()}, 1);
  EXPECT_EQ(s.exit_code, ExitCode::budget_exhausted);
}

TEST(Run, JsonIsDeterministic) {
  const auto p = scratch("curve2.txt", "matrix 2 4\n1 1 1 1\n0 2 3 5\n");
  for (const char* cmd : {"kernel", "circuits", "graver", "markov", "gamma", "delta", "bar-bounds", "split"}) {
    const auto a = run_json(cmd, {p.string()});
    const auto b = run_json(cmd, {p.string()});
    EXPECT_EQ(a.exit_code, ExitCode::ok) << cmd << a.report.dump();
    EXPECT_EQ(a.report.dump(), b.report.dump()) << cmd;
  }
}

TEST(Run, GraphCommands) {
  const auto p = scratch("k33.txt", "bipartite 3 3\n1 1\n1 2\n1 3\n2 1\n2 2\n2 3\n3 1\n3 2\n3 3\n");
  const auto g = run_json("graph-gens", {p.string()});
  ASSERT_EQ(g.exit_code, ExitCode::ok);
  EXPECT_EQ(g.report["generators"].size(), 9u);
  const auto s = run_json("split", {p.string()});
  ASSERT_EQ(s.exit_code, ExitCode::ok) << s.report.dump();
  const auto k = run_json("kmn-split", {"3", "3"});
  ASSERT_EQ(k.exit_code, ExitCode::ok);
}

TEST(Run, Families) {
  EXPECT_EQ(run_json("family", {"symmetric-curve", "2", "3"}).exit_code, ExitCode::ok);
  EXPECT_EQ(run_json("family", {"lawrence", "2", "3"}).exit_code, ExitCode::ok);
  EXPECT_EQ(run_json("family", {"cyclic", "2"}).exit_code, ExitCode::ok);
  EXPECT_EQ(run_json("family", {"ex4_4"}).exit_code, ExitCode::ok);
  EXPECT_EQ(run_json("family", {"nope"}).exit_code, ExitCode::input_error);
}

TEST(Verify, PerturbedCatalogueIsReported) {
  auto text = read_file(TORICSPLIT_CATALOGUE);
  const auto doc = nlohmann::json::parse(text);
  auto changed = doc;
  for (auto& e : changed["entries"])
    if (e["id"] == "ex4_4")
      for (auto& v : e["values"])
        if (v["quantity"] == "mu") v["value"] = 4;
  const auto p = scratch("perturbed.json", changed.dump());
  Options o;
  o.command = "verify-paper";
  o.format = "json";
  o.catalogue = p.string();
  const auto r = run(o);
  EXPECT_EQ(r.exit_code, ExitCode::mismatch);
  bool reported = false;
  for (const auto& m : r.report["mismatches"])
    reported = reported || m.get<std::string>().find("ex4_4 mu: computed 3, catalogue 4") != std::string::npos;
  EXPECT_TRUE(reported) << r.report["mismatches"].dump();
}

TEST(Verify, BudgetExhaustionIsExitThree) {
  Options o;
  o.command = "verify-paper";
  o.budget = 1;
  EXPECT_EQ(run(o).exit_code, ExitCode::budget_exhausted);
}

TEST(Binary, ExitCodes) {
  const std::string bin = TORICSPLIT_BIN;
  const auto p = scratch("ok.txt", "matrix 2 4\n1 1 1 1\n0 2 3 5\n");
  const auto bad = scratch("bad2.txt", "matrix 2 4\n1 1 1 1\n");
  EXPECT_EQ(shell(bin + " kernel " + p.string()), 0);
  EXPECT_EQ(shell(bin + " kernel " + bad.string()), 2);
  EXPECT_EQ(shell(bin + " graver --budget 1 " + p.string()), 3);
  EXPECT_EQ(shell(bin + " kernel --format yaml " + p.string()), 2);
  const auto out = std::filesystem::temp_directory_path() / "toricsplit_cli_tests" / "out.json";
  EXPECT_EQ(shell(bin + " markov --format json --out " + out.string() + " " + p.string()), 0);
  const auto report = nlohmann::json::parse(read_file(out));
  EXPECT_EQ(report["command"], "markov");
}
