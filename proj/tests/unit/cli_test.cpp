#include "support.hpp"

#include <blueprint/cli.hpp>

#include <gtest/gtest.h>

#include <sstream>

using namespace blueprint;
using testing_support::TempDir;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "blueprint");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, HelpListsDefaults) {
  const CliRun r = cli({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("BLUEPRINT_TOLERANCE"), std::string::npos);
  EXPECT_NE(r.out.find("default 48"), std::string::npos);
  EXPECT_NE(r.out.find("default 1000x1000"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(cli({}).code, kExitUsage);
  EXPECT_EQ(cli({"score", "a.svg"}).code, kExitUsage);
  EXPECT_EQ(cli({"validate", "x.png", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(cli({"report", "run.jsonl", "--format", "xml"}).code, kExitUsage);
}

TEST(Cli, ScorePrintsBreakdown) {
  TempDir dir;
  const SynthPlan plan = generate(testing_support::config_for(2));
  save_png(dir / "truth.png", plan.raster);
  testing_support::write_file(dir / "a.svg", render_to_svg(plan));
  const CliRun r = cli({"score", (dir / "a.svg").string(), (dir / "truth.png").string()});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("composite"), std::string::npos);
  EXPECT_NE(r.out.find("1.0000"), std::string::npos);
  const CliRun j = cli({"score", (dir / "a.svg").string(), (dir / "truth.png").string(), "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(j.out).at("breakdown").at("composite").get<double>(), 1.0);
}

TEST(Cli, IoErrors) {
  TempDir dir;
  EXPECT_EQ(cli({"batch", (dir / "missing.toml").string(), (dir / "subs").string()}).code, kExitIo);
  EXPECT_EQ(cli({"validate", (dir / "missing.png").string()}).code, kExitIo);
  EXPECT_EQ(cli({"report", (dir / "run.x").string()}).code, kExitIo);
  EXPECT_EQ(cli({"score", (dir / "a.svg").string(), (dir / "t.png").string()}).code, kExitIo);
}

TEST(Cli, ExtractAndValidate) {
  TempDir dir;
  const SynthPlan plan = generate(testing_support::config_for(5));
  save_png(dir / "p.png", plan.raster);
  const CliRun v = cli({"validate", (dir / "p.png").string()});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find("no violations"), std::string::npos);
  const CliRun e = cli({"extract", (dir / "p.png").string(), "--out", (dir / "ir.json").string()});
  EXPECT_EQ(e.code, kExitOk) << e.err;
  EXPECT_EQ(deserialize(read_file(dir / "ir.json")), plan.truth);
  const CliRun j = cli({"extract", (dir / "p.png").string(), "--format", "json"});
  EXPECT_EQ(deserialize(j.out), plan.truth);
}

TEST(Cli, ReportTableMatchesAggregate) {
  TempDir dir;
  {
    RunFileWriter w(dir / "run.x");
    for (int i = 0; i < 4; ++i) {
      ResultRecord r;
      r.apartment = "a" + std::to_string(i);
      r.submitter = i % 2 ? "odd" : "even";
      r.breakdown.composite = 0.1 * (i + 1);
      w.write(r);
    }
  }
  const CliRun r = cli({"report", (dir / "run.x").string(), "--format", "table"});
  EXPECT_EQ(r.code, kExitOk);
  std::ostringstream want;
  cli_detail::print_table(want, aggregate(dir / "run.x"));
  EXPECT_EQ(r.out, want.str());
  const CliRun j = cli({"report", (dir / "run.x").string(), "--format", "json"});
  const auto rows = nlohmann::json::parse(j.out);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].at("submitter"), "odd");
  EXPECT_NEAR(rows[0].at("mean").get<double>(), 0.3, 1e-15);
}

TEST(Cli, SynthAndBatchEndToEnd) {
  TempDir dir;
  const CliRun g = cli({"synth", "gen", "--seed", "10", "--count", "2", "--out-dir", (dir / "data").string()});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  for (const char* name : {"plan-10", "plan-11"}) {
    fs::create_directories(dir / "subs" / "me" / name);
    fs::copy_file(dir / "data" / (std::string(name) + ".svg"), dir / "subs" / "me" / name / "0.svg");
  }
  const CliRun b = cli({"batch", (dir / "data/manifest.json").string(), (dir / "subs").string(), "--out",
                     (dir / "run.jsonl").string()});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  const auto rows = aggregate(dir / "run.jsonl");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].samples, 2u);
  EXPECT_EQ(rows[0].mean, 1.0);

  const CliRun p = cli({"synth", "perturb", "--seed", "10", "--op", "PunchGap", "--out-dir", (dir / "p").string()});
  EXPECT_EQ(p.code, kExitOk) << p.err;
  EXPECT_NE(p.out.find("rule 7"), std::string::npos);
  EXPECT_EQ(cli({"synth", "perturb", "--op", "Nope"}).code, kExitUsage);

  const CliRun base = cli({"synth", "baseline", "--pairs", "5", "--format", "json"});
  EXPECT_EQ(base.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(base.out).at("pairs"), 5);
}

TEST(Cli, BinaryExitCodes) {
  const std::string exe = BLUEPRINT_CLI_PATH;
  EXPECT_EQ(WEXITSTATUS(std::system((exe + " --help > /dev/null").c_str())), 0);
  EXPECT_EQ(WEXITSTATUS(std::system((exe + " frobnicate > /dev/null 2>&1").c_str())), 1);
  EXPECT_EQ(WEXITSTATUS(std::system((exe + " batch /nonexistent/m.toml /nonexistent > /dev/null 2>&1").c_str())), 2);
}
