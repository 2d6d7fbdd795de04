#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "bigmono/cli/checks.hpp"

using namespace bigmono::cli;

namespace {

std::filesystem::path temp_file(const std::string &name)
{
  return std::filesystem::temp_directory_path() / ("bigmono_test_" + name);
}

std::string slurp(const std::filesystem::path &p)
{
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string &args)
{
  const std::string cmd = std::string(BIGMONO_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

} // namespace

TEST(Config, ParsesKeysAndLists)
{
  VerificationConfig cfg;
  apply_key(cfg, "p", "5");
  apply_key(cfg, "l", " 3 ");
  apply_key(cfg, "k", "1, 1,2 2");
  apply_key(cfg, "closure_cap", "1'000");
  apply_key(cfg, "timing", "false");
  EXPECT_EQ(cfg.p, 5u);
  EXPECT_EQ(cfg.l, 3u);
  EXPECT_EQ(cfg.kvec, (std::vector<std::uint32_t>{1, 1, 2, 2}));
  EXPECT_EQ(cfg.closure_cap, 1000u);
  EXPECT_FALSE(cfg.timing);
  EXPECT_THROW(apply_key(cfg, "colour", "1"), ConfigError);
  EXPECT_THROW(apply_key(cfg, "p", "-5"), ConfigError);
  EXPECT_THROW(apply_key(cfg, "format", "xml"), ConfigError);
}

TEST(Config, ChecksList)
{
  EXPECT_TRUE(parse_checks("{}").empty());
  EXPECT_TRUE(parse_checks("none").empty());
  EXPECT_EQ(parse_checks("all"), known_checks());
  EXPECT_EQ(parse_checks("form,image"), (std::vector<std::string>{"form", "image"}));
  EXPECT_THROW(parse_checks("form,bogus"), ConfigError);
}

TEST(Config, ReadsFileWithComments)
{
  const auto path = temp_file("cfg.txt");
  std::ofstream(path) << "# a comment\np = 11\nl=5 # trailing\n\nk = 1,1,3,2\nchecks = splitting\n";
  const auto kv = read_config_file(path.string());
  EXPECT_EQ(kv.at("p"), "11");
  EXPECT_EQ(kv.at("l"), "5");
  EXPECT_EQ(kv.at("k"), "1,1,3,2");
  std::ofstream(path) << "p 11\n";
  EXPECT_THROW(read_config_file(path.string()), ConfigError);
  std::filesystem::remove(path);
}

TEST(Report, EmptyChecksGiveEmptyReport)
{
  VerificationConfig cfg;
  const auto rep = run_verification(cfg);
  EXPECT_TRUE(rep.records.empty());
  EXPECT_EQ(report_json(rep, true).dump(), R"({"records":[]})");
  EXPECT_EQ(rep.exit_code(), 0);
}

TEST(Report, DeterministicWithoutTiming)
{
  VerificationConfig cfg;
  cfg.p = 5;
  cfg.l = 3;
  cfg.kvec = {1, 1, 2, 2};
  cfg.checks = known_checks();
  cfg.trials = 20;
  const auto a = report_json(run_verification(cfg), false).dump();
  const auto b = report_json(run_verification(cfg), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(report_tsv(run_verification(cfg), false), report_tsv(run_verification(cfg), false));
}

TEST(Report, RecordFieldsAndSkips)
{
  VerificationConfig cfg;
  cfg.p = 11;
  cfg.l = 5;
  cfg.kvec = {1, 1, 3};
  cfg.checks = {"extension", "image", "prop21"};
  const auto rep = run_verification(cfg);
  ASSERT_EQ(rep.records.size(), 3u);
  // records come out in dependency order, not request order
  EXPECT_EQ(rep.records[0].name, "prop21");
  EXPECT_TRUE(rep.records[0].match);
  EXPECT_EQ(rep.records[1].outcome, Outcome::Skipped);
  EXPECT_EQ(rep.records[2].outcome, Outcome::Skipped);
  EXPECT_EQ(rep.exit_code(), 0);
  const auto j = record_json(rep.records[1], true);
  for (const char *key : {"name", "parameters", "expected", "computed", "match", "runtime_ms",
                          "findings"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["computed"].get<std::string>().rfind("skipped:", 0), 0u);
}

TEST(Report, MismatchGivesExitOneAndErrorExitTwo)
{
  Report rep;
  Record ok;
  ok.match = true;
  rep.records.push_back(ok);
  EXPECT_EQ(rep.exit_code(), 0);
  Record bad;
  rep.records.push_back(bad);
  EXPECT_EQ(rep.exit_code(), 1);
  Record err;
  err.outcome = Outcome::Error;
  rep.records.push_back(err);
  EXPECT_EQ(rep.exit_code(), 2);
}

TEST(Report, TsvHasHeaderAndOneLinePerRecord)
{
  VerificationConfig cfg;
  cfg.p = 5;
  cfg.l = 3;
  cfg.kvec = {1, 1, 1, 1};
  cfg.checks = {"splitting", "form"};
  const auto tsv = report_tsv(run_verification(cfg), false);
  std::istringstream in(tsv);
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(std::count(line.begin(), line.end(), '\t'), 7);
  }
  EXPECT_EQ(lines, 3);
}

TEST(Scan, OneSplittingRecordPerPair)
{
  ScanConfig sc;
  sc.p_max = 11;
  sc.l_max = 7;
  sc.n_max = 3;
  sc.checks = {"splitting", "form"};
  sc.jobs = 2;
  const auto rep = scan(sc);
  std::size_t splitting = 0, form = 0;
  for (const auto &r : rep.records) {
    splitting += r.name == "splitting";
    form += r.name == "form";
    EXPECT_TRUE(r.match) << r.name << " " << r.parameters.dump();
  }
  // p in {3,5,7,11}, l in {3,5,7}, p != l: 9 pairs, n in {2,3}
  EXPECT_EQ(splitting, 9u);
  EXPECT_EQ(form, 18u);
  sc.jobs = 1;
  EXPECT_EQ(report_json(scan(sc), false).dump(), report_json(rep, false).dump());
}

TEST(Cli, ExitCodes)
{
  EXPECT_EQ(run_cli("analyze -p 5 -l 3"), 0);
  EXPECT_EQ(run_cli("verify -p 5 -l 3 -k 1,1,1,1 --checks splitting,form,relations"), 0);
  EXPECT_EQ(run_cli("verify -p 5 -l 3 --checks none"), 0);
  EXPECT_EQ(run_cli("verify -p 4 -l 3 --checks splitting"), 2);
  EXPECT_EQ(run_cli("verify -p 5 -l 3 --checks bogus"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
}

TEST(Cli, OutputFileIsByteIdenticalWithoutTiming)
{
  const auto a = temp_file("a.json"), b = temp_file("b.json");
  const std::string args = "verify -p 11 -l 5 -k 1,1,3 --checks all --no-timing --trials 10 --out ";
  EXPECT_EQ(run_cli(args + a.string()), 0);
  EXPECT_EQ(run_cli(args + b.string()), 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_NE(slurp(a).find("\"records\""), std::string::npos);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, ConfigFileWithFlagOverride)
{
  const auto cfg = temp_file("verify.cfg"), out = temp_file("out.tsv");
  std::ofstream(cfg) << "p = 5\nl = 3\nk = 1,1,1,1\nchecks = splitting\nformat = json\n";
  EXPECT_EQ(run_cli("verify --config " + cfg.string() + " --format tsv --out " + out.string()), 0);
  EXPECT_EQ(slurp(out).rfind("name\tparameters", 0), 0u);
  std::filesystem::remove(cfg);
  std::filesystem::remove(out);
}
