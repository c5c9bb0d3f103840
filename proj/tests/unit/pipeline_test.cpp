// Copyright 2026 The scriptometer Authors
// SPDX-License-Identifier: Apache-2.0

#include "scriptometer/pipeline.hpp"

#include <cstdio>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "scriptometer/corpus.hpp"
#include "scriptometer/error.hpp"
#include "scriptometer/io.hpp"
#include "scriptometer/stability.hpp"

using namespace scriptometer;
using json = nlohmann::json;

namespace {

RunConfig mini_config(const std::filesystem::path& out) {
  RunConfig c;
  c.input_dir = SCRIPTOMETER_MINI_CORPUS;
  c.mfw = 100;
  c.min_tokens = 10;
  c.k = 2;
  c.out_dir = out;
  return c;
}

struct Command {
  int status;
  std::string output;
};

Command run(const std::string& command) {
  Command result{-1, ""};
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  if (pipe == nullptr) return result;
  char buf[512];
  while (std::fgets(buf, sizeof buf, pipe) != nullptr) result.output += buf;
  result.status = pclose(pipe);
  return result;
}

}  // namespace

TEST(Pipeline, MiniCorpusRecoversDialects) {
  oracle::TempDir out("pipe");
  RunResult r = run_pipeline(mini_config(out.path()));
  std::set<std::string> files(r.files.begin(), r.files.end());
  for (const char* f : {"dtm.csv", "relfreq.csv", "stats.json", "distances.csv", "dendrogram.nwk", "merges.csv",
                        "groups.csv", "profile_0.csv", "profile_1.csv", "profile_0_display.csv",
                        "profile_1_display.csv", "dendrogram.svg", "summary.json"}) {
    EXPECT_TRUE(files.contains(f)) << f;
    EXPECT_TRUE(std::filesystem::exists(out.path() / f)) << f;
  }
  EXPECT_TRUE(r.warnings.empty());
  EXPECT_TRUE(r.dropped.empty());

  auto metas = parse_metadata(io::read_file(std::filesystem::path(SCRIPTOMETER_MINI_CORPUS) / "metadata.csv"));
  auto groups = io::parse_csv(io::read_file(out.path() / "groups.csv"));
  ASSERT_EQ(groups.size(), metas.size() + 1);
  std::vector<std::size_t> got, planted;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < metas.size(); ++i) {
    ASSERT_EQ(groups[i + 1][0], metas[i].id);
    ids.push_back(metas[i].id);
    got.push_back(std::stoul(groups[i + 1][1]));
    planted.push_back(metas[i].place_wit == "dialect_0" ? 0 : 1);
  }
  EXPECT_EQ(adjusted_rand(ClusterAssignment(ids, got, 2), ClusterAssignment(ids, planted, 2)), 1.0);
}

TEST(Pipeline, SummaryEchoesEffectiveConfig) {
  oracle::TempDir out("pipe-summary");
  RunConfig c = mini_config(out.path());
  c.sweep_levels = std::vector<std::size_t>{50, 100};
  run_pipeline(c);
  json s = json::parse(io::read_file(out.path() / "summary.json"));
  const json& cfg = s["config"];
  EXPECT_EQ(cfg["mfw"], 100);
  EXPECT_EQ(cfg["min_tokens"], 10);
  EXPECT_EQ(cfg["metric"], "manhattan");
  EXPECT_EQ(cfg["square_distances"], false);
  EXPECT_EQ(cfg["k"], 2);
  EXPECT_EQ(cfg["profile_mode"], "lebart");
  EXPECT_EQ(cfg["top"], 25);
  EXPECT_EQ(cfg["sweep"], json::array({50, 100}));
  EXPECT_TRUE(cfg["stoplist"].is_null());
  EXPECT_EQ(cfg["normalization"]["char_map"], json::array({"j>i", "v>u"}));
  EXPECT_EQ(cfg["normalization"]["case_fold"], true);
  EXPECT_EQ(s["stats"]["n_witnesses"], 12);
  EXPECT_GT(s["agglomerative_coefficient"].get<double>(), 0.5);
  EXPECT_EQ(s["cluster_sizes"].size(), 2u);
  EXPECT_EQ(s["sweep"]["levels"], json::array({50, 100}));
  EXPECT_TRUE(std::filesystem::exists(out.path() / "stability.csv"));
  EXPECT_TRUE(std::filesystem::exists(out.path() / "stability_ari.csv"));
}

TEST(Pipeline, SingleClusterSkipsProfilesWithWarning) {
  oracle::TempDir out("pipe-k1");
  RunConfig c = mini_config(out.path());
  c.k = 1;
  RunResult r = run_pipeline(c);
  ASSERT_EQ(r.warnings.size(), 1u);
  EXPECT_NE(r.warnings[0].find("n_k = N"), std::string::npos) << r.warnings[0];
  EXPECT_FALSE(std::filesystem::exists(out.path() / "profile_0.csv"));
  EXPECT_TRUE(std::filesystem::exists(out.path() / "dendrogram.svg"));
}

TEST(Pipeline, ShortWitnessesAreDroppedWithWarning) {
  oracle::TempDir out("pipe-drop");
  RunConfig c = mini_config(out.path());
  c.min_tokens = 1300;
  RunResult r = run_pipeline(c);
  EXPECT_FALSE(r.dropped.empty());
  EXPECT_EQ(r.warnings.size(), r.dropped.size());
  EXPECT_EQ(r.stats.n_witnesses + r.dropped.size(), 12u);
  EXPECT_GE(r.stats.witness_tokens_min, 1300u);
}

TEST(Pipeline, MemberProfile) {
  oracle::TempDir out("pipe-members");
  RunConfig c = mini_config(out.path());
  c.profile_members = {"W01", "W04"};
  run_pipeline(c);
  EXPECT_TRUE(std::filesystem::exists(out.path() / "profile_members.csv"));
  EXPECT_TRUE(std::filesystem::exists(out.path() / "profile_members_display.csv"));
  c.profile_members = {"nobody"};
  EXPECT_THROW(run_pipeline(c), Error);
}

TEST(Pipeline, ConfigValidation) {
  RunConfig c = mini_config("unused");
  c.mfw = 0;
  EXPECT_THROW(c.validate(), Error);
  c = mini_config("unused");
  c.k = 0;
  EXPECT_THROW(c.validate(), Error);
  c = mini_config("unused");
  c.sweep_levels = std::vector<std::size_t>{};
  EXPECT_THROW(c.validate(), Error);
  c = mini_config("");
  EXPECT_THROW(c.validate(), Error);
  c = mini_config("unused");
  c.k = 20;
  EXPECT_THROW(run_pipeline(c), Error);
}

#ifdef SCRIPTOMETER_CLI

TEST(Cli, NonexistentInputNamesPath) {
  oracle::TempDir out("cli-missing");
  Command c = run(std::string(SCRIPTOMETER_CLI) + " --input /nonexistent/corpus-dir --out " + out.path().string());
  EXPECT_NE(c.status, 0);
  EXPECT_NE(c.output.find("/nonexistent/corpus-dir"), std::string::npos) << c.output;
  EXPECT_NE(c.output.find("corpus_ingest"), std::string::npos) << c.output;
}

TEST(Cli, RunsMiniCorpus) {
  oracle::TempDir out("cli-run");
  Command c = run(std::string(SCRIPTOMETER_CLI) + " --input " + SCRIPTOMETER_MINI_CORPUS +
                  " --mfw 100 --min-tokens 10 --k 2 --sweep 50,100,200 --out " + out.path().string());
  EXPECT_EQ(c.status, 0) << c.output;
  EXPECT_NE(c.output.find("witnesses: 12"), std::string::npos) << c.output;
  EXPECT_TRUE(std::filesystem::exists(out.path() / "stability_ari.csv"));
}

TEST(Cli, RejectsBadArguments) {
  std::string cli = SCRIPTOMETER_CLI;
  EXPECT_NE(run(cli + " --input x --out y --sweep 50,abc").status, 0);
  EXPECT_NE(run(cli + " --input x --out y --metric cosine").status, 0);
  EXPECT_NE(run(cli + " --out y").status, 0);
  Command version = run(cli + " --version");
  EXPECT_EQ(version.status, 0);
  EXPECT_NE(version.output.find("scriptometer"), std::string::npos);
}

TEST(Cli, ThreadCountDoesNotChangeOutput) {
  oracle::TempDir out("cli-threads");
  std::string args = std::string(" --input ") + SCRIPTOMETER_MINI_CORPUS +
                     " --mfw 100 --min-tokens 10 --sweep 50,100,200 --out " + out.path().string();
  ASSERT_EQ(run("SCRIPTOMETER_THREADS=1 " + std::string(SCRIPTOMETER_CLI) + args).status, 0);
  auto one = oracle::snapshot_dir(out.path());
  ASSERT_EQ(run("SCRIPTOMETER_THREADS=8 " + std::string(SCRIPTOMETER_CLI) + args).status, 0);
  auto eight = oracle::snapshot_dir(out.path());
  EXPECT_EQ(one, eight);
}

#endif
