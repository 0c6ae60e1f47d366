#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "gsetkit/campaign.hpp"
#include "gsetkit/oracle.hpp"
#include "support/oracles.hpp"

using namespace gsetkit;

namespace {

CampaignConfig small_campaign(std::uint64_t trials, unsigned workers = 1) {
  CampaignConfig c;
  c.instance_name = "t44";
  c.solver = default_config(SolverKind::simulated_annealing, 50, 0);
  c.num_trials = trials;
  c.master_seed = 20250101;
  c.workers = workers;
  return c;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("gsetkit_test_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

TrialResult fake(Weight cut, double t = 1.0) {
  TrialResult r;
  r.best_cut = cut;
  r.wall_time_s = t;
  return r;
}

}  // namespace

TEST(Summarize, SuccessCounting) {
  const std::vector<TrialResult> results{fake(5), fake(5), fake(7)};
  const std::vector<TargetSpec> targets{{"six", 6, 0.99}};
  const auto s = summarize(results, 10, targets);
  ASSERT_EQ(s.targets.size(), 1u);
  EXPECT_EQ(s.targets[0].successes, 1u);
  EXPECT_DOUBLE_EQ(s.targets[0].p_s, 1.0 / 3.0);
  EXPECT_EQ(s.highest_cut, 7);
  EXPECT_EQ(s.min_cut, 5);
  EXPECT_DOUBLE_EQ(s.average_cut, 17.0 / 3.0);
  EXPECT_EQ(s.cut_histogram.at(5), 2u);
}

TEST(Summarize, SweepsToTargetFromTrials) {
  std::vector<TrialResult> results;
  for (int i = 0; i < 100; ++i) results.push_back(fake(i < 86 ? 14046 : 14040, 0.5));
  const std::vector<TargetSpec> targets{{"99.9%", 14045.94, 0.99}};
  const auto s = summarize(results, 100'000, targets);
  ASSERT_TRUE(s.targets[0].stt);
  EXPECT_NEAR(*s.targets[0].stt, 234'000, 2'340);
  EXPECT_NEAR(*s.targets[0].ttt_s, 0.5 * *s.targets[0].r, 1e-9);
}

TEST(Summarize, UnreachableTarget) {
  const std::vector<TrialResult> results{fake(1), fake(2)};
  const std::vector<TargetSpec> targets{{"big", 10, 0.99}};
  const auto s = summarize(results, 10, targets);
  EXPECT_FALSE(s.targets[0].r);
  EXPECT_NE(summary_csv(s, 2, 1).find("unreachable"), std::string::npos);
}

TEST(Campaign, SingleTrial) {
  const auto inst = generate_torus({4, 4, 1});
  const auto run = run_campaign(inst, small_campaign(1));
  ASSERT_EQ(run.records.size(), 1u);
  EXPECT_EQ(run.summary.trials, 1u);
  EXPECT_EQ(run.records[0].solver.seed, derive_trial_seed(20250101, 0));
}

TEST(Campaign, DeterministicAndParallelIndependent) {
  const auto inst = generate_torus({4, 4, 1});
  auto cfg = small_campaign(40);
  cfg.targets = {{"opt", static_cast<double>(exact_max_cut(inst).cut), 0.99}};
  const auto a = run_campaign(inst, cfg);
  const auto b = run_campaign(inst, cfg);
  cfg.workers = 4;
  const auto c = run_campaign(inst, cfg);
  EXPECT_TRUE(a.summary.same_outcome(b.summary));
  EXPECT_TRUE(a.summary.same_outcome(c.summary));
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(c.records[i].trial, i);
    EXPECT_EQ(a.records[i].best_cut, c.records[i].best_cut);
  }
}

TEST(Campaign, InvalidConfig) {
  const auto inst = generate_torus({4, 4, 1});
  EXPECT_THROW(run_campaign(inst, small_campaign(0)), Error);
  EXPECT_THROW(run_campaign(inst, small_campaign(5, 0)), Error);
}

TEST(Campaign, LogRoundTripAndResume) {
  TempDir dir;
  const auto log = dir.path() / "trials.log";
  const auto inst = generate_torus({4, 4, 1});
  auto cfg = small_campaign(10);
  cfg.log_spins = true;
  const auto full = run_campaign(inst, cfg, log);
  const auto records = read_trial_log_file(log);
  ASSERT_EQ(records.size(), 10u);

  // Keep the first four lines, as if interrupted, and resume.
  std::ifstream in(log);
  std::string text, line;
  for (int i = 0; i < 4 && std::getline(in, line); ++i) text += line + "\n";
  in.close();
  std::ofstream(log, std::ios::trunc) << text;
  const auto resumed = run_campaign(inst, cfg, log);
  EXPECT_EQ(resumed.resumed, 4u);
  EXPECT_TRUE(resumed.summary.same_outcome(full.summary));
  EXPECT_EQ(read_trial_log_file(log).size(), 10u);

  auto other = cfg;
  other.master_seed += 1;
  EXPECT_THROW(run_campaign(inst, other, log), Error);
}

TEST(Campaign, RecordLineRoundTrip) {
  const auto inst = generate_torus({4, 4, 1});
  auto cfg = small_campaign(3);
  cfg.log_spins = true;
  for (const auto& rec : run_campaign(inst, cfg).records) {
    const auto back = TrialRecord::parse_line(rec.to_line());
    EXPECT_EQ(back.trial, rec.trial);
    EXPECT_EQ(back.solver, rec.solver);
    EXPECT_EQ(back.best_cut, rec.best_cut);
    EXPECT_EQ(back.spins_hex, rec.spins_hex);
    EXPECT_EQ(back.wall_time_s, rec.wall_time_s);
  }
}

TEST(Campaign, ReplayReproducesEveryTrial) {
  const auto inst = generate_torus({5, 5, 2});
  auto cfg = small_campaign(12, 3);
  cfg.log_spins = true;
  for (const auto& rec : run_campaign(inst, cfg).records) {
    const auto again = replay(inst, TrialRecord::parse_line(rec.to_line()));
    EXPECT_EQ(again.best_cut, rec.best_cut);
    EXPECT_EQ(encode_hex(again.best_spins), rec.spins_hex.value());
  }
}

TEST(SweepScan, LadderShape) {
  const auto inst = generate_torus({5, 5, 7});
  auto cfg = small_campaign(20);
  cfg.sweep_scan = {10, 30, 100, 300};
  const auto rows = sweep_scan(inst, cfg);
  ASSERT_EQ(rows.size(), 4u);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_GE(static_cast<double>(rows[i].highest_cut), rows[i].average_cut);
    if (i > 0) {
      EXPECT_GE(rows[i].highest_cut, rows[i - 1].highest_cut);
    }
  }
  EXPECT_EQ(scan_csv(rows).substr(0, 31), "sweeps,highest_cut,average_cut\n");
}

TEST(SweepScan, Rejections) {
  const auto inst = generate_torus({4, 4, 1});
  auto cfg = small_campaign(2);
  EXPECT_THROW(sweep_scan(inst, cfg), Error);
  cfg.sweep_scan = {30, 10};
  EXPECT_THROW(sweep_scan(inst, cfg), Error);
}

TEST(Histogram, QualityColumn) {
  const std::vector<TrialResult> results{fake(9), fake(10), fake(10)};
  const auto s = summarize(results, 1, std::span<const TargetSpec>{});
  EXPECT_EQ(histogram_csv(s), "cut,count\n9,1\n10,2\n");
  EXPECT_NE(histogram_csv(s, Weight{10}).find("10,2,1"), std::string::npos) << histogram_csv(s, Weight{10});
}
