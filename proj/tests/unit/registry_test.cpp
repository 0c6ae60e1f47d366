#include <gtest/gtest.h>

#include "gsetkit/campaign_file.hpp"
#include "gsetkit/registry.hpp"

using namespace gsetkit;

TEST(Registry, EmbeddedRows) {
  const auto reg = Registry::embedded();
  const auto* g72 = reg.find("G72");
  const auto* g77 = reg.find("G77");
  const auto* g81 = reg.find("G81");
  ASSERT_TRUE(g72 && g77 && g81);
  EXPECT_EQ(g72->best_known_cut, 7008);
  EXPECT_EQ(g77->best_known_cut, 9940);
  EXPECT_EQ(g81->best_known_cut, 14060);
  EXPECT_EQ(g72->n, 10000u);
  EXPECT_EQ(g77->m, 28000u);
  EXPECT_EQ(g81->m, 40000u);
  EXPECT_EQ(g77->reference_ttt_999_s, 25800.0);
  EXPECT_EQ(g81->reference_ttt_999_s, 276000.0);
  EXPECT_FALSE(g72->reference_ttt_999_s);
  ASSERT_FALSE(g81->historic_cuts.empty());
  for (const auto& h : g81->historic_cuts) EXPECT_LE(h.cut, 14060);
  EXPECT_EQ(reg.find("G1"), nullptr);
}

TEST(Registry, TextRoundTripAndMerge) {
  const auto reg = Registry::embedded();
  Registry copy;
  copy.merge_text(reg.to_text());
  EXPECT_EQ(copy.to_text(), reg.to_text());

  Registry extra = Registry::embedded();
  extra.merge_text("# local rows\nname=G57 n=5000 m=10000 best_known=3494\nname=G81 n=20000 m=40000 best_known=14062\n");
  EXPECT_EQ(extra.find("G57")->best_known_cut, 3494);
  EXPECT_EQ(extra.find("G81")->best_known_cut, 14062);
  EXPECT_THROW(extra.merge_text("name=bad n=4 m=1 best_known=0\n"), Error);
}

TEST(CampaignFile, ParsesKeys) {
  const auto f = parse_campaign_file(
      "# desk campaign\n"
      "torus = 4x4:1\n"
      "solver = sa\n"
      "sweeps = 50\n"
      "trials = 100\n"
      "master_seed = 42\n"
      "workers = 2\n"
      "target = opt 24\n"
      "target_quality = 0.999\n"
      "best_known = 24\n"
      "sweep_scan = 10, 30,100\n");
  ASSERT_TRUE(f.torus);
  EXPECT_EQ(f.torus->rows, 4u);
  EXPECT_EQ(f.torus->seed, 1u);
  EXPECT_EQ(f.config.solver.kind, SolverKind::simulated_annealing);
  EXPECT_EQ(f.config.solver.sweeps, 50u);
  EXPECT_EQ(f.config.num_trials, 100u);
  EXPECT_EQ(f.config.master_seed, 42u);
  EXPECT_EQ(f.config.workers, 2u);
  ASSERT_EQ(f.config.targets.size(), 1u);
  EXPECT_EQ(f.config.targets[0].label, "opt");
  EXPECT_EQ(f.config.targets[0].target_cut, 24.0);
  EXPECT_EQ(f.config.sweep_scan, (std::vector<std::uint64_t>{10, 30, 100}));
  EXPECT_EQ(f.best_known, 24);
}

TEST(CampaignFile, RejectsUnknownAndMalformed) {
  EXPECT_THROW(parse_campaign_file("colour = red\n"), Error);
  EXPECT_THROW(parse_campaign_file("sweeps fifty\n"), Error);
  EXPECT_THROW(parse_campaign_file("sweeps = -3\n"), Error);
}

TEST(CampaignFile, QualityTargetsFromRegistry) {
  auto f = parse_campaign_file("target_quality = 0.999\ntarget_quality = 1\n");
  resolve_quality_targets(f, Registry::embedded(), "G81");
  ASSERT_EQ(f.config.targets.size(), 2u);
  EXPECT_EQ(f.config.targets[0].label, "99.9%");
  EXPECT_NEAR(f.config.targets[0].target_cut, 14045.94, 1e-9);
  EXPECT_EQ(f.config.targets[1].target_cut, 14060.0);
  auto g = parse_campaign_file("target_quality = 0.999\n");
  EXPECT_THROW(resolve_quality_targets(g, Registry::embedded(), "unknown"), Error);
}
