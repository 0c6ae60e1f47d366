#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "gsetkit/metrics.hpp"

using namespace gsetkit;

namespace {

double r_of(double p, double conf = 0.99) { return repetitions_to_target(p, conf).value(); }

double stt(std::uint64_t sweeps, std::uint64_t successes) {
  return sweeps_to_target(sweeps, r_of(static_cast<double>(successes) / 100.0));
}

}  // namespace

TEST(SuccessProbability, Fractions) {
  EXPECT_DOUBLE_EQ(success_probability({100, 86, 1, 0}), 0.86);
  EXPECT_DOUBLE_EQ(success_probability({100, 0, 1, 0}), 0.0);
  EXPECT_DOUBLE_EQ(success_probability({100, 100, 1, 0}), 1.0);
  EXPECT_THROW(success_probability({0, 0, 1, 0}), Error);
  EXPECT_THROW(success_probability({5, 6, 1, 0}), Error);
}

TEST(Repetitions, Values) {
  EXPECT_NEAR(r_of(0.86), std::log(0.01) / std::log(0.14), 1e-12);
  EXPECT_NEAR(r_of(0.86), 2.342, 5e-4);
  EXPECT_NEAR(r_of(0.03), 151.2, 0.05);
  EXPECT_DOUBLE_EQ(r_of(1.0), 1.0);
  EXPECT_FALSE(repetitions_to_target(0.0).has_value());
  EXPECT_THROW(repetitions_to_target(1.5), Error);
  EXPECT_THROW(repetitions_to_target(-0.1), Error);
  EXPECT_THROW(repetitions_to_target(0.5, 1.0), Error);
}

TEST(Repetitions, NotRoundedUp) { EXPECT_LT(r_of(0.66), 5.0); EXPECT_GT(r_of(0.66), 4.0); }

TEST(Repetitions, MaxClauseEngages) {
  for (double conf : {0.5, 0.9, 0.99, 0.999}) {
    EXPECT_EQ(r_of(conf, conf), 1.0);
    EXPECT_EQ(r_of(std::min(1.0, conf + 0.001), conf), 1.0);
    EXPECT_GT(r_of(conf * 0.9, conf), 1.0);
  }
}

TEST(Repetitions, MonotoneOverGrid) {
  for (int ci = 1; ci < 20; ++ci) {
    const double conf = ci / 20.0;
    double prev = INFINITY;
    for (int pi = 1; pi <= 100; ++pi) {
      const double r = r_of(pi / 100.0, conf);
      EXPECT_LE(r, prev);
      prev = r;
      if (ci > 1) {
        EXPECT_GE(r, r_of(pi / 100.0, (ci - 1) / 20.0));
      }
    }
  }
}

TEST(SweepsToTarget, PublishedRows) {
  auto within = [](double got, double printed) { return std::abs(got - printed) <= 0.01 * printed; };
  EXPECT_TRUE(within(stt(80'000, 66), 342'000)) << stt(80'000, 66);
  EXPECT_TRUE(within(stt(2'000'000, 21), 39.1e6)) << stt(2'000'000, 21);
  EXPECT_TRUE(within(stt(100'000, 86), 234'000)) << stt(100'000, 86);
  EXPECT_TRUE(within(stt(3'000'000, 3), 454e6)) << stt(3'000'000, 3);
  EXPECT_TRUE(within(stt(1'500'000, 34), 16.6e6)) << stt(1'500'000, 34);
}

TEST(SweepsToTarget, LinearInR) {
  EXPECT_DOUBLE_EQ(sweeps_to_target(1000, 1.0), 1000.0);
  EXPECT_DOUBLE_EQ(sweeps_to_target(1000, 2.5), 2 * sweeps_to_target(1000, 1.25));
  EXPECT_DOUBLE_EQ(time_to_target(10.0, 1.0), 10.0);
  EXPECT_NEAR(time_to_target(10.0, r_of(0.5)), 66.4, 0.05);
}

TEST(Projection, HardwareTimes) {
  EXPECT_NEAR(project_hw_ttt(234'000), 0.468e-3, 1e-12);
  EXPECT_NEAR(project_hw_ttt(454e6), 0.908, 1e-9);
  EXPECT_EQ(project_hw_ttt(0), 0.0);
  EXPECT_DOUBLE_EQ(project_hw_ttt(1000, 4e-9), 2 * project_hw_ttt(1000, 2e-9));
  EXPECT_DOUBLE_EQ(project_hw_ttt(2000), 2 * project_hw_ttt(1000));
}

TEST(Speedup, Values) {
  EXPECT_NEAR(speedup(25'800, 39.4), 655, 6.55);
  EXPECT_NEAR(speedup(276'000, 77.5), 3560, 35.6);
  EXPECT_DOUBLE_EQ(speedup(3.0, 3.0), 1.0);
  EXPECT_THROW(speedup(0.0, 1.0), Error);
  EXPECT_THROW(speedup(1.0, -1.0), Error);
}

TEST(FormatDuration, Units) {
  EXPECT_EQ(format_duration(234'000 * 2e-9), "0.468 ms");
  EXPECT_EQ(format_duration(2.5), "2.5 s");
  EXPECT_EQ(format_duration(3e-6), "3 us");
  EXPECT_EQ(format_duration(5e-9), "5 ns");
}

TEST(MetricsRow, UnreachableTarget) {
  const auto row = compute_metrics_row("x", 4, 8, {"100%", 10, 0.99}, {100, 0, 50, 0.1});
  EXPECT_FALSE(row.r);
  const auto csv = metrics_csv_row(row);
  EXPECT_NE(csv.find("unreachable"), std::string::npos) << csv;
}

TEST(MetricsRow, FullRow) {
  const auto row = compute_metrics_row("G81", 20000, 40000, {"99.9%", 14045.94, 0.99}, {100, 86, 100'000, 33.1},
                                       276'000.0);
  ASSERT_TRUE(row.stt && row.ttt_s && row.speedup_vs_reference && row.projected_hw_ttt_s);
  EXPECT_NEAR(*row.stt, 234'227, 1);
  EXPECT_NEAR(*row.ttt_s, 33.1 * *row.r, 1e-9);
  EXPECT_NEAR(*row.speedup_vs_reference, 276'000 / *row.ttt_s, 1e-9);
  const auto csv = metrics_csv_row(row);
  const auto header = metrics_csv_header();
  EXPECT_EQ(std::count(csv.begin(), csv.end(), ','), std::count(header.begin(), header.end(), ','));
}
