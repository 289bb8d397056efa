#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pai/band.hpp"
#include "pai/channels.hpp"
#include "pai/sweep.hpp"

using namespace pai;

TEST(SweepOmega, StartsAtUnityAndStaysBounded) {
  for (int f : {0, 2}) {
    const SweepSeries s = sweep_omega(cg_table(f), 0.0, kOmegaSweepMax, 61, 0.0, kDefaultEpsilon);
    ASSERT_EQ(s.size(), 61u);
    EXPECT_EQ(s.records().front().x, 0.0);
    EXPECT_EQ(s.records().back().x, kOmegaSweepMax);
    EXPECT_NEAR(s.column("with").front(), 1.0, 1e-12);
    for (const auto& r : s.records()) {
      EXPECT_GE(r.values[0], 0.0);
      EXPECT_LE(r.values[0], 1.0 + 1e-12);
      EXPECT_NEAR(r.values[0], r.values[1] + r.values[2], 1e-12);
    }
  }
}

TEST(SweepOmega, InterferenceSigns) {
  const SweepSeries f0 = sweep_omega(cg_table(0), 0.0, 15.0, 31, 0.0, kDefaultEpsilon);
  const SweepSeries f2 = sweep_omega(cg_table(2), 0.0, 15.0, 31, 0.0, kDefaultEpsilon);
  for (std::size_t i = 0; i < f0.size(); ++i) {
    EXPECT_LE(f0.records()[i].values[2], 1e-15);
    EXPECT_GE(f2.records()[i].values[2], -1e-15);
  }
}

TEST(SweepOmega, ThreadCountDoesNotChangeOutput) {
  const SweepSeries one = sweep_omega(cg_table(0), 0.0, 15.0, 41, 0.3, 0.65, {.threads = 1});
  for (unsigned t : {2u, 3u, 8u}) {
    const SweepSeries many = sweep_omega(cg_table(0), 0.0, 15.0, 41, 0.3, 0.65, {.threads = t});
    EXPECT_EQ(to_csv(one), to_csv(many));
  }
}

TEST(SweepDelta, MirrorAndColumns) {
  const SweepSeries s = sweep_delta(cg_table(2), -3.0, 3.0, 61, kDeltaSweepOmega, kDefaultEpsilon);
  EXPECT_EQ(s.columns().back(), "q_star");
  const auto with = s.column("with");
  const auto q = s.column("q_star");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::size_t j = s.size() - 1 - i;
    EXPECT_NEAR(with[i], with[j], 1e-9);
    if (i != j) EXPECT_NEAR(q[i], -q[j], 1e-8);
  }
  EXPECT_EQ(q[30], 0.0);
}

TEST(SweepDelta, ThreadCountDoesNotChangeOutput) {
  const auto a = sweep_delta(cg_table(0), -3.0, 3.0, 31, 5.4, 0.65, {.threads = 1});
  const auto b = sweep_delta(cg_table(0), -3.0, 3.0, 31, 5.4, 0.65, {.threads = 4});
  EXPECT_EQ(to_csv(a), to_csv(b));
}

TEST(SweepDelta, MatchesDirectComputation) {
  const auto s = sweep_delta(cg_table(0), -1.0, 1.0, 5, 5.4, 0.65);
  for (const auto& r : s.records()) {
    const BandMinimum m = find_band_minimum(5.4, r.x, 0.65);
    EXPECT_EQ(r.values[3], m.q_star);
  }
}

TEST(SweepTheta, GridAndPopulationColumns) {
  const SweepSeries s = sweep_theta(cg_table(0), kThetaSweepPoints);
  ASSERT_EQ(s.size(), kThetaSweepPoints);
  EXPECT_EQ(s.records().front().x, 0.0);
  EXPECT_NEAR(s.records().back().x, 2.0 * std::numbers::pi, 1e-15);
  for (const auto& r : s.records()) {
    EXPECT_NEAR(r.values[3] + r.values[4] + r.values[5], 1.0, 1e-12);
  }
  EXPECT_NEAR(s.records()[90].values[0], 0.0, 1e-12);
}

TEST(SweepPopulations, Endpoints) {
  const SweepSeries s = sweep_populations(5);
  EXPECT_EQ(s.columns(), (std::vector<std::string>{"p_m1", "p_0", "p_p1"}));
  EXPECT_NEAR(s.records()[0].values[1], 1.0, 1e-15);
  EXPECT_NEAR(s.records()[2].values[1], 0.0, 1e-15);
  EXPECT_NEAR(s.records()[4].values[1], 1.0, 1e-15);
}

TEST(BandScanSeries, MinimumAgreesWithSearch) {
  const SweepSeries s = band_scan_series(1.0, 0.0, kDefaultEpsilon, -3.0, 3.0, 601);
  const auto e = s.column("energy");
  const double coarse = *std::min_element(e.begin(), e.end());
  const BandMinimum m = find_band_minimum(1.0, 0.0, kDefaultEpsilon);
  EXPECT_LE(m.energy, coarse);
  EXPECT_NEAR(m.energy, coarse, 1e-3);
}

TEST(Sweeps, InvalidInputs) {
  EXPECT_THROW(sweep_omega(cg_table(0), 0.0, 15.0, 1, 0.0, 0.65), Error);
  EXPECT_THROW(sweep_omega(cg_table(0), -1.0, 15.0, 11, 0.0, 0.65), Error);
  EXPECT_THROW(sweep_delta(cg_table(1), -1.0, 1.0, 11, 5.4, 0.65), Error);
  EXPECT_THROW(sweep_theta(cg_table(0), 0), Error);
}
