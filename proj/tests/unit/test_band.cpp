#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "pai/band.hpp"
#include "pai/dressed.hpp"
#include "pai/oracle.hpp"
#include "support/generators.hpp"

using namespace pai;

TEST(UniformGrid, SymmetricWindowIsExactlyMirrored) {
  const auto g = uniform_grid(-3.0, 3.0, 2001);
  ASSERT_EQ(g.size(), 2001u);
  EXPECT_EQ(g.front(), -3.0);
  EXPECT_EQ(g.back(), 3.0);
  EXPECT_EQ(g[1000], 0.0);
  for (std::size_t i = 0; i < g.size(); ++i) EXPECT_EQ(g[i], -g[g.size() - 1 - i]);
  EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
}

TEST(UniformGrid, RejectsBadGrids) {
  for (auto [lo, hi, n] : {std::tuple{0.0, 1.0, std::size_t{1}}, std::tuple{1.0, 1.0, std::size_t{5}},
                           std::tuple{2.0, 1.0, std::size_t{5}}, std::tuple{0.0, HUGE_VAL, std::size_t{5}}}) {
    try {
      uniform_grid(lo, hi, n);
      FAIL() << "expected BadGrid";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::BadGrid);
    }
  }
}

TEST(ScanBand, UncoupledParabola) {
  const auto pts = scan_band(0.0, 0.0, 0.65, -3.0, 3.0, 7);
  ASSERT_EQ(pts.size(), 7u);
  EXPECT_EQ(pts[3].q, 0.0);
  EXPECT_EQ(pts[3].energy, -0.65);
  // q = +-1: m_f = 0 branch 1 - 0.65 is below the shifted parabolas (1 and 9).
  EXPECT_DOUBLE_EQ(pts[2].energy, 1.0 - 0.65);
  EXPECT_DOUBLE_EQ(pts[4].energy, 1.0 - 0.65);
  // |q| = 2, 3: the m_f = -+1 branch at (|q| - 2)^2 takes over.
  EXPECT_EQ(pts[0].energy, 1.0);
  EXPECT_EQ(pts[1].energy, 0.0);
}

TEST(ScanBand, ZeroDetuningIsSymmetric) {
  const auto pts = scan_band(5.4, 0.0, 0.65, -3.0, 3.0, 301);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_NEAR(pts[i].energy, pts[pts.size() - 1 - i].energy, 1e-12);
  }
}

TEST(ScanBand, MatchesJacobiPointwise) {
  const auto pts = scan_band(5.4, 1.0, 0.65, -3.0, 3.0, 601);
  for (const BandPoint& p : pts) {
    const auto ref = oracle::jacobi_eigensolve(build_hamiltonian({5.4, 1.0, 0.65, p.q}));
    EXPECT_NEAR(p.energy, ref.energies[0], 1e-10);
    EXPECT_EQ(p.energy, ground_state({5.4, 1.0, 0.65, p.q}).energy);
  }
}

TEST(ScanBand, RejectsBadGrid) {
  EXPECT_THROW(scan_band(1.0, 0.0, 0.65, 1.0, -1.0, 10), Error);
  EXPECT_THROW(scan_band(1.0, 0.0, 0.65, -1.0, 1.0, 1), Error);
  EXPECT_THROW(scan_band(-1.0, 0.0, 0.65, -1.0, 1.0, 10), Error);
}

TEST(FindBandMinimum, BareParabola) {
  const BandMinimum m = find_band_minimum(0.0, 0.0, 0.65);
  EXPECT_NEAR(m.q_star, 0.0, 1e-9);
  EXPECT_NEAR(m.energy, -0.65, 1e-15);
}

TEST(FindBandMinimum, StrongDressingSingleWell) {
  const BandMinimum m = find_band_minimum(200.0, 0.0, 0.65);
  EXPECT_NEAR(m.q_star, 0.0, 1e-9);
}

TEST(FindBandMinimum, WeakCouplingMatchesDenseOracle) {
  // The exhaustive 1e-6 scan puts the minimum at q = 0 (single well).
  const BandMinimum ref = oracle::dense_minimum(1.0, 0.0, 0.65, 1e-6);
  EXPECT_EQ(ref.q_star, 0.0);
  const BandMinimum m = find_band_minimum(1.0, 0.0, 0.65);
  EXPECT_NEAR(m.q_star, ref.q_star, 1e-5);
  EXPECT_GE(m.q_star, 0.0);
  EXPECT_NEAR(m.energy, -0.75514917237605017, 1e-12);
}

TEST(FindBandMinimum, DetunedMatchesDenseOracle) {
  const BandMinimum ref = oracle::dense_minimum(5.4, 1.0, 0.65, 1e-6);
  const BandMinimum m = find_band_minimum(5.4, 1.0, 0.65);
  EXPECT_NEAR(m.q_star, ref.q_star, 1e-5);
  EXPECT_LE(m.energy, ref.energy + 1e-12);
  EXPECT_LT(m.q_star, 0.0);
}

TEST(FindBandMinimum, TieResolvesToNonNegativeQ) {
  // epsilon = -1 lifts m_f = 0 and leaves two mirror-image wells near q = +-2.
  const BandMinimum m = find_band_minimum(0.5, 0.0, -1.0);
  EXPECT_GT(m.q_star, 1.0);
  const BandMinimum ref = oracle::dense_minimum(0.5, 0.0, -1.0, 1e-6);
  EXPECT_NEAR(m.q_star, ref.q_star, 1e-5);
}

TEST(FindBandMinimumProperty, OptimalOverGridAndRandomProbes) {
  testkit::Draws draws(31);
  for (int i = 0; i < 50; ++i) {
    const DressedParams p = draws.params();
    const BandMinimum m = find_band_minimum(p.omega, p.delta, p.epsilon);
    const auto pts = scan_band(p.omega, p.delta, p.epsilon, -kBandWindow, kBandWindow, kBandCoarsePoints);
    double coarse_best = HUGE_VAL;
    for (const BandPoint& b : pts) {
      coarse_best = std::min(coarse_best, b.energy);
      EXPECT_LE(m.energy, b.energy + kBandTieTolerance);
    }
    EXPECT_LE(m.energy, coarse_best + kBandTieTolerance);
    for (int k = 0; k < 100; ++k) {
      const double q = draws.uniform(-kBandWindow, kBandWindow);
      EXPECT_LE(m.energy, lowest_energy({p.omega, p.delta, p.epsilon, q}) + kBandTieTolerance);
    }
  }
}

TEST(FindBandMinimumProperty, DetuningReversalMirrorsQ) {
  testkit::Draws draws(32);
  for (int i = 0; i < 100; ++i) {
    const DressedParams p = draws.params();
    const BandMinimum plus = find_band_minimum(p.omega, p.delta, p.epsilon);
    const BandMinimum minus = find_band_minimum(p.omega, -p.delta, p.epsilon);
    EXPECT_NEAR(plus.q_star, -minus.q_star, 1e-8);
    EXPECT_NEAR(plus.energy, minus.energy, 1e-12);
  }
}
