#pragma once

#include <cstddef>

#include "pai/core.hpp"
#include "pai/series.hpp"

namespace pai {

/// Default sweep grids.
inline constexpr double kOmegaSweepMax = 15.0;
inline constexpr std::size_t kOmegaSweepPoints = 301;
inline constexpr double kDeltaSweepSpan = 3.0;
inline constexpr std::size_t kDeltaSweepPoints = 301;
inline constexpr double kDeltaSweepOmega = 5.4;
inline constexpr std::size_t kThetaSweepPoints = 361;

/// Points are computed on up to `threads` workers and gathered in grid order,
/// so output does not depend on the thread count.
struct SweepOptions {
  unsigned threads = 1;
};

/// Ratio versus Raman coupling; every point sits at its own band minimum.
/// Columns: with, without, cross.
SweepSeries sweep_omega(const ChannelSpec& channel, double omega_min, double omega_max,
                        std::size_t n, double delta, double epsilon,
                        const SweepOptions& options = {});

/// Ratio versus detuning at fixed coupling. Columns: with, without, cross, q_star.
SweepSeries sweep_delta(const ChannelSpec& channel, double delta_min, double delta_max,
                        std::size_t n, double omega, double epsilon,
                        const SweepOptions& options = {});

/// RF ratio curve on [0, 2 pi]. Columns: with, without, cross, p_m1, p_0, p_p1.
SweepSeries sweep_theta(const ChannelSpec& channel, std::size_t n);

/// RF populations on [0, 2 pi]. Columns: p_m1, p_0, p_p1.
SweepSeries sweep_populations(std::size_t n);

/// Lowest band on [q_min, q_max]. Column: energy.
SweepSeries band_scan_series(double omega, double delta, double epsilon, double q_min,
                             double q_max, std::size_t n);

}  // namespace pai
