#pragma once

#include <array>
#include <span>

#include "pai/core.hpp"
#include "pai/series.hpp"

namespace pai {

/// RF-prepared spinor after a Y rotation by theta_y on the two-pole Bloch
/// sphere (pole 1: m_f = 0; pole 2: the symmetric m_f = +-1 combination).
struct RfState {
  double theta_y = 0.0;
  SpinorAmplitudes amps;
};

/// (sin(t/2)/sqrt2, cos(t/2), sin(t/2)/sqrt2), sign-canonicalized.
/// Throws NonFinite for a non-finite angle.
SpinorAmplitudes rf_amplitudes(double theta_y);
RfState rf_state(double theta_y);

/// (sin^2(t/2)/2, cos^2(t/2), sin^2(t/2)/2) in (m_f = -1, 0, +1) order.
std::array<double, 3> rf_populations(double theta_y);

/// Rate ratios along the given angles (columns with, without, cross).
/// `thetas` must be strictly increasing. Throws ZeroBareChannel.
SweepSeries rf_rate_curve(const ChannelSpec& channel, std::span<const double> thetas);

}  // namespace pai
