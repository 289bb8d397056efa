#include "pai/rf.hpp"

#include <cmath>
#include <numbers>

#include "pai/channels.hpp"

namespace pai {

namespace {

void require_finite(double theta) {
  if (!std::isfinite(theta)) throw Error(Errc::NonFinite, "rotation angle must be finite");
}

}  // namespace

SpinorAmplitudes rf_amplitudes(double theta_y) {
  require_finite(theta_y);
  const double side = std::sin(0.5 * theta_y) / std::numbers::sqrt2;
  const double center = std::cos(0.5 * theta_y);
  return canonicalize(SpinorAmplitudes::make(side, center, side));
}

RfState rf_state(double theta_y) { return {theta_y, rf_amplitudes(theta_y)}; }

std::array<double, 3> rf_populations(double theta_y) {
  require_finite(theta_y);
  const double s = std::sin(0.5 * theta_y);
  const double c = std::cos(0.5 * theta_y);
  const double side = 0.5 * s * s;
  return {side, c * c, side};
}

SweepSeries rf_rate_curve(const ChannelSpec& channel, std::span<const double> thetas) {
  require_bare_projection(channel);
  SweepSeries series(SeriesKind::ThetaSweep, {"with", "without", "cross"});
  for (double theta : thetas) {
    const RatioResult r = rate_ratio(rf_amplitudes(theta), channel);
    series.append(theta, {r.with_interference, r.without_interference, r.cross_term});
  }
  return series;
}

}  // namespace pai
