#include "pai/sweep.hpp"

#include <array>
#include <numbers>

#include "parallel.hpp"
#include "pai/band.hpp"
#include "pai/channels.hpp"
#include "pai/dressed.hpp"
#include "pai/rf.hpp"

namespace pai {

namespace {

struct DressedPoint {
  RatioResult ratio;
  double q_star = 0.0;
};

DressedPoint dressed_point(const ChannelSpec& channel, double omega, double delta,
                           double epsilon) {
  const BandMinimum m = find_band_minimum(omega, delta, epsilon);
  const GroundState gs = ground_state({omega, delta, epsilon, m.q_star});
  return {rate_ratio(gs.amps, channel), m.q_star};
}

}  // namespace

SweepSeries sweep_omega(const ChannelSpec& channel, double omega_min, double omega_max,
                        std::size_t n, double delta, double epsilon,
                        const SweepOptions& options) {
  require_bare_projection(channel);
  validate_params({omega_min, delta, epsilon, 0.0});
  const std::vector<double> grid = uniform_grid(omega_min, omega_max, n);

  const auto points = detail::ordered_map<DressedPoint>(grid.size(), options.threads, [&](std::size_t i) {
    return dressed_point(channel, grid[i], delta, epsilon);
  });

  SweepSeries series(SeriesKind::OmegaSweep, {"with", "without", "cross"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RatioResult& r = points[i].ratio;
    series.append(grid[i], {r.with_interference, r.without_interference, r.cross_term});
  }
  return series;
}

SweepSeries sweep_delta(const ChannelSpec& channel, double delta_min, double delta_max,
                        std::size_t n, double omega, double epsilon,
                        const SweepOptions& options) {
  require_bare_projection(channel);
  validate_params({omega, delta_min, epsilon, 0.0});
  const std::vector<double> grid = uniform_grid(delta_min, delta_max, n);

  const auto points = detail::ordered_map<DressedPoint>(grid.size(), options.threads, [&](std::size_t i) {
    return dressed_point(channel, omega, grid[i], epsilon);
  });

  SweepSeries series(SeriesKind::DeltaSweep, {"with", "without", "cross", "q_star"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RatioResult& r = points[i].ratio;
    series.append(grid[i], {r.with_interference, r.without_interference, r.cross_term, points[i].q_star});
  }
  return series;
}

SweepSeries sweep_theta(const ChannelSpec& channel, std::size_t n) {
  const std::vector<double> grid = uniform_grid(0.0, 2.0 * std::numbers::pi, n);
  const SweepSeries curve = rf_rate_curve(channel, grid);

  SweepSeries series(SeriesKind::ThetaSweep, {"with", "without", "cross", "p_m1", "p_0", "p_p1"});
  for (const auto& rec : curve.records()) {
    const auto pop = rf_populations(rec.x);
    series.append(rec.x, {rec.values[0], rec.values[1], rec.values[2], pop[0], pop[1], pop[2]});
  }
  return series;
}

SweepSeries sweep_populations(std::size_t n) {
  SweepSeries series(SeriesKind::Populations, {"p_m1", "p_0", "p_p1"});
  for (double theta : uniform_grid(0.0, 2.0 * std::numbers::pi, n)) {
    const auto pop = rf_populations(theta);
    series.append(theta, {pop[0], pop[1], pop[2]});
  }
  return series;
}

SweepSeries band_scan_series(double omega, double delta, double epsilon, double q_min,
                             double q_max, std::size_t n) {
  SweepSeries series(SeriesKind::BandScan, {"energy"});
  for (const BandPoint& p : scan_band(omega, delta, epsilon, q_min, q_max, n)) {
    series.append(p.q, {p.energy});
  }
  return series;
}

}  // namespace pai
