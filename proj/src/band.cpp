#include "pai/band.hpp"

#include <cmath>
#include <optional>

#include "pai/dressed.hpp"

namespace pai {

std::vector<double> uniform_grid(double lo, double hi, std::size_t n) {
  if (n < 2 || !std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw Error(Errc::BadGrid, "grid needs n >= 2 and finite lo < hi");
  }
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double span = static_cast<double>(n - 1);
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = 2.0 * static_cast<double>(i) - span;
    grid[i] = center + half * (k / span);
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

std::vector<BandPoint> scan_band(double omega, double delta, double epsilon, double q_min,
                                 double q_max, std::size_t n) {
  validate_params({omega, delta, epsilon, 0.0});
  const std::vector<double> grid = uniform_grid(q_min, q_max, n);
  std::vector<BandPoint> out;
  out.reserve(n);
  for (double q : grid) out.push_back({q, lowest_energy({omega, delta, epsilon, q})});
  return out;
}

namespace {

constexpr double kInvPhi = 0.6180339887498948482;

// Both probe points are recomputed from the bracket every iteration and equal
// values keep the middle section, so a mirrored bracket (-b, -a) visits
// exactly the mirrored points.
template <class F>
BandPoint golden_section(F&& f, double a, double b) {
  while (b - a > kBandTolerance) {
    const double step = kInvPhi * (b - a);
    const double c = b - step;
    const double d = a + step;
    const double fc = f(c);
    const double fd = f(d);
    if (fc < fd) {
      b = d;
    } else if (fd < fc) {
      a = c;
    } else {
      a = c;
      b = d;
    }
  }
  const double q = 0.5 * (a + b);
  return {q, f(q)};
}

}  // namespace

BandMinimum find_band_minimum(double omega, double delta, double epsilon) {
  validate_params({omega, delta, epsilon, 0.0});
  auto energy = [&](double q) { return lowest_energy({omega, delta, epsilon, q}); };

  const std::vector<double> grid = uniform_grid(-kBandWindow, kBandWindow, kBandCoarsePoints);
  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) values[i] = energy(grid[i]);

  std::optional<BandPoint> best_neg;
  std::optional<BandPoint> best_pos;
  const std::size_t last = grid.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    const bool left_ok = i == 0 || values[i] <= values[i - 1];
    const bool right_ok = i == last || values[i] <= values[i + 1];
    if (!left_ok || !right_ok) continue;

    BandPoint refined = golden_section(energy, grid[i == 0 ? 0 : i - 1], grid[i == last ? last : i + 1]);
    if (!(refined.energy <= values[i])) refined = {grid[i], values[i]};

    auto& slot = refined.q >= 0.0 ? best_pos : best_neg;
    if (!slot || refined.energy < slot->energy) slot = refined;
  }

  // Every grid has at least one local minimum (the global one).
  BandPoint chosen;
  if (best_pos && (!best_neg || best_pos->energy <= best_neg->energy + kBandTieTolerance)) {
    chosen = *best_pos;
  } else {
    chosen = *best_neg;
  }
  return {chosen.q, chosen.energy};
}

}  // namespace pai
