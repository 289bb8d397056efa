#pragma once

#include <cstddef>
#include <vector>

#include "pai/core.hpp"

namespace pai {

struct BandPoint {
  double q = 0.0;
  double energy = 0.0;
};

struct BandMinimum {
  double q_star = 0.0;
  double energy = 0.0;
};

/// Search window and resolution used by find_band_minimum.
inline constexpr double kBandWindow = 3.0;
inline constexpr std::size_t kBandCoarsePoints = 2001;
inline constexpr double kBandTolerance = 1e-10;
/// Minima whose energies differ by at most this are treated as tied; the one
/// with q >= 0 wins.
inline constexpr double kBandTieTolerance = 1e-12;

/// `n` uniformly spaced points on [lo, hi] in ascending order. The midpoint
/// form keeps a symmetric grid exactly symmetric: x_i == -x_{n-1-i} when
/// lo == -hi. Throws BadGrid unless n >= 2 and lo < hi are finite.
std::vector<double> uniform_grid(double lo, double hi, std::size_t n);

/// Lowest dressed band on a uniform q grid.
std::vector<BandPoint> scan_band(double omega, double delta, double epsilon, double q_min,
                                 double q_max, std::size_t n);

/// Global minimum of the lowest band over q in [-3, 3].
///
/// A 2001-point scan finds every coarse local minimum; each is refined by
/// golden-section search to a bracket width of 1e-10 and the lowest refined
/// value wins (ties resolved towards q >= 0).
BandMinimum find_band_minimum(double omega, double delta, double epsilon);

}  // namespace pai
