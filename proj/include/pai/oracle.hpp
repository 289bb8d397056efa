#pragma once

// Slow, independent reference implementations used to validate the main
// numerical paths: Jacobi rotations against the closed-form eigensolver, an
// exhaustive q scan against golden-section refinement, and term-by-term pair
// enumeration against the factored rate formula.

#include "pai/band.hpp"
#include "pai/core.hpp"
#include "pai/dressed.hpp"

namespace pai::oracle {

/// Cyclic Jacobi rotations until the off-diagonal norm drops below 1e-14.
/// Sorted ascending, columns sign-canonicalized. Throws NoConvergence after
/// 100 sweeps.
EigenSolution jacobi_eigensolve(const Hamiltonian3& h);

/// <j1 m1; j2 m2 | J M> for integer angular momenta from the Racah formula.
double clebsch_gordan(int j1, int m1, int j2, int m2, int big_j, int big_m);

/// Minimum of the lowest band over every grid point q = -3 + i * step in
/// [-3, 3], ties within 1e-12 resolved towards q >= 0.
///
/// Points are skipped only when a Lipschitz bound (|dE/dq| <= 10 on the
/// window) proves they cannot reach the running minimum, so the result is
/// the same as visiting every point.
BandMinimum dense_minimum(double omega, double delta, double epsilon, double step);

/// Rate ratio from the explicit sum over all nine product states
/// |1,m_a>|1,m_b> weighted by Racah CG coefficients of channel.total_f.
/// Throws UnsupportedChannel or ZeroBareChannel.
RatioResult expand_ratio(const SpinorAmplitudes& amps, const ChannelSpec& channel);

}  // namespace pai::oracle
