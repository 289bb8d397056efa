#pragma once

#include <array>

#include "pai/core.hpp"

namespace pai {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// Real symmetric 3x3 matrix, basis order (m_f = -1, 0, +1).
///
/// Only the upper triangle is stored, so the matrix is exactly symmetric by
/// construction.
struct Hamiltonian3 {
  Vec3 diag{};
  double off01 = 0.0;
  double off12 = 0.0;
  double off02 = 0.0;

  double at(int row, int col) const noexcept;
  Mat3 dense() const noexcept;

  /// Throws NonFinite for non-finite entries and std::invalid_argument when
  /// `m` is not exactly symmetric.
  static Hamiltonian3 from_dense(const Mat3& m);
};

/// Spectrum sorted ascending; vectors[i] is the unit eigenvector of energies[i].
struct EigenSolution {
  Vec3 energies{};
  Mat3 vectors{};
};

/// Dressed Hamiltonian in the coupled basis
/// {|-1, q+2>, |0, q>, |+1, q-2>}:
///
///   diag = ((q+2)^2 - delta, q^2 - epsilon, (q-2)^2 + delta)
///   off  = omega / 2 between neighbouring m_f, 0 in the corners.
Hamiltonian3 build_hamiltonian(const DressedParams& p);

/// Eigenvalues only, ascending. Bitwise identical to eigensolve(h).energies.
Vec3 eigenvalues(const Hamiltonian3& h) noexcept;

/// Closed-form (trigonometric) roots of the characteristic cubic. Vectors
/// come from a cross product for the best-separated root and a 2x2 rotation
/// in its orthogonal complement, then one step of inverse iteration and
/// Gram-Schmidt. Each column is sign-canonicalized.
EigenSolution eigensolve(const Hamiltonian3& h) noexcept;

struct GroundState {
  double energy = 0.0;
  SpinorAmplitudes amps;
};

/// Energies closer than this are reported as Degenerate by ground_state.
inline constexpr double kDegeneracyThreshold = 1e-12;

/// Lowest dressed state at p, canonicalized. Throws Degenerate when the two
/// lowest levels are closer than kDegeneracyThreshold.
GroundState ground_state(const DressedParams& p);

/// Lowest eigenvalue of build_hamiltonian(p); same bits as ground_state(p).energy.
double lowest_energy(const DressedParams& p);

}  // namespace pai
