#pragma once

// Shared types for the dressed-state photoassociation model.
//
// Units: energies in recoil energy E_r, momenta in recoil momentum k_r,
// so the kinetic term of a state with momentum k is simply k^2.

#include <array>
#include <stdexcept>
#include <string>

namespace pai {

enum class Errc {
  NonFinite = 1,
  NegativeOmega,
  NotNormalized,
  BadGrid,
  Degenerate,
  UnsupportedChannel,
  ZeroBareChannel,
  NoConvergence,
  Io,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Quadratic Zeeman shift of the m_f = 0 level at a ~5 G bias field.
inline constexpr double kDefaultEpsilon = 0.65;

struct DressedParams {
  double omega = 0.0;                ///< Raman coupling
  double delta = 0.0;                ///< two-photon detuning
  double epsilon = kDefaultEpsilon;  ///< quadratic Zeeman shift
  double q = 0.0;                    ///< quasimomentum
};

/// Returns `p` unchanged, or throws NonFinite / NegativeOmega.
DressedParams validate_params(const DressedParams& p);

/// Real spin-1 amplitudes in the order (m_f = -1, 0, +1).
///
/// Construction enforces unit norm. The canonical sign (largest component
/// positive) is applied by every producer in the library, but the type can
/// hold any gauge so that gauge invariance is testable.
class SpinorAmplitudes {
 public:
  static constexpr double kNormTolerance = 1e-12;

  /// The bare m_f = 0 state (0, 1, 0).
  SpinorAmplitudes() : c_{0.0, 1.0, 0.0} {}

  /// Throws NotNormalized if |c|^2 deviates from 1 by more than kNormTolerance.
  static SpinorAmplitudes make(double c_m1, double c_0, double c_p1);
  /// Rescales to unit norm; throws NotNormalized for the zero vector.
  static SpinorAmplitudes normalized(double c_m1, double c_0, double c_p1);

  double c_m1() const noexcept { return c_[0]; }
  double c_0() const noexcept { return c_[1]; }
  double c_p1() const noexcept { return c_[2]; }
  const std::array<double, 3>& components() const noexcept { return c_; }
  std::array<double, 3> populations() const noexcept;

  SpinorAmplitudes operator-() const noexcept;

  friend bool operator==(const SpinorAmplitudes&, const SpinorAmplitudes&) = default;

 private:
  explicit SpinorAmplitudes(std::array<double, 3> c) : c_(c) {}
  std::array<double, 3> c_;
};

/// Flips the global sign so that the largest-magnitude component is positive.
/// Components within 1e-12 of the largest magnitude count as tied; the first
/// of them in (m_f = -1, 0, +1) order decides.
SpinorAmplitudes canonicalize(const SpinorAmplitudes& amps) noexcept;
bool is_canonical(const SpinorAmplitudes& amps) noexcept;

/// The same sign rule applied to a bare 3-vector.
std::array<double, 3> canonical_sign(const std::array<double, 3>& v) noexcept;

/// Total-spin channel |F, m_F = 0> of two f = 1 atoms and its CG row.
struct ChannelSpec {
  int total_f = 0;
  double g_00 = 0.0;  ///< <1,0;1,0|F,0>
  double g_pm = 0.0;  ///< <1,+1;1,-1|F,0>
  double g_mp = 0.0;  ///< <1,-1;1,+1|F,0>
};

/// Rate ratio k_sup / k_{0,0} with and without the pathway cross term.
struct RatioResult {
  double with_interference = 0.0;
  double without_interference = 0.0;
  double cross_term = 0.0;
};

}  // namespace pai
