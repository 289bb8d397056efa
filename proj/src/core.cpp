#include "pai/core.hpp"

#include <cmath>

namespace pai {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::NonFinite: return "NonFinite";
    case Errc::NegativeOmega: return "NegativeOmega";
    case Errc::NotNormalized: return "NotNormalized";
    case Errc::BadGrid: return "BadGrid";
    case Errc::Degenerate: return "Degenerate";
    case Errc::UnsupportedChannel: return "UnsupportedChannel";
    case Errc::ZeroBareChannel: return "ZeroBareChannel";
    case Errc::NoConvergence: return "NoConvergence";
    case Errc::Io: return "IoError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

DressedParams validate_params(const DressedParams& p) {
  if (!std::isfinite(p.omega) || !std::isfinite(p.delta) || !std::isfinite(p.epsilon) ||
      !std::isfinite(p.q)) {
    throw Error(Errc::NonFinite, "dressed parameters must be finite");
  }
  if (p.omega < 0.0) {
    throw Error(Errc::NegativeOmega, "Raman coupling must be >= 0");
  }
  return p;
}

SpinorAmplitudes SpinorAmplitudes::make(double c_m1, double c_0, double c_p1) {
  if (!std::isfinite(c_m1) || !std::isfinite(c_0) || !std::isfinite(c_p1)) {
    throw Error(Errc::NonFinite, "amplitudes must be finite");
  }
  const double norm2 = c_m1 * c_m1 + c_0 * c_0 + c_p1 * c_p1;
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw Error(Errc::NotNormalized, "sum of squared amplitudes must be 1");
  }
  return SpinorAmplitudes({c_m1, c_0, c_p1});
}

SpinorAmplitudes SpinorAmplitudes::normalized(double c_m1, double c_0, double c_p1) {
  if (!std::isfinite(c_m1) || !std::isfinite(c_0) || !std::isfinite(c_p1)) {
    throw Error(Errc::NonFinite, "amplitudes must be finite");
  }
  const double norm = std::sqrt(c_m1 * c_m1 + c_0 * c_0 + c_p1 * c_p1);
  if (norm == 0.0) {
    throw Error(Errc::NotNormalized, "cannot normalize the zero vector");
  }
  return SpinorAmplitudes({c_m1 / norm, c_0 / norm, c_p1 / norm});
}

std::array<double, 3> SpinorAmplitudes::populations() const noexcept {
  return {c_[0] * c_[0], c_[1] * c_[1], c_[2] * c_[2]};
}

SpinorAmplitudes SpinorAmplitudes::operator-() const noexcept {
  return SpinorAmplitudes({-c_[0], -c_[1], -c_[2]});
}

namespace {

constexpr double kTieTolerance = 1e-12;

std::size_t sign_index(const std::array<double, 3>& c) noexcept {
  double largest = 0.0;
  for (double v : c) largest = std::max(largest, std::abs(v));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (std::abs(c[i]) >= largest - kTieTolerance) return i;
  }
  return 0;
}

}  // namespace

SpinorAmplitudes canonicalize(const SpinorAmplitudes& amps) noexcept {
  const auto& c = amps.components();
  return c[sign_index(c)] < 0.0 ? -amps : amps;
}

std::array<double, 3> canonical_sign(const std::array<double, 3>& v) noexcept {
  if (v[sign_index(v)] >= 0.0) return v;
  return {-v[0], -v[1], -v[2]};
}

bool is_canonical(const SpinorAmplitudes& amps) noexcept {
  const auto& c = amps.components();
  return c[sign_index(c)] >= 0.0;
}

}  // namespace pai
