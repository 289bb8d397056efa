#pragma once

#include "pai/core.hpp"

namespace pai {

/// Amplitude of the pair state on |F, 0>, with the Raman phases
/// exp(+-i k_r . r_ab) set to 1 (molecule size << Raman wavelength).
struct ProjectionAmplitude {
  double bare = 0.0;     ///< both atoms in m_f = 0
  double dressed = 0.0;  ///< g_00 C_0^2 + (g_pm + g_mp) C_+1 C_-1
};

/// Condon-Shortley coefficients <1,m;1,-m|F,0> for F in {0, 1, 2}.
/// Throws UnsupportedChannel for any other F.
ChannelSpec cg_table(int total_f);

ProjectionAmplitude project(const SpinorAmplitudes& amps, const ChannelSpec& channel) noexcept;

/// k_sup / k_{0,0} = |dressed|^2 / |bare|^2.
///
/// `without_interference` drops only the cross term between the
/// (0,0) pathway and the (+1,-1)/(-1,+1) pathways; `cross_term` is the
/// difference. Throws ZeroBareChannel when g_00 == 0.
RatioResult rate_ratio(const SpinorAmplitudes& amps, const ChannelSpec& channel);

/// |F=0,0>: (C_0^2 - 2 C_+1 C_-1)^2, destructive for physical ground states.
RatioResult rate_ratio_f0(const SpinorAmplitudes& amps);
/// |F=2,0>: (C_0^2 + C_+1 C_-1)^2, constructive for physical ground states.
RatioResult rate_ratio_f2(const SpinorAmplitudes& amps);

/// Throws ZeroBareChannel if the channel has no bare m_f = 0 projection.
void require_bare_projection(const ChannelSpec& channel);

}  // namespace pai
