#include "pai/channels.hpp"

#include <cmath>
#include <string>

namespace pai {

ChannelSpec cg_table(int total_f) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double inv_sqrt6 = 1.0 / std::sqrt(6.0);
  switch (total_f) {
    case 0: return {0, -inv_sqrt3, inv_sqrt3, inv_sqrt3};
    case 1: return {1, 0.0, inv_sqrt2, -inv_sqrt2};
    case 2: return {2, 2.0 * inv_sqrt6, inv_sqrt6, inv_sqrt6};
    default:
      throw Error(Errc::UnsupportedChannel,
                  "total spin F=" + std::to_string(total_f) + " is not a two-f=1 channel");
  }
}

void require_bare_projection(const ChannelSpec& channel) {
  if (channel.g_00 == 0.0) {
    throw Error(Errc::ZeroBareChannel, "channel F=" + std::to_string(channel.total_f) +
                                           " has no m_f=0 + m_f=0 projection");
  }
}

ProjectionAmplitude project(const SpinorAmplitudes& amps, const ChannelSpec& channel) noexcept {
  const double c0_sq = amps.c_0() * amps.c_0();
  const double pm = amps.c_p1() * amps.c_m1();
  return {channel.g_00, channel.g_00 * c0_sq + (channel.g_pm + channel.g_mp) * pm};
}

RatioResult rate_ratio(const SpinorAmplitudes& amps, const ChannelSpec& channel) {
  require_bare_projection(channel);
  const ProjectionAmplitude proj = project(amps, channel);
  const double c0_sq = amps.c_0() * amps.c_0();
  // Pathway amplitudes relative to the bare one.
  const double direct = c0_sq;
  const double exchange = (channel.g_pm + channel.g_mp) / channel.g_00 * amps.c_p1() * amps.c_m1();

  RatioResult r;
  r.with_interference = (proj.dressed * proj.dressed) / (proj.bare * proj.bare);
  r.without_interference = direct * direct + exchange * exchange;
  r.cross_term = r.with_interference - r.without_interference;
  return r;
}

RatioResult rate_ratio_f0(const SpinorAmplitudes& amps) { return rate_ratio(amps, cg_table(0)); }

RatioResult rate_ratio_f2(const SpinorAmplitudes& amps) { return rate_ratio(amps, cg_table(2)); }

}  // namespace pai
