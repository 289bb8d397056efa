// pai: command-line front end for dressed-state photoassociation ratios.
//
// Exit codes: 0 success, 2 invalid input, 3 channel without bare projection,
// 4 I/O failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pai/band.hpp"
#include "pai/channels.hpp"
#include "pai/dressed.hpp"
#include "pai/series.hpp"
#include "pai/sweep.hpp"

namespace {

enum ExitCode { kOk = 0, kValidation = 2, kZeroBareChannel = 3, kIo = 4 };

struct Common {
  std::string out;
  bool units_comment = false;
  bool no_interference_column = false;
  std::string plot_script;
  unsigned threads = 1;
};

struct Dressed {
  double omega = 0.0;
  double delta = 0.0;
  double epsilon = pai::kDefaultEpsilon;
  std::optional<double> q;
};

pai::ChannelSpec parse_channel(const std::string& name) {
  return pai::cg_table(name.at(1) - '0');
}

void write_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << std::flush;
    if (!std::cout) throw pai::Error(pai::Errc::Io, "failed to write to stdout");
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw pai::Error(pai::Errc::Io, "cannot open " + path);
  file << text;
  file.close();
  if (!file) throw pai::Error(pai::Errc::Io, "failed to write " + path);
}

void write_plot_script(const pai::SweepSeries& series, const Common& common) {
  if (common.plot_script.empty()) return;
  if (common.out.empty()) {
    throw std::invalid_argument("--plot-script needs --out so the script can reference the CSV");
  }
  std::ostringstream s;
  s << "# gnuplot script for " << pai::to_string(series.kind()) << "\n"
    << "set datafile separator ','\n"
    << "set key autotitle columnhead\n"
    << "set xlabel 'x'\n"
    << "plot for [i=2:" << series.columns().size() + 1 << "] '" << common.out
    << "' using 1:i with lines\n";
  write_text(s.str(), common.plot_script);
}

void emit_series(pai::SweepSeries series, const Common& common) {
  if (common.no_interference_column) series = series.without_column("without");
  write_text(pai::to_csv(series, {common.units_comment}), common.out);
  write_plot_script(series, common);
}

std::string row(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += pai::format_number(values[i]);
  }
  return s + '\n';
}

void add_common(CLI::App* cmd, Common& common, bool series_output) {
  cmd->add_option("--out", common.out, "Output path (default stdout)");
  if (!series_output) return;
  cmd->add_flag("--units-comment", common.units_comment, "Prepend a '#' units line");
  cmd->add_flag("--no-interference-column", common.no_interference_column,
                "Omit the without-interference column");
  cmd->add_option("--plot-script", common.plot_script, "Also write a gnuplot script here");
  cmd->add_option("--threads", common.threads, "Worker threads for sweep points")
      ->check(CLI::Range(1u, 256u));
}

void add_dressed(CLI::App* cmd, Dressed& d, bool with_q) {
  cmd->add_option("--omega", d.omega, "Raman coupling / E_r")->check(CLI::NonNegativeNumber);
  cmd->add_option("--delta", d.delta, "Detuning / E_r");
  cmd->add_option("--epsilon", d.epsilon, "Quadratic Zeeman shift / E_r");
  if (with_q) cmd->add_option("--q", d.q, "Quasimomentum / k_r (default: band minimum)");
}

pai::DressedParams resolve(const Dressed& d) {
  pai::DressedParams p{d.omega, d.delta, d.epsilon, 0.0};
  pai::validate_params(p);
  p.q = d.q ? *d.q : pai::find_band_minimum(d.omega, d.delta, d.epsilon).q_star;
  return pai::validate_params(p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coherent control of photoassociation in a Raman-dressed or RF-prepared spin-1 BEC"};
  app.require_subcommand(1);

  Common common;
  Dressed dressed;
  std::string channel_name = "F0";
  // CLI11 writes default_val into the bound variable immediately, so every
  // subcommand needs its own grid settings.
  struct Grid {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t points = 0;
    double omega = 0.0;
  };
  Grid scan_grid, omega_grid, delta_grid, theta_grid, pop_grid;
  std::vector<double> amps;

  auto add_channel = [&](CLI::App* cmd) {
    cmd->add_option("--channel", channel_name, "Scattering channel |F,0>")
        ->check(CLI::IsMember({"F0", "F1", "F2"}));
  };

  auto* ground = app.add_subcommand("ground", "Dressed ground state: energy and amplitudes");
  add_dressed(ground, dressed, true);
  add_common(ground, common, false);

  auto* band_min = app.add_subcommand("band-min", "Quasimomentum of the lowest-band minimum");
  add_dressed(band_min, dressed, false);
  add_common(band_min, common, false);

  auto* band_scan = app.add_subcommand("band-scan", "Lowest band energy on a q grid");
  add_dressed(band_scan, dressed, false);
  band_scan->add_option("--q-min", scan_grid.lo, "Lower q / k_r")->default_val(-3.0);
  band_scan->add_option("--q-max", scan_grid.hi, "Upper q / k_r")->default_val(3.0);
  band_scan->add_option("--points", scan_grid.points, "Grid points")->default_val(601);
  add_common(band_scan, common, true);

  auto* sweep_omega = app.add_subcommand("sweep-omega", "Ratio versus Raman coupling");
  add_channel(sweep_omega);
  sweep_omega->add_option("--omega-min", omega_grid.lo, "Lower Omega / E_r")->default_val(0.0);
  sweep_omega->add_option("--omega-max", omega_grid.hi, "Upper Omega / E_r")
      ->default_val(pai::kOmegaSweepMax);
  sweep_omega->add_option("--points", omega_grid.points, "Grid points")
      ->default_val(pai::kOmegaSweepPoints);
  sweep_omega->add_option("--delta", dressed.delta, "Detuning / E_r");
  sweep_omega->add_option("--epsilon", dressed.epsilon, "Quadratic Zeeman shift / E_r");
  add_common(sweep_omega, common, true);

  auto* sweep_delta = app.add_subcommand("sweep-delta", "Ratio versus detuning");
  add_channel(sweep_delta);
  sweep_delta->add_option("--delta-min", delta_grid.lo, "Lower delta / E_r")
      ->default_val(-pai::kDeltaSweepSpan);
  sweep_delta->add_option("--delta-max", delta_grid.hi, "Upper delta / E_r")
      ->default_val(pai::kDeltaSweepSpan);
  sweep_delta->add_option("--points", delta_grid.points, "Grid points")
      ->default_val(pai::kDeltaSweepPoints);
  sweep_delta->add_option("--omega", delta_grid.omega, "Raman coupling / E_r")
      ->default_val(pai::kDeltaSweepOmega);
  sweep_delta->add_option("--epsilon", dressed.epsilon, "Quadratic Zeeman shift / E_r");
  add_common(sweep_delta, common, true);

  auto* sweep_theta = app.add_subcommand("sweep-theta", "RF ratio versus rotation angle");
  add_channel(sweep_theta);
  sweep_theta->add_option("--points", theta_grid.points, "Grid points on [0, 2pi]")
      ->default_val(pai::kThetaSweepPoints);
  add_common(sweep_theta, common, true);

  auto* populations = app.add_subcommand("populations", "RF populations versus rotation angle");
  populations->add_option("--points", pop_grid.points, "Grid points on [0, 2pi]")
      ->default_val(pai::kThetaSweepPoints);
  add_common(populations, common, true);

  auto* ratio = app.add_subcommand("ratio", "Rate ratio for given amplitudes or dressed state");
  add_channel(ratio);
  ratio->add_option("--amps", amps, "c_m1,c_0,c_p1 (renormalized)")->delimiter(',')->expected(3);
  add_dressed(ratio, dressed, true);
  add_common(ratio, common, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kValidation;
  }

  try {
    if (*ground) {
      const pai::DressedParams p = resolve(dressed);
      const pai::GroundState gs = pai::ground_state(p);
      write_text("omega,delta,epsilon,q,energy,c_m1,c_0,c_p1\n" +
                     row({p.omega, p.delta, p.epsilon, p.q, gs.energy, gs.amps.c_m1(),
                          gs.amps.c_0(), gs.amps.c_p1()}),
                 common.out);
    } else if (*band_min) {
      const pai::BandMinimum m =
          pai::find_band_minimum(dressed.omega, dressed.delta, dressed.epsilon);
      write_text("omega,delta,epsilon,q_star,energy\n" +
                     row({dressed.omega, dressed.delta, dressed.epsilon, m.q_star, m.energy}),
                 common.out);
    } else if (*band_scan) {
      emit_series(pai::band_scan_series(dressed.omega, dressed.delta, dressed.epsilon,
                                        scan_grid.lo, scan_grid.hi, scan_grid.points),
                  common);
    } else if (*sweep_omega) {
      emit_series(pai::sweep_omega(parse_channel(channel_name), omega_grid.lo, omega_grid.hi,
                                   omega_grid.points, dressed.delta, dressed.epsilon,
                                   {common.threads}),
                  common);
    } else if (*sweep_delta) {
      emit_series(pai::sweep_delta(parse_channel(channel_name), delta_grid.lo, delta_grid.hi,
                                   delta_grid.points, delta_grid.omega, dressed.epsilon,
                                   {common.threads}),
                  common);
    } else if (*sweep_theta) {
      emit_series(pai::sweep_theta(parse_channel(channel_name), theta_grid.points), common);
    } else if (*populations) {
      emit_series(pai::sweep_populations(pop_grid.points), common);
    } else if (*ratio) {
      const pai::ChannelSpec channel = parse_channel(channel_name);
      const pai::SpinorAmplitudes state =
          amps.empty() ? pai::ground_state(resolve(dressed)).amps
                       : pai::SpinorAmplitudes::normalized(amps[0], amps[1], amps[2]);
      const pai::RatioResult r = pai::rate_ratio(state, channel);
      write_text("channel,with,without,cross\n" + channel_name + "," +
                     row({r.with_interference, r.without_interference, r.cross_term}),
                 common.out);
    }
  } catch (const pai::Error& e) {
    std::cerr << "pai: " << e.what() << '\n';
    switch (e.code()) {
      case pai::Errc::ZeroBareChannel: return kZeroBareChannel;
      case pai::Errc::Io: return kIo;
      default: return kValidation;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "pai: " << e.what() << '\n';
    return kValidation;
  }
  return kOk;
}
