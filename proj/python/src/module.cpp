#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

#include "pai/band.hpp"
#include "pai/channels.hpp"
#include "pai/core.hpp"
#include "pai/dressed.hpp"
#include "pai/rf.hpp"
#include "pai/series.hpp"
#include "pai/sweep.hpp"

namespace py = pybind11;

namespace {

pai::SpinorAmplitudes to_amps(const std::array<double, 3>& c) {
  return pai::SpinorAmplitudes::normalized(c[0], c[1], c[2]);
}

py::dict series_dict(const pai::SweepSeries& s) {
  py::dict d;
  d["kind"] = std::string(pai::to_string(s.kind()));
  d["x"] = s.xs();
  for (const auto& c : s.columns()) d[py::str(c)] = s.column(c);
  return d;
}

py::dict ratio_dict(const pai::RatioResult& r) {
  py::dict d;
  d["with"] = r.with_interference;
  d["without"] = r.without_interference;
  d["cross"] = r.cross_term;
  return d;
}

}  // namespace

PYBIND11_MODULE(_pai, m) {
  m.doc() = "Dressed-state photoassociation rate ratios";

  // pai::Error surfaces as pai.PaiError, a ValueError subclass. Plain
  // std::invalid_argument already maps to ValueError.
  static py::exception<pai::Error> error(m, "PaiError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const pai::Error& e) {
      py::object exc = py::handle(error.ptr())(e.what());
      exc.attr("code") = py::str(pai::to_string(e.code()));
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.attr("DEFAULT_EPSILON") = pai::kDefaultEpsilon;

  m.def(
      "ground_state",
      [](double omega, double delta, double epsilon, double q) {
        const pai::GroundState gs = pai::ground_state({omega, delta, epsilon, q});
        return py::make_tuple(gs.energy, gs.amps.components());
      },
      py::arg("omega"), py::arg("delta"), py::arg("epsilon") = pai::kDefaultEpsilon,
      py::arg("q") = 0.0, "(energy, (c_m1, c_0, c_p1)) of the lowest dressed state");

  m.def(
      "eigenvalues",
      [](double omega, double delta, double epsilon, double q) {
        return pai::eigenvalues(pai::build_hamiltonian({omega, delta, epsilon, q}));
      },
      py::arg("omega"), py::arg("delta"), py::arg("epsilon") = pai::kDefaultEpsilon,
      py::arg("q") = 0.0);

  m.def(
      "find_band_minimum",
      [](double omega, double delta, double epsilon) {
        const pai::BandMinimum b = pai::find_band_minimum(omega, delta, epsilon);
        return py::make_tuple(b.q_star, b.energy);
      },
      py::arg("omega"), py::arg("delta"), py::arg("epsilon") = pai::kDefaultEpsilon,
      "(q_star, energy) of the lowest band on [-3, 3]");

  m.def(
      "cg_table",
      [](int f) {
        const pai::ChannelSpec c = pai::cg_table(f);
        return py::make_tuple(c.g_00, c.g_pm, c.g_mp);
      },
      py::arg("total_f"), "(g_00, g_pm, g_mp) for |F, 0>");

  m.def(
      "rate_ratio",
      [](const std::array<double, 3>& amps, int f) {
        return ratio_dict(pai::rate_ratio(to_amps(amps), pai::cg_table(f)));
      },
      py::arg("amps"), py::arg("total_f"), "Ratio for (c_m1, c_0, c_p1); amplitudes are renormalized");

  m.def(
      "rf_amplitudes",
      [](double theta) { return pai::rf_amplitudes(theta).components(); }, py::arg("theta_y"));

  m.def(
      "sweep_omega",
      [](int f, double lo, double hi, std::size_t n, double delta, double epsilon, unsigned threads) {
        return series_dict(pai::sweep_omega(pai::cg_table(f), lo, hi, n, delta, epsilon, {threads}));
      },
      py::arg("total_f"), py::arg("omega_min") = 0.0, py::arg("omega_max") = pai::kOmegaSweepMax,
      py::arg("n") = pai::kOmegaSweepPoints, py::arg("delta") = 0.0,
      py::arg("epsilon") = pai::kDefaultEpsilon, py::arg("threads") = 1u);

  m.def(
      "sweep_delta",
      [](int f, double lo, double hi, std::size_t n, double omega, double epsilon, unsigned threads) {
        return series_dict(pai::sweep_delta(pai::cg_table(f), lo, hi, n, omega, epsilon, {threads}));
      },
      py::arg("total_f"), py::arg("delta_min") = -pai::kDeltaSweepSpan,
      py::arg("delta_max") = pai::kDeltaSweepSpan, py::arg("n") = pai::kDeltaSweepPoints,
      py::arg("omega") = pai::kDeltaSweepOmega, py::arg("epsilon") = pai::kDefaultEpsilon,
      py::arg("threads") = 1u);

  m.def(
      "sweep_theta",
      [](int f, std::size_t n) { return series_dict(pai::sweep_theta(pai::cg_table(f), n)); },
      py::arg("total_f"), py::arg("n") = pai::kThetaSweepPoints);

  m.def(
      "sweep_populations", [](std::size_t n) { return series_dict(pai::sweep_populations(n)); },
      py::arg("n") = pai::kThetaSweepPoints);
}
