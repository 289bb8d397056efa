#include "pai/dressed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pai {

double Hamiltonian3::at(int row, int col) const noexcept {
  if (row == col) return diag[static_cast<std::size_t>(row)];
  const int lo = std::min(row, col);
  const int hi = std::max(row, col);
  if (lo == 0 && hi == 1) return off01;
  if (lo == 1 && hi == 2) return off12;
  return off02;
}

Mat3 Hamiltonian3::dense() const noexcept {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) m[i][j] = at(i, j);
  }
  return m;
}

Hamiltonian3 Hamiltonian3::from_dense(const Mat3& m) {
  for (const auto& row : m) {
    for (double v : row) {
      if (!std::isfinite(v)) throw Error(Errc::NonFinite, "matrix entries must be finite");
    }
  }
  if (m[0][1] != m[1][0] || m[1][2] != m[2][1] || m[0][2] != m[2][0]) {
    throw std::invalid_argument("matrix is not exactly symmetric");
  }
  return Hamiltonian3{{m[0][0], m[1][1], m[2][2]}, m[0][1], m[1][2], m[0][2]};
}

Hamiltonian3 build_hamiltonian(const DressedParams& params) {
  const DressedParams p = validate_params(params);
  const double kp = p.q + 2.0;
  const double km = p.q - 2.0;
  Hamiltonian3 h;
  h.diag = {kp * kp - p.delta, p.q * p.q - p.epsilon, km * km + p.delta};
  h.off01 = 0.5 * p.omega;
  h.off12 = 0.5 * p.omega;
  h.off02 = 0.0;
  return h;
}

namespace {

// Relative gap (in units of the spectral radius scale p) below which the two
// close roots are recomputed from the 2x2 block instead of the cubic.
constexpr double kPairRefine = 1e-4;

struct CubicRoots {
  Vec3 values{};
  double scale = 0.0;
  bool diagonal = false;
  bool close_pair = false;
  int far = 2;  // index of the best-separated root
};

// Every expression below is written so that swapping (a00, off01) with
// (a22, off12) leaves the result bitwise unchanged; mirrored Hamiltonians
// (q, delta) -> (-q, -delta) therefore share their spectrum exactly.
CubicRoots cubic_roots(const Hamiltonian3& h) noexcept {
  const double a00 = h.diag[0];
  const double a11 = h.diag[1];
  const double a22 = h.diag[2];
  const double a01 = h.off01;
  const double a12 = h.off12;
  const double a02 = h.off02;

  CubicRoots out;
  const double p1 = (a01 * a01 + a12 * a12) + a02 * a02;
  if (p1 == 0.0) {
    out.diagonal = true;
    out.values = h.diag;
    std::sort(out.values.begin(), out.values.end());
    return out;
  }

  const double trace = (a00 + a22) + a11;
  const double mean = trace / 3.0;
  const double d0 = a00 - mean;
  const double d1 = a11 - mean;
  const double d2 = a22 - mean;
  const double p2 = ((d0 * d0 + d2 * d2) + d1 * d1) + 2.0 * p1;
  const double p = std::sqrt(p2 / 6.0);

  const double b00 = d0 / p;
  const double b11 = d1 / p;
  const double b22 = d2 / p;
  const double b01 = a01 / p;
  const double b12 = a12 / p;
  const double b02 = a02 / p;
  const double det = b11 * (b00 * b22) + 2.0 * (b01 * b12) * b02 -
                     (b00 * b12 * b12 + b22 * b01 * b01) - b11 * b02 * b02;
  const double r = std::clamp(0.5 * det, -1.0, 1.0);
  const double phi = std::acos(r) / 3.0;

  const double hi = mean + 2.0 * p * std::cos(phi);
  const double lo = mean + 2.0 * p * std::cos(phi + 2.0 * std::numbers::pi / 3.0);
  const double mid = (trace - hi) - lo;

  out.values = {lo, mid, hi};
  std::sort(out.values.begin(), out.values.end());
  out.scale = p;
  const double gap01 = out.values[1] - out.values[0];
  const double gap12 = out.values[2] - out.values[1];
  out.far = gap01 <= gap12 ? 2 : 0;
  out.close_pair = std::min(gap01, gap12) < kPairRefine * p;
  return out;
}

double dot(const Vec3& a, const Vec3& b) noexcept {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 scaled(const Vec3& a, double s) noexcept { return {a[0] * s, a[1] * s, a[2] * s}; }

Vec3 minus(const Vec3& a, const Vec3& b) noexcept {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Vec3 unit(const Vec3& a) noexcept { return scaled(a, 1.0 / std::sqrt(dot(a, a))); }

Vec3 mat_vec(const Mat3& m, const Vec3& v) noexcept {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

Vec3 null_vector(const Mat3& a, double lambda) noexcept {
  Mat3 s = a;
  for (int i = 0; i < 3; ++i) s[i][i] -= lambda;
  const Vec3 c01 = cross(s[0], s[1]);
  const Vec3 c02 = cross(s[0], s[2]);
  const Vec3 c12 = cross(s[1], s[2]);
  const double n01 = dot(c01, c01);
  const double n02 = dot(c02, c02);
  const double n12 = dot(c12, c12);
  if (n01 >= n02 && n01 >= n12 && n01 > 0.0) return unit(c01);
  if (n02 >= n12 && n02 > 0.0) return unit(c02);
  if (n12 > 0.0) return unit(c12);
  return {1.0, 0.0, 0.0};
}

// Solves (a - shift I) x = rhs by partial pivoting; pivots smaller than
// `floor` are replaced so a singular shift still yields a finite direction.
Vec3 solve_shifted(const Mat3& a, double shift, Vec3 rhs, double floor) noexcept {
  Mat3 m = a;
  for (int i = 0; i < 3; ++i) m[i][i] -= shift;
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 3; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    std::swap(m[col], m[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    if (std::abs(m[col][col]) < floor) m[col][col] = m[col][col] < 0.0 ? -floor : floor;
    for (int row = col + 1; row < 3; ++row) {
      const double f = m[row][col] / m[col][col];
      for (int k = col; k < 3; ++k) m[row][k] -= f * m[col][k];
      rhs[row] -= f * rhs[col];
    }
  }
  Vec3 x{};
  for (int row = 2; row >= 0; --row) {
    double acc = rhs[row];
    for (int k = row + 1; k < 3; ++k) acc -= m[row][k] * x[k];
    x[row] = acc / m[row][row];
  }
  return x;
}

Vec3 inverse_iteration_step(const Mat3& a, double lambda, const Vec3& v, double floor) noexcept {
  const Vec3 x = solve_shifted(a, lambda, v, floor);
  const double n = std::sqrt(dot(x, x));
  if (!std::isfinite(n) || n == 0.0) return v;
  return scaled(x, 1.0 / n);
}

struct Pair {
  double energy;
  Vec3 vector;
};

}  // namespace

EigenSolution eigensolve(const Hamiltonian3& h) noexcept {
  const CubicRoots roots = cubic_roots(h);
  EigenSolution out;

  if (roots.diagonal) {
    std::array<int, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return h.diag[i] < h.diag[j]; });
    for (int k = 0; k < 3; ++k) {
      out.energies[k] = h.diag[order[k]];
      out.vectors[k] = Vec3{};
      out.vectors[k][order[k]] = 1.0;
    }
    return out;
  }

  const Mat3 a = h.dense();
  const int far = roots.far;
  const int pair_lo = far == 2 ? 0 : 1;
  const int pair_hi = pair_lo + 1;

  const Vec3 v_far = null_vector(a, roots.values[far]);

  // Orthonormal basis (u, w) of the complement of v_far.
  Vec3 u = std::abs(v_far[0]) > std::abs(v_far[1])
               ? unit(Vec3{-v_far[2], 0.0, v_far[0]})
               : unit(Vec3{0.0, v_far[2], -v_far[1]});
  Vec3 w = cross(v_far, u);

  const Vec3 au = mat_vec(a, u);
  const Vec3 aw = mat_vec(a, w);
  const double m00 = dot(u, au);
  const double m01 = dot(u, aw);
  const double m11 = dot(w, aw);
  double t = 0.0;
  if (m01 != 0.0) {
    const double tau = (m11 - m00) / (2.0 * m01);
    t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  Pair pa{m00 - t * m01, minus(scaled(u, c), scaled(w, s))};
  Pair pb{m11 + t * m01, Vec3{s * u[0] + c * w[0], s * u[1] + c * w[1], s * u[2] + c * w[2]}};
  if (pb.energy < pa.energy) std::swap(pa, pb);

  if (!roots.close_pair) {
    pa.energy = roots.values[pair_lo];
    pb.energy = roots.values[pair_hi];
  }

  double max_entry = 0.0;
  for (const auto& row : a) {
    for (double v : row) max_entry = std::max(max_entry, std::abs(v));
  }
  const double floor = std::numeric_limits<double>::epsilon() * max_entry +
                       std::numeric_limits<double>::min();

  Pair pf{roots.values[far], inverse_iteration_step(a, roots.values[far], v_far, floor)};
  if (!roots.close_pair) {
    pa.vector = inverse_iteration_step(a, pa.energy, pa.vector, floor);
    pb.vector = inverse_iteration_step(a, pb.energy, pb.vector, floor);
  }

  pa.vector = unit(minus(pa.vector, scaled(pf.vector, dot(pf.vector, pa.vector))));
  pb.vector = minus(pb.vector, scaled(pf.vector, dot(pf.vector, pb.vector)));
  pb.vector = unit(minus(pb.vector, scaled(pa.vector, dot(pa.vector, pb.vector))));

  std::array<Pair, 3> all{pa, pb, pf};
  if (far == 0) all = {pf, pa, pb};
  std::stable_sort(all.begin(), all.end(),
                   [](const Pair& x, const Pair& y) { return x.energy < y.energy; });
  for (int k = 0; k < 3; ++k) {
    out.energies[k] = all[k].energy;
    out.vectors[k] = canonical_sign(all[k].vector);
  }
  return out;
}

Vec3 eigenvalues(const Hamiltonian3& h) noexcept {
  const CubicRoots roots = cubic_roots(h);
  if (roots.diagonal || !roots.close_pair) return roots.values;
  return eigensolve(h).energies;
}

GroundState ground_state(const DressedParams& p) {
  const EigenSolution sol = eigensolve(build_hamiltonian(p));
  if (sol.energies[1] - sol.energies[0] < kDegeneracyThreshold) {
    throw Error(Errc::Degenerate, "two lowest dressed levels are degenerate");
  }
  const Vec3& v = sol.vectors[0];
  return {sol.energies[0], canonicalize(SpinorAmplitudes::make(v[0], v[1], v[2]))};
}

double lowest_energy(const DressedParams& p) { return eigenvalues(build_hamiltonian(p))[0]; }

}  // namespace pai
