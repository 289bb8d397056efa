#include "pai/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <string>

namespace pai::oracle {

namespace {

double off_norm(const Mat3& a) {
  return std::sqrt(2.0 * (a[0][1] * a[0][1] + a[0][2] * a[0][2] + a[1][2] * a[1][2]));
}

Mat3 multiply(const Mat3& x, const Mat3& y) {
  Mat3 z{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) z[i][j] += x[i][k] * y[k][j];
    }
  }
  return z;
}

Mat3 transpose(const Mat3& x) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) t[i][j] = x[j][i];
  }
  return t;
}

}  // namespace

EigenSolution jacobi_eigensolve(const Hamiltonian3& h) {
  constexpr int kMaxSweeps = 100;
  constexpr double kOffTolerance = 1e-14;
  constexpr std::array<std::array<int, 2>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

  Mat3 a = h.dense();
  for (const auto& row : a) {
    for (double x : row) {
      if (!std::isfinite(x)) throw Error(Errc::NonFinite, "matrix entries must be finite");
    }
  }
  Mat3 v{};
  for (int i = 0; i < 3; ++i) v[i][i] = 1.0;

  int sweep = 0;
  while (off_norm(a) >= kOffTolerance) {
    if (++sweep > kMaxSweeps) {
      throw Error(Errc::NoConvergence, "Jacobi iteration did not converge in 100 sweeps");
    }
    for (const auto& [p, q] : kPairs) {
      if (a[p][q] == 0.0) continue;
      const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
      double t;
      if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
      } else {
        t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
      }
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;

      Mat3 rot{};
      for (int i = 0; i < 3; ++i) rot[i][i] = 1.0;
      rot[p][p] = c;
      rot[q][q] = c;
      rot[p][q] = s;
      rot[q][p] = -s;

      a = multiply(transpose(rot), multiply(a, rot));
      a[p][q] = 0.0;
      a[q][p] = 0.0;
      for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) a[j][i] = a[i][j];
      }
      v = multiply(v, rot);
    }
  }

  std::array<int, 3> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) { return a[i][i] < a[j][j]; });
  EigenSolution out;
  for (int k = 0; k < 3; ++k) {
    const int col = order[k];
    out.energies[k] = a[col][col];
    out.vectors[k] = canonical_sign(Vec3{v[0][col], v[1][col], v[2][col]});
  }
  return out;
}

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double clebsch_gordan(int j1, int m1, int j2, int m2, int big_j, int big_m) {
  if (m1 + m2 != big_m) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(big_m) > big_j) return 0.0;
  if (big_j < std::abs(j1 - j2) || big_j > j1 + j2) return 0.0;

  const double norm =
      std::sqrt((2.0 * big_j + 1.0) * factorial(big_j + j1 - j2) * factorial(big_j - j1 + j2) *
                factorial(j1 + j2 - big_j) / factorial(j1 + j2 + big_j + 1));
  const double weights =
      std::sqrt(factorial(big_j + big_m) * factorial(big_j - big_m) * factorial(j1 - m1) *
                factorial(j1 + m1) * factorial(j2 - m2) * factorial(j2 + m2));

  double sum = 0.0;
  for (int k = 0; k <= j1 + j2 + big_j; ++k) {
    const std::array<int, 6> args{k,
                                  j1 + j2 - big_j - k,
                                  j1 - m1 - k,
                                  j2 + m2 - k,
                                  big_j - j2 + m1 + k,
                                  big_j - j1 - m2 + k};
    if (std::any_of(args.begin(), args.end(), [](int x) { return x < 0; })) continue;
    double denom = 1.0;
    for (int x : args) denom *= factorial(x);
    sum += (k % 2 == 0 ? 1.0 : -1.0) / denom;
  }
  return norm * weights * sum;
}

BandMinimum dense_minimum(double omega, double delta, double epsilon, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(Errc::BadGrid, "dense scan step must be positive");
  }
  validate_params({omega, delta, epsilon, 0.0});

  constexpr double kWindow = 3.0;
  constexpr double kLipschitz = 10.0;  // max |2 (q + k)| for k in {-2, 0, 2}, |q| <= 3
  constexpr double kTie = 1e-12;
  constexpr double kSlack = kTie + 1e-12;

  const auto last = static_cast<long long>(std::floor(2.0 * kWindow / step + 1e-9));
  auto q_at = [&](long long i) { return std::min(-kWindow + static_cast<double>(i) * step, kWindow); };

  struct Best {
    double q = 0.0;
    double e = 0.0;
    bool set = false;
  };
  Best neg;
  Best pos;
  double running = HUGE_VAL;
  auto visit = [&](long long i) {
    const double q = q_at(i);
    const double e = lowest_energy({omega, delta, epsilon, q});
    Best& slot = q >= 0.0 ? pos : neg;
    if (!slot.set || e < slot.e) slot = {q, e, true};
    running = std::min(running, e);
    return e;
  };

  // Seed the running minimum from a sparse subset of the same grid.
  const long long stride = std::max<long long>(1, last / 4096);
  for (long long i = 0; i <= last; i += stride) visit(i);

  for (long long i = 0; i <= last;) {
    const double e = visit(i);
    const double reach = (e - running - kSlack) / (kLipschitz * step);
    long long advance = 1;
    if (reach >= 2.0) advance = static_cast<long long>(std::min(std::floor(reach), 1e18));
    i += advance;
  }

  const Best& chosen = (pos.set && (!neg.set || pos.e <= neg.e + kTie)) ? pos : neg;
  return {chosen.q, chosen.e};
}

RatioResult expand_ratio(const SpinorAmplitudes& amps, const ChannelSpec& channel) {
  const int f = channel.total_f;
  if (f < 0 || f > 2) {
    throw Error(Errc::UnsupportedChannel, "total spin F=" + std::to_string(f));
  }
  const double bare = clebsch_gordan(1, 0, 1, 0, f, 0);
  if (std::abs(bare) < 1e-15) {
    throw Error(Errc::ZeroBareChannel, "channel has no m_f=0 + m_f=0 projection");
  }

  enum class Path { Direct, Exchange, None };
  struct Term {
    double amplitude;
    Path path;
  };
  std::array<Term, 9> terms{};
  const auto& c = amps.components();
  int n = 0;
  for (int ma = -1; ma <= 1; ++ma) {
    for (int mb = -1; mb <= 1; ++mb) {
      const double cg = clebsch_gordan(1, ma, 1, mb, f, 0);
      const Path path = (ma == 0 && mb == 0) ? Path::Direct
                        : (ma == -mb)        ? Path::Exchange
                                             : Path::None;
      terms[n++] = {c[ma + 1] * c[mb + 1] * cg / bare, path};
    }
  }

  double total = 0.0;
  double cross = 0.0;
  for (const Term& x : terms) {
    for (const Term& y : terms) {
      const double product = x.amplitude * y.amplitude;
      total += product;
      const bool mixed = (x.path == Path::Direct && y.path == Path::Exchange) ||
                         (x.path == Path::Exchange && y.path == Path::Direct);
      if (mixed) cross += product;
    }
  }
  return {total, total - cross, cross};
}

}  // namespace pai::oracle
