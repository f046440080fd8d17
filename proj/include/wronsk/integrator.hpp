#ifndef WRONSK_INTEGRATOR_HPP
#define WRONSK_INTEGRATOR_HPP

#include <array>
#include <cmath>
#include <utility>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/potential.hpp"

namespace wronsk {

/// Integration lattice: nodes x0 + (i - n_left) h for i in [0, size).
struct Grid {
  double x0 = 0.0;
  double h = 0.01;
  int n_left = 0;
  int n_right = 1;

  void validate() const {
    if (!(h > 0.0) || h > 0.1)
      throw ParameterError("grid step h must lie in (0, 0.1]");
    if (n_left < 0 || n_right < 1)
      throw ParameterError("grid needs n_left >= 0 and n_right >= 1");
  }

  int size() const { return n_left + n_right + 1; }
  double x(int i) const { return x0 + (i - n_left) * h; }
  double x_left() const { return x(0); }
  double x_right() const { return x(size() - 1); }
  int origin() const { return n_left; }  // index of the node at x0

  /// Index of the node at coordinate x; x must lie on the lattice.
  int index_of(double xq) const {
    const double t = (xq - x0) / h + n_left;
    const int i = static_cast<int>(std::lround(t));
    if (i < 0 || i >= size() || std::fabs(t - i) > 1e-6)
      throw RangeError("coordinate is not a grid node");
    return i;
  }
};

/// Canonical solutions C, S of phi'' = 2 (v(x) - eps) phi sampled on a grid,
/// fixed by C(x0) = S'(x0) = 1, C'(x0) = S(x0) = 0.
struct SolutionPair {
  Grid grid;
  double energy = 0.0;
  std::vector<double> c, c_prime, s, s_prime;

  double wronskian_cs(int i) const {
    return c[i] * s_prime[i] - s[i] * c_prime[i];
  }
};

/// First-order form of the eigenvalue equation:
/// (y, y')' = (y', 2 (v(x) - eps) y).
inline std::pair<double, double> schrodinger_rhs(double x, double y,
                                                 double y_prime,
                                                 const Potential& p,
                                                 double energy) {
  const double v = p(x);
  if (!std::isfinite(v))
    throw OverflowError("potential evaluated non-finite", x);
  return {y_prime, 2.0 * (v - energy) * y};
}

namespace detail {

// One classic RK4 step of the combined state (c, c', s, s').
// Both solutions share the same three v(x) evaluations per step.
inline void rk4_step(const Potential& p, double energy, double x, double h,
                     std::array<double, 4>& y) {
  const auto deriv = [&](double w, const std::array<double, 4>& u) {
    return std::array<double, 4>{u[1], w * u[0], u[3], w * u[2]};
  };
  const double w0 = 2.0 * (p(x) - energy);
  const double wm = 2.0 * (p(x + 0.5 * h) - energy);
  const double w1 = 2.0 * (p(x + h) - energy);

  const auto k1 = deriv(w0, y);
  std::array<double, 4> u;
  for (int j = 0; j < 4; ++j) u[j] = y[j] + 0.5 * h * k1[j];
  const auto k2 = deriv(wm, u);
  for (int j = 0; j < 4; ++j) u[j] = y[j] + 0.5 * h * k2[j];
  const auto k3 = deriv(wm, u);
  for (int j = 0; j < 4; ++j) u[j] = y[j] + h * k3[j];
  const auto k4 = deriv(w1, u);
  for (int j = 0; j < 4; ++j)
    y[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
}

}  // namespace detail

/// Integrate the canonical pair outward from x0: n_right fixed RK4 steps of
/// +h and n_left steps of -h. Aborts with OverflowError once any state
/// component reaches 1e300 (deep classically forbidden regions grow like
/// e^{kx}) or turns non-finite.
inline SolutionPair integrate_pair(const Potential& p, double energy,
                                   const Grid& grid) {
  grid.validate();
  SolutionPair out;
  out.grid = grid;
  out.energy = energy;
  const int n = grid.size();
  out.c.resize(n);
  out.c_prime.resize(n);
  out.s.resize(n);
  out.s_prime.resize(n);

  const int o = grid.origin();
  out.c[o] = 1.0;
  out.c_prime[o] = 0.0;
  out.s[o] = 0.0;
  out.s_prime[o] = 1.0;

  const auto sweep = [&](double step, int count, int dir) {
    std::array<double, 4> y{1.0, 0.0, 0.0, 1.0};
    for (int m = 1; m <= count; ++m) {
      const double x = grid.x0 + (m - 1) * step;
      detail::rk4_step(p, energy, x, step, y);
      for (double comp : y) {
        if (!(std::fabs(comp) < 1e300))
          throw OverflowError("solution pair diverged or became non-finite",
                              grid.x0 + m * step);
      }
      const int i = o + dir * m;
      out.c[i] = y[0];
      out.c_prime[i] = y[1];
      out.s[i] = y[2];
      out.s_prime[i] = y[3];
    }
  };

  sweep(+grid.h, grid.n_right, +1);
  if (grid.n_left > 0) sweep(-grid.h, grid.n_left, -1);
  return out;
}

}  // namespace wronsk

#endif
