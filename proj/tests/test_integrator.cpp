#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "wronsk/integrator.hpp"
#include "wronsk/potential.hpp"

using namespace wronsk;

namespace {

Potential zero_potential() {
  return Potential([](double) { return 0.0; }, Parity::EvenSymmetric, 0.0, 0.0, "zero");
}

Potential pt_well(double v0) {
  return builtin_potential("poschl_teller", {{"v0", v0}});
}

}  // namespace

TEST_CASE("grid: node layout and validation") {
  Grid g{0.5, 0.01, 100, 200};
  CHECK(g.size() == 301);
  CHECK(g.x(100) == 0.5);
  CHECK_THAT(g.x_left(), Catch::Matchers::WithinAbs(-0.5, 1e-12));
  CHECK_THAT(g.x_right(), Catch::Matchers::WithinAbs(2.5, 1e-12));
  CHECK(g.index_of(0.5) == 100);
  CHECK(g.index_of(2.5) == 300);
  CHECK_THROWS_AS(g.index_of(3.0), RangeError);
  CHECK_THROWS_AS(g.index_of(0.503), RangeError);  // off-lattice

  CHECK_THROWS_AS((Grid{0.0, 0.2, 0, 10}.validate()), ParameterError);
  CHECK_THROWS_AS((Grid{0.0, -0.01, 0, 10}.validate()), ParameterError);
  CHECK_THROWS_AS((Grid{0.0, 0.01, -1, 10}.validate()), ParameterError);
  CHECK_THROWS_AS((Grid{0.0, 0.01, 0, 0}.validate()), ParameterError);
}

TEST_CASE("rhs: first-order form of the eigenvalue equation") {
  const auto pt = pt_well(2.5);
  auto [dy, dyp] = schrodinger_rhs(0.0, 1.0, 0.0, pt, -1.0);
  CHECK(dy == 0.0);
  CHECK_THAT(dyp, Catch::Matchers::WithinAbs(-3.0, 1e-14));  // 2(-2.5+1)*1

  auto [zy, zyp] = schrodinger_rhs(0.7, 0.0, 0.0, pt, -1.0);
  CHECK(zy == 0.0);
  CHECK(zyp == 0.0);

  const auto zero = zero_potential();
  auto [fy, fyp] = schrodinger_rhs(0.0, 1.0, 0.0, zero, -0.5);
  CHECK(fy == 0.0);
  CHECK(fyp == 1.0);  // 2(0+0.5)*1
}

TEST_CASE("integrate_pair: initial conditions are exact") {
  const auto pt = pt_well(6.0);
  Grid g{0.0, 0.01, 50, 100};
  const auto pair = integrate_pair(pt, -2.3, g);
  const int o = g.origin();
  CHECK(pair.c[o] == 1.0);
  CHECK(pair.c_prime[o] == 0.0);
  CHECK(pair.s[o] == 0.0);
  CHECK(pair.s_prime[o] == 1.0);
  CHECK(pair.energy == -2.3);
}

TEST_CASE("integrate_pair: free particle at eps = 1/2 gives cos and sin") {
  // phi'' = -phi; land a node exactly on pi/2
  const double target = std::acos(-1.0) / 2.0;
  const int n = 158;
  Grid g{0.0, target / n, 0, n};
  const auto pair = integrate_pair(zero_potential(), 0.5, g);
  CHECK(std::fabs(pair.c[n] - std::cos(target)) <= 1e-8);
  CHECK(std::fabs(pair.c[n]) <= 1e-8);  // cos(pi/2) = 0
  CHECK(std::fabs(pair.s[n] - 1.0) <= 1e-8);
  for (int i = 0; i <= n; ++i) {
    const double x = g.x(i);
    CHECK(std::fabs(pair.c[i] - std::cos(x)) <= 1e-8);
    CHECK(std::fabs(pair.s[i] - std::sin(x)) <= 1e-8);
  }
}

TEST_CASE("integrate_pair: free particle at eps = -1/2 gives cosh and sinh") {
  Grid g{0.0, 0.01, 0, 100};
  const auto pair = integrate_pair(zero_potential(), -0.5, g);
  CHECK(std::fabs(pair.c[100] - std::cosh(1.0)) <= 1e-8);
  CHECK(std::fabs(pair.s[100] - std::sinh(1.0)) <= 1e-8);
  CHECK(std::fabs(pair.c_prime[100] - std::sinh(1.0)) <= 1e-8);
  CHECK(std::fabs(pair.s_prime[100] - std::cosh(1.0)) <= 1e-8);
}

TEST_CASE("integrate_pair: fourth-order convergence") {
  // endpoint error at the common node nearest pi/2 shrinks ~16x when h halves
  const auto err = [&](double h) {
    const int n = static_cast<int>(std::lround(1.58 / h));
    Grid g{0.0, h, 0, n};
    const auto pair = integrate_pair(zero_potential(), 0.5, g);
    return std::hypot(pair.c[n] - std::cos(1.58), pair.s[n] - std::sin(1.58));
  };
  const double ratio = err(0.02) / err(0.01);
  CHECK(ratio >= 12.0);
  CHECK(ratio <= 20.0);
}

TEST_CASE("integrate_pair: Wronskian conservation") {
  // absolute drift stays below 1e-8 while the pair is O(1); growth in deep
  // classically forbidden regions amplifies rounding by e^{2 integral kappa},
  // so the deep-energy check is relative to the product magnitude
  std::mt19937 rng(987);
  std::uniform_real_distribution<double> draw(-5.0, -0.1);
  const auto g5 = builtin_potential("gaussian", {{"v0", 5.0}});
  const auto p6 = pt_well(6.0);
  for (const auto* p : {&g5, &p6}) {
    for (int t = 0; t < 10; ++t) {
      const double eps = draw(rng);
      Grid g{0.0, 0.01, 1000, 1000};
      const auto pair = integrate_pair(*p, eps, g);
      double worst_rel = 0.0;
      for (int i = 0; i < g.size(); ++i) {
        const double scale = std::max(
            1.0, std::fabs(pair.c[i] * pair.s_prime[i]) +
                     std::fabs(pair.s[i] * pair.c_prime[i]));
        worst_rel = std::max(worst_rel,
                             std::fabs(pair.wronskian_cs(i) - 1.0) / scale);
      }
      CHECK(worst_rel <= 1e-8);
    }
    // shallow energy: absolute conservation over |x| <= 10
    Grid g{0.0, 0.01, 1000, 1000};
    const auto pair = integrate_pair(*p, -0.25, g);
    double worst = 0.0;
    for (int i = 0; i < g.size(); ++i)
      worst = std::max(worst, std::fabs(pair.wronskian_cs(i) - 1.0));
    CHECK(worst <= 1e-8);
  }
}

TEST_CASE("integrate_pair: mirror symmetry for even potentials") {
  const auto p = pt_well(2.5);
  Grid g{0.0, 0.01, 400, 400};
  const auto pair = integrate_pair(p, -1.0, g);
  const int o = g.origin();
  for (int m = 1; m <= 400; ++m) {
    CHECK(std::fabs(pair.c[o + m] - pair.c[o - m]) <= 1e-10);
    CHECK(std::fabs(pair.s[o + m] + pair.s[o - m]) <= 1e-10);
  }
}

TEST_CASE("integrate_pair: linearity against a direct single-solution RK4") {
  const auto p = builtin_potential("gaussian", {{"v0", 5.0}});
  const double eps = -1.37;
  Grid g{0.0, 0.01, 0, 500};
  const auto pair = integrate_pair(p, eps, g);

  std::mt19937 rng(555);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int t = 0; t < 3; ++t) {
    const double a = coef(rng), b = coef(rng);
    // test-local RK4 of the single solution with initial data (a, b)
    double y = a, yp = b;
    const double h = g.h;
    const auto w = [&](double x) { return 2.0 * (p(x) - eps); };
    for (int i = 0; i < 500; ++i) {
      const double x = i * h;
      const double k1y = yp, k1p = w(x) * y;
      const double k2y = yp + 0.5 * h * k1p, k2p = w(x + 0.5 * h) * (y + 0.5 * h * k1y);
      const double k3y = yp + 0.5 * h * k2p, k3p = w(x + 0.5 * h) * (y + 0.5 * h * k2y);
      const double k4y = yp + h * k3p, k4p = w(x + h) * (y + h * k3y);
      y += (h / 6.0) * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
      yp += (h / 6.0) * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
      const int node = i + 1;
      const double combo = a * pair.c[node] + b * pair.s[node];
      CHECK(std::fabs(combo - y) <= 1e-9 * std::max(1.0, std::fabs(y)));
    }
  }
}

TEST_CASE("integrate_pair: overflow guard reports the node") {
  // deep forbidden region, long range: e^{kx} passes 1e300 before the end
  const auto p = zero_potential();
  Grid g;
  g.h = 0.1;
  g.n_right = 80000;  // x up to 8000, k = 1: e^{x} overflows near x ~ 690
  try {
    integrate_pair(p, -0.5, g);
    FAIL("expected OverflowError");
  } catch (const OverflowError& e) {
    CHECK(e.node() > 600.0);
    CHECK(e.node() < 800.0);
  }
}

TEST_CASE("integrate_pair: non-finite potential propagates as overflow error") {
  const Potential bad([](double x) { return x > 0.5 ? std::nan("") : 0.0; },
                      Parity::General, 0.0, 0.0, "bad");
  Grid g{0.0, 0.01, 0, 200};
  CHECK_THROWS_AS(integrate_pair(bad, -1.0, g), OverflowError);
  CHECK_THROWS_AS(schrodinger_rhs(1.0, 1.0, 0.0, bad, -1.0), OverflowError);
}
