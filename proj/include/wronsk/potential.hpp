#ifndef WRONSK_POTENTIAL_HPP
#define WRONSK_POTENTIAL_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <utility>

#include "wronsk/errors.hpp"
#include "wronsk/expression.hpp"

namespace wronsk {

enum class Parity { EvenSymmetric, General };

/// Dimensionless potential v(x). Immutable; evaluation is pure and
/// safe to call concurrently.
class Potential {
public:
  Potential(std::function<double(double)> evaluate, Parity parity,
            double v_left_limit, double v_right_limit, std::string label,
            std::string expression = "")
      : evaluate_(std::move(evaluate)),
        parity_(parity),
        v_left_(v_left_limit),
        v_right_(v_right_limit),
        label_(std::move(label)),
        expression_(std::move(expression)) {
    if (!std::isfinite(v_left_) || !std::isfinite(v_right_))
      throw IllPosedError("potential asymptotic limits must be finite");
  }

  double operator()(double x) const { return evaluate_(x); }

  Parity parity() const { return parity_; }
  double v_left_limit() const { return v_left_; }
  double v_right_limit() const { return v_right_; }
  /// Bound states live below this energy.
  double threshold() const { return std::min(v_left_, v_right_); }
  const std::string& label() const { return label_; }
  /// Source form in the expression grammar, empty when not expressible.
  const std::string& expression() const { return expression_; }

private:
  std::function<double(double)> evaluate_;
  Parity parity_;
  double v_left_, v_right_;
  std::string label_;
  std::string expression_;
};

/// Physical constants defining the dimensionless reduction
/// x = X/L, epsilon = E / energy_scale with energy_scale = hbar^2/(m L^2).
struct PhysicalScales {
  double mass;
  double hbar;
  double length_scale;

  double energy_scale() const {
    return hbar * hbar / (mass * length_scale * length_scale);
  }

  void validate() const {
    if (!(mass > 0.0) || !(hbar > 0.0) || !(length_scale > 0.0))
      throw ParameterError("physical scales must be strictly positive");
  }
};

/// Sampled symmetry test: v even iff |v(x) - v(-x)| <= 1e-10 at 64
/// pseudo-random points in [-10, 10] (fixed seed, deterministic).
inline Parity detect_parity(const std::function<double(double)>& v) {
  std::mt19937 rng(0x77726e6bu);
  std::uniform_real_distribution<double> pick(0.0, 10.0);
  for (int i = 0; i < 64; ++i) {
    const double x = pick(rng);
    if (!(std::fabs(v(x) - v(-x)) <= 1e-10)) return Parity::General;
  }
  return Parity::EvenSymmetric;
}

namespace detail {

inline double fmt_param(std::string* out, const char* name, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s=%.17g", name, value);
  *out += buf;
  return value;
}

inline double require_param(const std::map<std::string, double>& params,
                            const std::string& name, bool positive = true) {
  auto it = params.find(name);
  if (it == params.end())
    throw ParameterError("missing parameter '" + name + "'");
  if (positive && !(it->second > 0.0))
    throw ParameterError("parameter '" + name + "' must be positive");
  return it->second;
}

}  // namespace detail

/// Built-in potential catalog.
///   poschl_teller: v(x) = -v0 / cosh(x)^2          (params: v0 > 0)
///   gaussian:      v(x) = -v0 * exp(-x^2)          (params: v0 > 0)
///   square_well:   v(x) = -depth for |x| <= half_width, else 0
inline Potential builtin_potential(const std::string& name,
                                   const std::map<std::string, double>& params) {
  if (name == "poschl_teller") {
    const double v0 = detail::require_param(params, "v0");
    std::string label = "poschl_teller(";
    detail::fmt_param(&label, "v0", v0);
    label += ")";
    char expr[64];
    std::snprintf(expr, sizeof(expr), "-%.17g/cosh(x)^2", v0);
    return Potential(
        [v0](double x) {
          const double c = std::cosh(x);
          return -v0 / (c * c);
        },
        Parity::EvenSymmetric, 0.0, 0.0, label, expr);
  }
  if (name == "gaussian") {
    const double v0 = detail::require_param(params, "v0");
    std::string label = "gaussian(";
    detail::fmt_param(&label, "v0", v0);
    label += ")";
    char expr[64];
    std::snprintf(expr, sizeof(expr), "-%.17g*exp(-x^2)", v0);
    return Potential([v0](double x) { return -v0 * std::exp(-x * x); },
                     Parity::EvenSymmetric, 0.0, 0.0, label, expr);
  }
  if (name == "square_well") {
    const double depth = detail::require_param(params, "depth");
    const double half_width = detail::require_param(params, "half_width");
    std::string label = "square_well(";
    detail::fmt_param(&label, "depth", depth);
    label += ",";
    detail::fmt_param(&label, "half_width", half_width);
    label += ")";
    // discontinuous; not expressible in the grammar
    return Potential(
        [depth, half_width](double x) {
          return std::fabs(x) <= half_width ? -depth : 0.0;
        },
        Parity::EvenSymmetric, 0.0, 0.0, label);
  }
  throw CatalogError("unknown built-in potential '" + name + "'");
}

/// Build a potential from an expression in x. Parity is detected by
/// sampling; asymptotic limits are probed at x = +-1e3.
inline Potential parse_potential(const std::string& expr) {
  std::shared_ptr<Expr> ast = parse_expression(expr);
  auto eval = [ast](double x) { return ast->eval(x); };

  // finiteness probes: the limit points plus the parity sample set
  const double v_left = eval(-1e3);
  const double v_right = eval(1e3);
  if (!std::isfinite(v_left) || !std::isfinite(v_right))
    throw IllPosedError("potential is non-finite at |x| = 1e3: " + expr);
  std::mt19937 rng(0x77726e6bu);
  std::uniform_real_distribution<double> pick(-10.0, 10.0);
  for (int i = 0; i < 64; ++i) {
    if (!std::isfinite(eval(pick(rng))))
      throw IllPosedError("potential is non-finite at a probe point: " + expr);
  }

  return Potential(eval, detect_parity(eval), v_left, v_right, expr, ast->str());
}

/// Wrap a physical potential V(X) as the dimensionless v(x) = V(L x) / E_s.
/// Energies returned by the solver convert back via E = eps * E_s.
inline Potential nondimensionalize(const PhysicalScales& scales,
                                   std::function<double(double)> physical_v) {
  scales.validate();
  const double L = scales.length_scale;
  const double es = scales.energy_scale();
  auto eval = [physical_v = std::move(physical_v), L, es](double x) {
    return physical_v(L * x) / es;
  };
  const double v_left = eval(-1e3);
  const double v_right = eval(1e3);
  if (!std::isfinite(v_left) || !std::isfinite(v_right))
    throw IllPosedError("nondimensionalized potential is non-finite at |x| = 1e3");
  return Potential(eval, detect_parity(eval), v_left, v_right, "nondimensionalized");
}

/// Smallest |x| per side beyond which |v - v_limit| <= tol, searched on a
/// 0.5-step lattice out to 50 and refined by bisection to 1e-3. Results are
/// clamped to 1 <= |x| <= 50; the left cut is returned as a negative
/// coordinate. Throws TailError when the potential has not settled by 50.
inline std::pair<double, double> tail_cut(const Potential& p, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tail_cut tolerance must be positive");

  auto one_side = [&](double sign, double limit) {
    const auto settled = [&](double ax) {
      return std::fabs(p(sign * ax) - limit) <= tol;
    };
    // outermost coarse point still above tolerance
    double last_bad = 0.0;
    for (double ax = 1.0; ax <= 50.0 + 1e-9; ax += 0.5) {
      if (!settled(ax)) last_bad = ax;
    }
    if (last_bad == 0.0) return 1.0;  // settled everywhere sampled
    if (last_bad >= 50.0 - 1e-9)
      throw TailError("potential does not settle to its limit by |x| = 50: " +
                      p.label());
    double lo = last_bad, hi = last_bad + 0.5;
    while (hi - lo > 1e-3) {
      const double mid = 0.5 * (lo + hi);
      (settled(mid) ? hi : lo) = mid;
    }
    return std::clamp(0.5 * (lo + hi), 1.0, 50.0);
  };

  const double right = one_side(+1.0, p.v_right_limit());
  const double left = one_side(-1.0, p.v_left_limit());
  return {-left, right};
}

}  // namespace wronsk

#endif
