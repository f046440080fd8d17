#ifndef WRONSK_SOLVER_HPP
#define WRONSK_SOLVER_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "wronsk/errors.hpp"
#include "wronsk/integrator.hpp"
#include "wronsk/potential.hpp"
#include "wronsk/wronskian.hpp"

namespace wronsk {

enum class StateParity { Even, Odd, None };

inline const char* to_string(StateParity p) {
  switch (p) {
    case StateParity::Even: return "even";
    case StateParity::Odd: return "odd";
    case StateParity::None: return "none";
  }
  return "?";
}

struct BoundState {
  int index = 0;
  double energy = 0.0;
  StateParity parity = StateParity::None;
  double residual_divergent = 0.0;  // B3 read at x_eval
  double wronskian_residual = 0.0;  // quantization value at the accepted energy
  double bracket_width = 0.0;
  double k = 0.0;
  double x_eval = 0.0;
  double a2 = 1.0, b2 = 0.0;  // accepted C/S mixture of the eigenfunction
  // shallow states with k * x_eval < 3 are numerically delicate
  bool low_confidence = false;
};

struct CriticalCoupling {
  int index = 0;
  double coupling = 0.0;
  StateParity parity = StateParity::None;
  double bracket_width = 0.0;
};

struct ScanRow {
  double abscissa = 0.0;
  double v1 = 0.0;  // even condition, or the general determinant
  double v2 = 0.0;  // odd condition (parity scans only)
  bool ok = true;   // false when the integration overflowed at this row
};

struct ScanTable {
  enum class Kind {
    EnergyParity,
    EnergyDeterminant,
    CouplingParity,
    CouplingDeterminant,
    PlateauParity,
  };
  Kind kind = Kind::EnergyParity;
  std::vector<std::string> columns;
  std::vector<ScanRow> rows;

  bool has_two_values() const {
    return kind != Kind::EnergyDeterminant && kind != Kind::CouplingDeterminant;
  }
};

struct SolverOptions {
  double h = 0.01;
  std::optional<double> x_eval;  // fixed read point; auto policy when unset
  double tol = 1e-9;
  int n_scan = 400;
  std::optional<double> eps_min;  // scan floor; default: min sampled v
  std::optional<double> eps_max;  // scan ceiling; default: threshold - 1e-6
  int max_iter = 200;
  int jobs = 1;
  bool use_brent = false;
};

namespace detail {

// Read point policy: beyond the tail cut and with k x >= 6, clamped to
// [1, 50] and rounded up to a grid node. At threshold (k = 0) this lands
// on the 50 clamp.
inline double auto_x_eval(double tail, double k, double h) {
  double xe = tail;
  if (k > 1e-12)
    xe = std::max(xe, 6.0 / k);
  else
    xe = 50.0;
  xe = std::clamp(xe, 1.0, 50.0);
  return std::ceil(xe / h - 1e-9) * h;
}

inline int steps_for(double x, double h) {
  return static_cast<int>(std::lround(x / h));
}

// Deterministic parallel fill: row i is computed by exactly one worker and
// written to its own slot, so the merged result is independent of `jobs`.
inline void parallel_rows(int n, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, n));
  if (jobs == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = w; i < n; i += jobs) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

// Shared per-potential machinery: tail cuts, thresholds, and evaluation of
// the quantization conditions at one energy.
class ConditionEvaluator {
public:
  ConditionEvaluator(const Potential& p, const SolverOptions& opts)
      : p_(p), opts_(opts) {
    auto cuts = tail_cut(p, 1e-10);
    tail_left_ = -cuts.first;
    tail_right_ = cuts.second;
    symmetric_ = p.parity() == Parity::EvenSymmetric;
  }

  bool symmetric() const { return symmetric_; }
  double threshold() const { return p_.threshold(); }
  double tail_right() const { return tail_right_; }

  double k_right(double energy) const {
    return std::sqrt(2.0 * std::max(0.0, p_.v_right_limit() - energy));
  }

  double k_left(double energy) const {
    return std::sqrt(2.0 * std::max(0.0, p_.v_left_limit() - energy));
  }

  double x_eval_right(double energy) const {
    if (opts_.x_eval) return *opts_.x_eval;
    return auto_x_eval(tail_right_, k_right(energy), opts_.h);
  }

  // general path reads at symmetric points +-x covering both tails
  // (n_left defaults symmetric to n_right)
  double x_eval_sym(double energy) const {
    if (opts_.x_eval) return *opts_.x_eval;
    return std::max(auto_x_eval(tail_right_, k_right(energy), opts_.h),
                    auto_x_eval(tail_left_, k_left(energy), opts_.h));
  }

  // Parity path: integrate rightward only, read even/odd conditions.
  struct ParityValues {
    QuantizationResult even, odd;
    double x_eval, k;
  };
  ParityValues parity_values(double energy) const {
    const double xe = x_eval_right(energy);
    Grid grid{0.0, opts_.h, 0, steps_for(xe, opts_.h)};
    const auto pair = integrate_pair(p_, energy, grid);
    const auto basis = asymptotic_basis(energy, p_.v_right_limit(), Side::Right);
    const auto [even, odd] = parity_conditions(pair, basis, xe);
    return {checked({energy, even, QuantizationResult::Kind::EvenW, xe, xe}),
            checked({energy, odd, QuantizationResult::Kind::OddW, xe, xe}),
            xe, basis.k};
  }

  // General path: integrate both ways, read the quantization determinant.
  QuantizationResult determinant_value(double energy) const {
    const double xe = x_eval_sym(energy);
    const int n = steps_for(xe, opts_.h);
    Grid grid{0.0, opts_.h, n, n};
    const auto pair = integrate_pair(p_, energy, grid);
    const auto bl = asymptotic_basis(energy, p_.v_left_limit(), Side::Left);
    const auto br = asymptotic_basis(energy, p_.v_right_limit(), Side::Right);
    return checked({energy, general_determinant(pair, bl, br, -xe, xe),
                    QuantizationResult::Kind::GeneralDet, -xe, xe});
  }

  // Minimum of v sampled on the h-lattice covering both tail cuts;
  // default scan floor.
  double min_sampled_v() const {
    const double a = std::max(-tail_left_, tail_right_);
    const int n = steps_for(a, opts_.h);
    double vmin = p_(0.0);
    for (int i = -n; i <= n; ++i) vmin = std::min(vmin, p_(i * opts_.h));
    return vmin;
  }

  const Potential& potential() const { return p_; }
  const SolverOptions& options() const { return opts_; }

private:
  const Potential& p_;
  SolverOptions opts_;
  double tail_left_ = 0.0, tail_right_ = 0.0;
  bool symmetric_ = false;
};

struct RefineResult {
  double root = 0.0;
  double width = 0.0;
  double f_root = 0.0;
};

inline RefineResult bisect(const std::function<double(double)>& f, double lo,
                           double hi, double flo, double fhi, double tol,
                           int max_iter) {
  for (int it = 0; it < max_iter; ++it) {
    if (hi - lo <= tol) {
      const double mid = 0.5 * (lo + hi);
      return {mid, hi - lo, f(mid)};
    }
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return {mid, 0.0, 0.0};
    if (flo * fm < 0.0) {
      hi = mid;
      fhi = fm;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  throw ConvergenceError("bisection did not converge within max_iter", lo, hi);
}

// Brent's method (inverse quadratic + secant + bisection fallback).
inline RefineResult brent(const std::function<double(double)>& f, double a,
                          double b, double fa, double fb, double tol,
                          int max_iter) {
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 = 2.0 * 1e-16 * std::fabs(b) + 0.5 * tol;
    const double xm = 0.5 * (c - b);
    if (std::fabs(xm) <= tol1 || fb == 0.0)
      return {b, std::fabs(c - b), fb};
    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p, q, r;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
        q = (q - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::fabs(p);
      const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
      const double min2 = std::fabs(e * q);
      if (2.0 * p < std::min(min1, min2)) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol1 ? d : (xm >= 0.0 ? tol1 : -tol1);
    fb = f(b);
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
  }
  throw ConvergenceError("brent did not converge within max_iter",
                         std::min(b, c), std::max(b, c));
}

inline RefineResult refine(const std::function<double(double)>& f, double lo,
                           double hi, double tol, int max_iter, bool use_brent) {
  if (!(tol > 0.0)) throw ParameterError("refinement tolerance must be positive");
  const double flo = f(lo);
  if (flo == 0.0) return {lo, 0.0, 0.0};
  const double fhi = f(hi);
  if (fhi == 0.0) return {hi, 0.0, 0.0};
  if (flo * fhi > 0.0)
    throw BracketError("no sign change over the bracket");
  return use_brent ? brent(f, lo, hi, flo, fhi, tol, max_iter)
                   : bisect(f, lo, hi, flo, fhi, tol, max_iter);
}

}  // namespace detail

/// Bisection (default) or Brent refinement of a bracketed root.
/// Deterministic: identical inputs give bit-identical results.
inline double refine_root(const std::function<double(double)>& f, double lo,
                          double hi, double tol, int max_iter = 200,
                          bool use_brent = false) {
  return detail::refine(f, lo, hi, tol, max_iter, use_brent).root;
}

/// Closed-form bound-state energies of v(x) = -v0 / cosh(x)^2:
/// eps_n = -(lambda - 1 - n)^2 / 2 with lambda = (1 + sqrt(1 + 8 v0)) / 2,
/// counting n = 0, 1, ... strictly below lambda - 1 (a state sitting exactly
/// at threshold is not square integrable and is excluded).
inline std::vector<double> exact_poschl_teller(double v0) {
  if (!(v0 > 0.0)) throw ParameterError("poschl_teller needs v0 > 0");
  const double lambda = 0.5 * (1.0 + std::sqrt(1.0 + 8.0 * v0));
  std::vector<double> energies;
  for (int n = 0; n < lambda - 1.0; ++n) {
    const double d = lambda - 1.0 - n;
    energies.push_back(-0.5 * d * d);
  }
  return energies;
}

/// Tabulate the quantization conditions on a uniform energy lattice.
/// Parity-invariant potentials get (even, odd) columns, anything else the
/// general determinant. Rows whose integration overflowed are flagged ok=false.
inline ScanTable scan_energy(const Potential& p, double eps_min, double eps_max,
                             int n_points, const SolverOptions& opts = {}) {
  if (n_points < 2) throw ParameterError("energy scan needs n_points >= 2");
  if (!(eps_min < eps_max)) throw ParameterError("energy scan needs eps_min < eps_max");
  if (eps_max > p.threshold() + 1e-15)
    throw ParameterError("energy scan must stay at or below the threshold");

  detail::ConditionEvaluator eval(p, opts);
  ScanTable table;
  table.kind = eval.symmetric() ? ScanTable::Kind::EnergyParity
                                : ScanTable::Kind::EnergyDeterminant;
  table.columns = eval.symmetric()
                      ? std::vector<std::string>{"eps", "even", "odd"}
                      : std::vector<std::string>{"eps", "det"};
  table.rows.resize(n_points);

  const double step = (eps_max - eps_min) / (n_points - 1);
  detail::parallel_rows(n_points, opts.jobs, [&](int i) {
    const double e = eps_min + i * step;
    ScanRow row;
    row.abscissa = e;
    try {
      if (eval.symmetric()) {
        const auto v = eval.parity_values(e);
        row.v1 = v.even.value;
        row.v2 = v.odd.value;
      } else {
        row.v1 = eval.determinant_value(e).value;
      }
    } catch (const OverflowError&) {
      row.ok = false;
      row.v1 = row.v2 = 0.0;
    }
    table.rows[i] = row;
  });
  return table;
}

/// Wronskians against the right tail as functions of the read point x,
/// for one fixed energy (the plateau diagnostic).
inline ScanTable scan_plateau(const Potential& p, double energy, double x_lo,
                              double x_hi, const SolverOptions& opts = {}) {
  if (!(0.0 <= x_lo && x_lo < x_hi))
    throw ParameterError("plateau scan needs 0 <= x_lo < x_hi");
  const auto basis = asymptotic_basis(energy, p.v_right_limit(), Side::Right);
  Grid grid{0.0, opts.h, 0, detail::steps_for(x_hi, opts.h)};
  const auto pair = integrate_pair(p, energy, grid);

  ScanTable table;
  table.kind = ScanTable::Kind::PlateauParity;
  table.columns = {"x", "even", "odd"};
  const int i_lo = detail::steps_for(x_lo, opts.h);
  for (int i = i_lo; i < grid.size(); ++i) {
    const double x = grid.x(i);
    const auto [even, odd] = parity_conditions(pair, basis, x);
    table.rows.push_back({x, even, odd, true});
  }
  return table;
}

/// Quantization conditions at fixed energy = threshold as functions of a
/// coupling parameter (new bound states appear where they vanish).
inline ScanTable scan_coupling(const std::function<Potential(double)>& family,
                               double lo, double hi, int n_points,
                               const SolverOptions& opts = {}) {
  if (n_points < 2) throw ParameterError("coupling scan needs n_points >= 2");
  if (!(lo < hi)) throw ParameterError("coupling scan needs lo < hi");

  const bool symmetric = family(lo).parity() == Parity::EvenSymmetric;
  ScanTable table;
  table.kind = symmetric ? ScanTable::Kind::CouplingParity
                         : ScanTable::Kind::CouplingDeterminant;
  table.columns = symmetric ? std::vector<std::string>{"v0", "even", "odd"}
                            : std::vector<std::string>{"v0", "det"};
  table.rows.resize(n_points);

  const double step = (hi - lo) / (n_points - 1);
  detail::parallel_rows(n_points, opts.jobs, [&](int i) {
    const double v0 = lo + i * step;
    const Potential p = family(v0);
    detail::ConditionEvaluator eval(p, opts);
    ScanRow row;
    row.abscissa = v0;
    try {
      if (symmetric) {
        const auto v = eval.parity_values(p.threshold());
        row.v1 = v.even.value;
        row.v2 = v.odd.value;
      } else {
        row.v1 = eval.determinant_value(p.threshold()).value;
      }
    } catch (const OverflowError&) {
      row.ok = false;
    }
    table.rows[i] = row;
  });
  return table;
}

namespace detail {

// sign-change brackets of one value column over the ok rows
template <typename Getter>
inline std::vector<std::pair<double, double>> brackets_of(
    const ScanTable& table, Getter get) {
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    const auto& a = table.rows[i];
    const auto& b = table.rows[i + 1];
    if (!a.ok || !b.ok) continue;
    if (get(a) * get(b) < 0.0) out.emplace_back(a.abscissa, b.abscissa);
  }
  return out;
}

}  // namespace detail

/// Scan-and-refine search for all bound states below the threshold.
/// Parity-invariant potentials use the factorized even/odd conditions,
/// anything else the general determinant. Returns states sorted by energy;
/// an empty result just means nothing was found above the scan floor.
inline std::vector<BoundState> find_bound_states(const Potential& p,
                                                 const SolverOptions& opts = {}) {
  detail::ConditionEvaluator eval(p, opts);
  const double ceiling = opts.eps_max.value_or(p.threshold() - 1e-6);
  const double floor = opts.eps_min.value_or(eval.min_sampled_v());
  if (!(floor < ceiling)) return {};

  const ScanTable table = scan_energy(p, floor, ceiling, opts.n_scan, opts);
  std::vector<BoundState> states;

  const auto refine_into = [&](double lo, double hi, StateParity parity) {
    const auto f = [&](double e) {
      if (parity == StateParity::None) return eval.determinant_value(e).value;
      const auto v = eval.parity_values(e);
      return parity == StateParity::Even ? v.even.value : v.odd.value;
    };
    const auto r = detail::refine(f, lo, hi, opts.tol, opts.max_iter, opts.use_brent);

    BoundState st;
    st.energy = r.root;
    st.parity = parity;
    st.wronskian_residual = r.f_root;
    st.bracket_width = r.width;
    st.k = eval.k_right(r.root);
    st.x_eval = parity == StateParity::None ? eval.x_eval_sym(r.root)
                                            : eval.x_eval_right(r.root);
    // flagged by the slowest-decaying side
    st.low_confidence =
        std::min(st.k, eval.k_left(r.root)) * st.x_eval < 3.0;

    // divergent-tail coefficient of the accepted mixture
    const double xr = st.x_eval;
    Grid grid{0.0, opts.h, 0, detail::steps_for(xr, opts.h)};
    double a2 = 1.0, b2 = 0.0;
    if (parity == StateParity::Odd) {
      a2 = 0.0;
      b2 = 1.0;
    }
    if (parity == StateParity::None) {
      const double xl = -xr;
      grid.n_left = grid.n_right;
      const auto pair = integrate_pair(p, r.root, grid);
      const auto bl = asymptotic_basis(r.root, p.v_left_limit(), Side::Left);
      const int il = pair.grid.index_of(xl);
      const double lf = bl.conv(xl), lfp = bl.conv_prime(xl);
      a2 = wronskian(lf, lfp, pair.s[il], pair.s_prime[il]);
      b2 = -wronskian(lf, lfp, pair.c[il], pair.c_prime[il]);
      const double norm = std::hypot(a2, b2);
      if (norm > 0.0) {
        a2 /= norm;
        b2 /= norm;
      }
      const auto br = asymptotic_basis(r.root, p.v_right_limit(), Side::Right);
      st.residual_divergent = divergent_coefficient(pair, br, xr, a2, b2);
    } else {
      const auto pair = integrate_pair(p, r.root, grid);
      const auto br = asymptotic_basis(r.root, p.v_right_limit(), Side::Right);
      st.residual_divergent = divergent_coefficient(pair, br, xr, a2, b2);
    }
    st.a2 = a2;
    st.b2 = b2;
    states.push_back(st);
  };

  if (eval.symmetric()) {
    for (const auto& [lo, hi] :
         detail::brackets_of(table, [](const ScanRow& r) { return r.v1; }))
      refine_into(lo, hi, StateParity::Even);
    for (const auto& [lo, hi] :
         detail::brackets_of(table, [](const ScanRow& r) { return r.v2; }))
      refine_into(lo, hi, StateParity::Odd);
  } else {
    for (const auto& [lo, hi] :
         detail::brackets_of(table, [](const ScanRow& r) { return r.v1; }))
      refine_into(lo, hi, StateParity::None);
  }

  std::sort(states.begin(), states.end(),
            [](const BoundState& a, const BoundState& b) {
              return a.energy < b.energy;
            });
  for (std::size_t i = 0; i < states.size(); ++i)
    states[i].index = static_cast<int>(i);
  return states;
}

/// Coupling values where a new bound state appears at threshold: scan the
/// threshold-basis conditions over the coupling, bracket and bisect.
inline std::vector<CriticalCoupling> critical_couplings(
    const std::function<Potential(double)>& family, double lo, double hi,
    int n_scan, double tol, const SolverOptions& opts_in = {}) {
  SolverOptions opts = opts_in;
  opts.tol = tol;
  const ScanTable table = scan_coupling(family, lo, hi, n_scan, opts);
  const bool symmetric = table.kind == ScanTable::Kind::CouplingParity;

  std::vector<CriticalCoupling> out;
  const auto refine_into = [&](double blo, double bhi, StateParity parity) {
    const auto f = [&](double v0) {
      const Potential p = family(v0);
      detail::ConditionEvaluator eval(p, opts);
      if (parity == StateParity::None)
        return eval.determinant_value(p.threshold()).value;
      const auto v = eval.parity_values(p.threshold());
      return parity == StateParity::Even ? v.even.value : v.odd.value;
    };
    const auto r = detail::refine(f, blo, bhi, tol, opts.max_iter, opts.use_brent);
    out.push_back({0, r.root, parity, r.width});
  };

  if (symmetric) {
    for (const auto& [blo, bhi] :
         detail::brackets_of(table, [](const ScanRow& r) { return r.v1; }))
      refine_into(blo, bhi, StateParity::Even);
    for (const auto& [blo, bhi] :
         detail::brackets_of(table, [](const ScanRow& r) { return r.v2; }))
      refine_into(blo, bhi, StateParity::Odd);
  } else {
    for (const auto& [blo, bhi] :
         detail::brackets_of(table, [](const ScanRow& r) { return r.v1; }))
      refine_into(blo, bhi, StateParity::None);
  }

  std::sort(out.begin(), out.end(),
            [](const CriticalCoupling& a, const CriticalCoupling& b) {
              return a.coupling < b.coupling;
            });
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].index = static_cast<int>(i);
  return out;
}

/// Candidate eigenfunction phi = a2 C + b2 S sampled on the solve grid.
struct Wavefunction {
  Grid grid;
  double energy = 0.0;
  double a2 = 1.0, b2 = 0.0;
  std::vector<double> x, phi, phi_prime;
  // largest x where |phi| stops decreasing: onset of the spurious
  // divergent tail, the natural truncation point for normalization
  double truncation_x = 0.0;
  double k = 0.0;
  double b3 = 0.0;  // divergent coefficient at the last node
};

inline Wavefunction wavefunction(const Potential& p, double energy, double a2,
                                 double b2, const SolverOptions& opts = {}) {
  if (a2 == 0.0 && b2 == 0.0)
    throw DegenerateInputError("wavefunction mixture (0, 0) is degenerate");

  detail::ConditionEvaluator eval(p, opts);
  const double xr =
      eval.symmetric() ? eval.x_eval_right(energy) : eval.x_eval_sym(energy);
  Grid grid{0.0, opts.h, 0, detail::steps_for(xr, opts.h)};
  if (!eval.symmetric()) grid.n_left = grid.n_right;
  const auto pair = integrate_pair(p, energy, grid);

  Wavefunction wf;
  wf.grid = grid;
  wf.energy = energy;
  wf.a2 = a2;
  wf.b2 = b2;
  const int n = grid.size();
  wf.x.resize(n);
  wf.phi.resize(n);
  wf.phi_prime.resize(n);
  for (int i = 0; i < n; ++i) {
    wf.x[i] = grid.x(i);
    wf.phi[i] = a2 * pair.c[i] + b2 * pair.s[i];
    wf.phi_prime[i] = a2 * pair.c_prime[i] + b2 * pair.s_prime[i];
  }

  const auto basis = asymptotic_basis(energy, p.v_right_limit(), Side::Right);
  wf.k = basis.k;
  wf.b3 = basis.mode == TailMode::Exponential
              ? divergent_coefficient(pair, basis, grid.x_right(), a2, b2)
              : std::numeric_limits<double>::quiet_NaN();

  // last classical turning point on the right, then the |phi| minimum
  // beyond it (argmin marks where divergent growth takes over)
  int turn = grid.origin();
  for (int i = n - 2; i >= grid.origin(); --i) {
    if ((p(wf.x[i]) - energy) * (p(wf.x[i + 1]) - energy) <= 0.0) {
      turn = i + 1;
      break;
    }
  }
  int i_min = turn;
  for (int i = turn; i < n; ++i)
    if (std::fabs(wf.phi[i]) < std::fabs(wf.phi[i_min])) i_min = i;
  wf.truncation_x = wf.x[i_min];
  return wf;
}

/// Wavefunction of a solved state using its accepted mixture:
/// (1, 0) for even, (0, 1) for odd, the matched mixture otherwise.
inline Wavefunction wavefunction(const Potential& p, const BoundState& state,
                                 const SolverOptions& opts = {}) {
  return wavefunction(p, state.energy, state.a2, state.b2, opts);
}

}  // namespace wronsk

#endif
