#ifndef WRONSK_WRONSKIAN_HPP
#define WRONSK_WRONSKIAN_HPP

#include <cmath>
#include <utility>

#include "wronsk/errors.hpp"
#include "wronsk/integrator.hpp"

namespace wronsk {

/// W(f, g) = f g' - g f'.
inline double wronskian(double f, double f_prime, double g, double g_prime) {
  return f * g_prime - g * f_prime;
}

enum class Side { Left, Right };
enum class TailMode { Exponential, Threshold };

/// Convergent/divergent tail solutions where the potential has settled to
/// v_limit. With k = sqrt(2 (v_limit - eps)):
///   Exponential, Right: conv = e^{-kx}, div = e^{+kx}
///   Exponential, Left:  conv = e^{+kx}, div = e^{-kx}
///   Threshold (k = 0):  conv = 1,       div = x        (both sides)
/// W(conv, div) is constant: 2k (Right), -2k (Left), 1 (Threshold).
struct AsymptoticBasis {
  Side side = Side::Right;
  TailMode mode = TailMode::Exponential;
  double k = 0.0;
  double energy = 0.0;
  double v_limit = 0.0;

  double conv(double x) const {
    if (mode == TailMode::Threshold) return 1.0;
    return std::exp(side == Side::Right ? -k * x : k * x);
  }
  double conv_prime(double x) const {
    if (mode == TailMode::Threshold) return 0.0;
    return side == Side::Right ? -k * conv(x) : k * conv(x);
  }
  double div(double x) const {
    if (mode == TailMode::Threshold) return x;
    return std::exp(side == Side::Right ? k * x : -k * x);
  }
  double div_prime(double x) const {
    if (mode == TailMode::Threshold) return 1.0;
    return side == Side::Right ? k * div(x) : -k * div(x);
  }

  /// W(conv, div), constant in x.
  double pairing() const {
    if (mode == TailMode::Threshold) return 1.0;
    return side == Side::Right ? 2.0 * k : -2.0 * k;
  }
};

/// Tail basis for a bound-state (or threshold) energy. Throws ContinuumError
/// for eps > v_limit, where no convergent/divergent split exists.
inline AsymptoticBasis asymptotic_basis(double energy, double v_limit,
                                        Side side) {
  const double gap = v_limit - energy;
  if (gap < 0.0)
    throw ContinuumError("energy above the asymptotic limit: continuum regime");
  AsymptoticBasis b;
  b.side = side;
  b.energy = energy;
  b.v_limit = v_limit;
  b.k = std::sqrt(2.0 * gap);
  b.mode = b.k < 1e-12 ? TailMode::Threshold : TailMode::Exponential;
  return b;
}

/// Even and odd quantization values at a right-side node:
///   even = W(conv, C) = [C' + kC] e^{-k x_eval}
///   odd  = W(conv, S) = [S' + kS] e^{-k x_eval}
/// (Threshold mode reduces to C'(x_eval), S'(x_eval).) Zeros in the energy
/// are the even/odd bound states of a parity-invariant potential.
inline std::pair<double, double> parity_conditions(const SolutionPair& pair,
                                                   const AsymptoticBasis& basis,
                                                   double x_eval) {
  if (basis.side != Side::Right)
    throw RangeError("parity conditions are read on the right side");
  const int i = pair.grid.index_of(x_eval);
  const double f = basis.conv(x_eval);
  const double fp = basis.conv_prime(x_eval);
  const double even = wronskian(f, fp, pair.c[i], pair.c_prime[i]);
  const double odd = wronskian(f, fp, pair.s[i], pair.s_prime[i]);
  return {even, odd};
}

/// General quantization determinant
///   W(L_c, C) W(R_c, S) - W(R_c, C) W(L_c, S)
/// with the left Wronskians read at x_left and the right ones at x_right.
/// Its zeros in the energy are the bound states of any potential.
inline double general_determinant(const SolutionPair& pair,
                                  const AsymptoticBasis& basis_left,
                                  const AsymptoticBasis& basis_right,
                                  double x_left, double x_right) {
  if (basis_left.side != Side::Left || basis_right.side != Side::Right)
    throw RangeError("general determinant needs a left and a right basis");
  const int il = pair.grid.index_of(x_left);
  const int ir = pair.grid.index_of(x_right);
  const double lf = basis_left.conv(x_left);
  const double lfp = basis_left.conv_prime(x_left);
  const double rf = basis_right.conv(x_right);
  const double rfp = basis_right.conv_prime(x_right);
  const double w_lc_c = wronskian(lf, lfp, pair.c[il], pair.c_prime[il]);
  const double w_lc_s = wronskian(lf, lfp, pair.s[il], pair.s_prime[il]);
  const double w_rc_c = wronskian(rf, rfp, pair.c[ir], pair.c_prime[ir]);
  const double w_rc_s = wronskian(rf, rfp, pair.s[ir], pair.s_prime[ir]);
  return w_lc_c * w_rc_s - w_rc_c * w_lc_s;
}

/// Coefficient of the divergent right tail in phi = a2 C + b2 S:
///   B3 = W(R_c, phi) / W(R_c, R_d) = W(R_c, phi) / (2k).
/// The smallness of B3 measures how close the energy is to an eigenvalue.
inline double divergent_coefficient(const SolutionPair& pair,
                                    const AsymptoticBasis& basis_right,
                                    double x_eval, double a2, double b2) {
  if (basis_right.side != Side::Right)
    throw RangeError("divergent coefficient is read on the right side");
  if (basis_right.mode == TailMode::Threshold)
    throw DiagnosticError("divergent coefficient is undefined at threshold (k = 0)");
  const int i = pair.grid.index_of(x_eval);
  const double phi = a2 * pair.c[i] + b2 * pair.s[i];
  const double phi_p = a2 * pair.c_prime[i] + b2 * pair.s_prime[i];
  const double f = basis_right.conv(x_eval);
  const double fp = basis_right.conv_prime(x_eval);
  return wronskian(f, fp, phi, phi_p) / (2.0 * basis_right.k);
}

/// Mixture coefficients of a sampled solution y in the canonical pair:
/// A = W(y, S), B = W(C, y), so that y = A C + B S.
inline std::pair<double, double> project_coefficients(double y, double y_prime,
                                                      double c, double c_prime,
                                                      double s, double s_prime) {
  const double a = wronskian(y, y_prime, s, s_prime);
  const double b = wronskian(c, c_prime, y, y_prime);
  return {a, b};
}

/// One evaluated quantization condition, kept for tabulation.
struct QuantizationResult {
  enum class Kind { GeneralDet, EvenW, OddW };
  double energy = 0.0;
  double value = 0.0;
  Kind kind = Kind::GeneralDet;
  double eval_point_left = 0.0;
  double eval_point_right = 0.0;
};

/// Enforce the finiteness invariant when assembling results.
inline QuantizationResult checked(QuantizationResult r) {
  if (!std::isfinite(r.value))
    throw OverflowError("quantization value is not finite", r.eval_point_right);
  return r;
}

}  // namespace wronsk

#endif
