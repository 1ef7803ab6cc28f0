#pragma once

// Complex Gamma, Gauss hypergeometric 2F1 and its regularized form.
//
// Every branch choice of the solver (logs, powers, square roots) is made here.
// The hypergeometric routines cover real z < 1 with complex a, b, c, plus the
// disc |z| <= 0.5 for complex z:
//
//   |z| <= 0.5           direct power series
//   z < -0.5             Pfaff transformation to z/(z-1) in (1/3, 1)
//   0.5 < z < 1          connection formula around z = 1
//
// Arguments near 1 lose their distance to 1 in double precision, so the
// evaluation entry point takes the argument as a pair (z, 1 - z) with the
// complement supplied by the caller when it is known more accurately.

#include <complex>

#include "dkp/errors.hpp"

namespace dkp::specfun {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

struct SeriesControl {
  int max_terms = 20000;
  double abs_tol = 1e-300;
  double rel_tol = 1e-17;

  void validate() const;
};

/// Log(-t) for t > 0: Principal gives ln t + i*pi, Lower gives ln t - i*pi.
enum class LogBranch { Principal, Lower };

/// Logarithm with imaginary part in (-pi, pi] (Principal) or [-pi, pi) (Lower).
Complex log_c(Complex z, LogBranch branch = LogBranch::Principal);

/// Principal square root of a real number; negative input gives +i*sqrt(|x|).
Complex sqrt_real(double x);

/// exp(exponent * Log(base)).
Complex complex_power(Complex base, Complex exponent, LogBranch branch = LogBranch::Principal);

/// Gamma(z). Lanczos approximation (g = 7, 9 terms), reflection for Re z < 0.5.
Complex gamma_c(Complex z);

/// 1/Gamma(z); entire, exactly zero at non-positive integers.
Complex rgamma_c(Complex z);

/// Argument of a hypergeometric function with an accurately known complement.
struct HypArg {
  Complex z;
  Complex one_minus_z;

  static HypArg from_z(Complex z) { return {z, 1.0 - z}; }
  static HypArg from_complement(Complex w) { return {1.0 - w, w}; }
};

struct Hyp2F1Result {
  Complex value;
  /// z (1 - z) dF/dz, bounded as z -> 1 where dF/dz itself is not.
  Complex scaled_derivative;
  /// The degenerate-connection nudge was applied somewhere in the evaluation.
  bool perturbed = false;
};

/// 2F1(a, b; c; z).
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z, const SeriesControl& ctl = {});

/// 2F1(a, b; c; z) / Gamma(c), finite for every c.
Complex hyp2f1_regularized(Complex a, Complex b, Complex c, Complex z,
                           const SeriesControl& ctl = {});

/// Value and scaled derivative in one call, regular or regularized.
Hyp2F1Result hyp2f1_eval(Complex a, Complex b, Complex c, const HypArg& arg,
                         bool regularized = false, const SeriesControl& ctl = {});

}  // namespace dkp::specfun
