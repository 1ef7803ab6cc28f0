#include "dkp/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

namespace dkp::specfun {

namespace {

constexpr double kHalfLog2Pi = 0.918938533204672741780329736406;
constexpr double kPoleTol = 1e-12;
constexpr double kDegenerateTol = 1e-9;

constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// distance to the nearest non-positive integer, or +inf when Re z > 0.5
double pole_distance(Complex z) {
  if (z.real() > 0.5) return INFINITY;
  double n = std::round(z.real());
  if (n > 0) n = 0;
  return std::abs(z - n);
}

// log Gamma for Re z >= 0.5
Complex lanczos_log(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
  Complex t = z + 7.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

// sin(pi z) with the integer part removed first, accurate near integers
Complex sinpi(Complex z) {
  double n = std::round(z.real());
  Complex s = std::sin(kPi * (z - n));
  return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

bool near_integer(Complex m, double tol) {
  return std::abs(m - std::round(m.real())) < tol;
}

bool exact_integer(Complex m) { return m.imag() == 0.0 && m.real() == std::round(m.real()); }

struct SeriesOut {
  Complex f;
  Complex zdf;  // z dF/dz
};

SeriesOut series(Complex a, Complex b, Complex c, Complex z, bool reg, const SeriesControl& ctl) {
  Complex p = 1.0;  // (a)_n (b)_n z^n / n!, times 1/(c)_n when not regularized
  Complex rg = reg ? rgamma_c(c) : Complex(1.0);
  Complex f = p * rg;
  Complex zdf = 0.0;
  double n_min = std::abs(a) + std::abs(b) + std::abs(c) + 2.0;
  if (reg && c.real() < 0) n_min = std::max(n_min, -c.real() + 3.0);
  int small = 0;
  for (int n = 0; n < ctl.max_terms; ++n) {
    Complex an = a + double(n), bn = b + double(n), cn = c + double(n);
    if (reg) {
      p *= an * bn * z / double(n + 1);
      rg = (std::abs(cn) < 0.5) ? rgamma_c(cn + 1.0) : rg / cn;
    } else {
      p *= an * bn * z / (cn * double(n + 1));
    }
    Complex term = p * rg;
    f += term;
    zdf += double(n + 1) * term;
    double scale = std::abs(f) + std::abs(zdf);
    if (std::abs(term) * double(n + 2) <= ctl.rel_tol * scale + ctl.abs_tol) {
      ++small;
    } else {
      small = 0;
    }
    if (small >= 2 && n + 1 > n_min) {
      double ratio = std::abs(z) * std::abs((an + 1.0) * (bn + 1.0)) /
                     (std::abs(cn + 1.0) * double(n + 2));
      if (ratio < 1.0) return {f, zdf};
    }
    if (!finite(f)) throw NonConvergenceError("2F1 series overflow");
  }
  throw NonConvergenceError("2F1 series did not converge in " + std::to_string(ctl.max_terms) +
                            " terms");
}

// Regularized value via the connection formula around z = 1, with w = 1 - z.
Complex connection_reg(Complex a, Complex b, Complex c, Complex w, const SeriesControl& ctl,
                       bool& perturbed) {
  Complex m = c - a - b;
  if (near_integer(m, kDegenerateTol)) {
    if (exact_integer(m))
      throw DegenerateParameterError("c - a - b is an integer at the z -> 1 - z connection");
    b += kDegenerateTol * Complex(1.0, 1.0);
    m = c - a - b;
    perturbed = true;
  }
  Complex t1 = rgamma_c(c - a) * rgamma_c(c - b) * series(a, b, 1.0 - m, w, true, ctl).f;
  Complex t2 = rgamma_c(a) * rgamma_c(b) * series(c - a, c - b, 1.0 + m, w, true, ctl).f;
  t2 *= complex_power(w, m);
  return kPi / sinpi(m) * (t1 - t2);
}

Complex value(Complex a, Complex b, Complex c, Complex z, Complex w, bool reg,
              const SeriesControl& ctl, bool& perturbed) {
  // pick the variable of smallest modulus among z, z/(z-1), 1-z, 1/(1-z)
  double dz = std::abs(z), dw = std::abs(w);
  double dpz = dz / dw, dpw = 1.0 / dw;
  double best = std::min(std::min(dz, dpz), std::min(dw, dpw));
  if (best >= 1.0) throw DomainError("2F1 argument outside the supported domain");
  if (dz == best) return series(a, b, c, z, reg, ctl).f;
  if (dw == best) {
    Complex f = connection_reg(a, b, c, w, ctl, perturbed);
    return reg ? f : gamma_c(c) * f;
  }
  // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)), complement 1/(1-z)
  Complex pre = complex_power(w, -a);
  Complex zp = -z / w, wp = 1.0 / w;
  if (dpz == best) return pre * series(a, c - b, c, zp, reg, ctl).f;
  Complex f = connection_reg(a, c - b, c, wp, ctl, perturbed);
  return pre * (reg ? f : gamma_c(c) * f);
}

void check_c(Complex c) {
  if (pole_distance(c) < kPoleTol) throw PoleError("2F1: c is a non-positive integer");
}

}  // namespace

void SeriesControl::validate() const {
  if (max_terms < 1) throw DomainError("SeriesControl: max_terms must be >= 1");
  if (!(abs_tol > 0) || !(rel_tol > 0)) throw DomainError("SeriesControl: tolerances must be > 0");
}

Complex log_c(Complex z, LogBranch branch) {
  if (z.imag() == 0.0 && z.real() < 0.0)
    return {std::log(-z.real()), branch == LogBranch::Principal ? kPi : -kPi};
  return std::log(z);
}

Complex sqrt_real(double x) {
  return x >= 0 ? Complex(std::sqrt(x), 0.0) : Complex(0.0, std::sqrt(-x));
}

Complex complex_power(Complex base, Complex exponent, LogBranch branch) {
  if (base == Complex(0.0)) {
    if (exponent.real() > 0) return 0.0;
    throw DomainError("complex_power: zero base with Re(exponent) <= 0");
  }
  return std::exp(exponent * log_c(base, branch));
}

Complex gamma_c(Complex z) {
  if (pole_distance(z) < kPoleTol) throw PoleError("gamma: pole at non-positive integer");
  Complex g;
  if (z.real() < 0.5)
    g = kPi / (sinpi(z) * std::exp(lanczos_log(1.0 - z)));
  else
    g = std::exp(lanczos_log(z));
  if (!finite(g)) throw DomainError("gamma: result overflows");
  return g;
}

Complex rgamma_c(Complex z) {
  if (z.real() >= 0.5) return std::exp(-lanczos_log(z));
  if (exact_integer(z)) return 0.0;
  Complex r = sinpi(z) / kPi * std::exp(lanczos_log(1.0 - z));
  if (!finite(r)) throw DomainError("rgamma: result overflows");
  return r;
}

Hyp2F1Result hyp2f1_eval(Complex a, Complex b, Complex c, const HypArg& arg, bool regularized,
                         const SeriesControl& ctl) {
  if (!regularized) check_c(c);
  Hyp2F1Result out;
  Complex z = arg.z, w = arg.one_minus_z;
  if (std::abs(z) <= 0.5) {
    SeriesOut s = series(a, b, c, z, regularized, ctl);
    out.value = s.f;
    out.scaled_derivative = w * s.zdf;
  } else {
    out.value = value(a, b, c, z, w, regularized, ctl, out.perturbed);
    Complex up = value(a + 1.0, b + 1.0, c + 1.0, z, w, regularized, ctl, out.perturbed);
    Complex fac = regularized ? a * b : a * b / c;
    out.scaled_derivative = z * w * fac * up;
  }
  if (!finite(out.value) || !finite(out.scaled_derivative))
    throw NonConvergenceError("2F1: non-finite result");
  return out;
}

Complex hyp2f1(Complex a, Complex b, Complex c, Complex z, const SeriesControl& ctl) {
  check_c(c);
  bool perturbed = false;
  Complex f = value(a, b, c, z, 1.0 - z, false, ctl, perturbed);
  if (!finite(f)) throw NonConvergenceError("2F1: non-finite result");
  return f;
}

Complex hyp2f1_regularized(Complex a, Complex b, Complex c, Complex z, const SeriesControl& ctl) {
  bool perturbed = false;
  Complex f = value(a, b, c, z, 1.0 - z, true, ctl, perturbed);
  if (!finite(f)) throw NonConvergenceError("2F1: non-finite result");
  return f;
}

}  // namespace dkp::specfun
